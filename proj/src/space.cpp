#include "measkit/space.hpp"

#include <algorithm>

namespace measkit {

struct MeasurableSpace::Impl {
  SpaceKind kind = SpaceKind::RealLine;
  SubsetFamily sigma;
  std::vector<Mask> atoms;
  IntervalSet domain = IntervalSet::real_line();
  std::shared_ptr<const MeasurableSpace> left;
  std::shared_ptr<const MeasurableSpace> right;
};

MeasurableSpace MeasurableSpace::finite(const SubsetFamily& sigma) {
  SystemCheck check = is_system(SystemKind::SigmaAlgebra, sigma);
  if (!check.ok)
    fail(ErrorCode::PreconditionFailed, "space family is not a sigma-algebra: " + check.violated_axiom);
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::Finite;
  impl->sigma = sigma;
  impl->atoms = measkit::atoms(sigma);
  return MeasurableSpace(std::move(impl));
}

MeasurableSpace MeasurableSpace::finite(const FiniteUniverse& universe) {
  return finite(SubsetFamily::power_set(universe));
}

MeasurableSpace MeasurableSpace::real_line() { return real_line(IntervalSet::real_line()); }

MeasurableSpace MeasurableSpace::real_line(const IntervalSet& domain) {
  auto impl = std::make_shared<Impl>();
  impl->kind = SpaceKind::RealLine;
  impl->domain = domain;
  return MeasurableSpace(std::move(impl));
}

MeasurableSpace MeasurableSpace::product(const MeasurableSpace& left, const MeasurableSpace& right) {
  auto impl = std::make_shared<Impl>();
  if (left.kind() == SpaceKind::Finite && right.kind() == SpaceKind::Finite) {
    impl->kind = SpaceKind::FiniteProduct;
    impl->sigma = product_sigma(left.sigma(), right.sigma());
    impl->atoms = measkit::atoms(impl->sigma);
  } else if (left.kind() == SpaceKind::RealLine && right.kind() == SpaceKind::RealLine &&
             left.domain() == IntervalSet::real_line() && right.domain() == IntervalSet::real_line()) {
    impl->kind = SpaceKind::Plane;
  } else {
    fail(ErrorCode::UnsupportedFactorKinds,
         "products are supported for finite x finite and line x line only");
  }
  impl->left = std::make_shared<const MeasurableSpace>(left);
  impl->right = std::make_shared<const MeasurableSpace>(right);
  return MeasurableSpace(std::move(impl));
}

SpaceKind MeasurableSpace::kind() const { return impl_->kind; }

const FiniteUniverse& MeasurableSpace::universe() const {
  if (!is_finite()) fail(ErrorCode::IncompatibleSpace, "universe() of a non-finite space");
  return impl_->sigma.universe();
}

const SubsetFamily& MeasurableSpace::sigma() const {
  if (!is_finite()) fail(ErrorCode::IncompatibleSpace, "sigma() of a non-finite space");
  return impl_->sigma;
}

const std::vector<Mask>& MeasurableSpace::atoms() const {
  if (!is_finite()) fail(ErrorCode::IncompatibleSpace, "atoms() of a non-finite space");
  return impl_->atoms;
}

const MeasurableSpace& MeasurableSpace::left() const {
  if (!impl_->left) fail(ErrorCode::IncompatibleSpace, "left() of a non-product space");
  return *impl_->left;
}

const MeasurableSpace& MeasurableSpace::right() const {
  if (!impl_->right) fail(ErrorCode::IncompatibleSpace, "right() of a non-product space");
  return *impl_->right;
}

const IntervalSet& MeasurableSpace::domain() const {
  if (kind() != SpaceKind::RealLine) fail(ErrorCode::IncompatibleSpace, "domain() of a non-line space");
  return impl_->domain;
}

MeasurableSet MeasurableSpace::full_set() const {
  switch (kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct: return universe().full();
    case SpaceKind::RealLine: return impl_->domain;
    case SpaceKind::Plane: return BoxSet::plane();
  }
  return Mask{0};
}

MeasurableSet MeasurableSpace::empty_set() const {
  switch (kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct: return Mask{0};
    case SpaceKind::RealLine: return IntervalSet();
    case SpaceKind::Plane: return BoxSet();
  }
  return Mask{0};
}

bool MeasurableSpace::is_measurable(const MeasurableSet& s) const {
  switch (kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct:
      return std::holds_alternative<Mask>(s) && sigma().contains(std::get<Mask>(s));
    case SpaceKind::RealLine:
      return std::holds_alternative<IntervalSet>(s) &&
             std::get<IntervalSet>(s).subset_of(impl_->domain);
    case SpaceKind::Plane: return std::holds_alternative<BoxSet>(s);
  }
  return false;
}

void MeasurableSpace::require_measurable(const MeasurableSet& s) const {
  if (!is_measurable(s))
    fail(ErrorCode::NotMeasurable, format_set(*this, s) + " is not measurable in " + describe());
}

bool MeasurableSpace::contains(const Point& p) const {
  switch (kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct:
      return std::holds_alternative<int>(p) && std::get<int>(p) >= 0 &&
             std::get<int>(p) < universe().size();
    case SpaceKind::RealLine:
      return std::holds_alternative<Rational>(p) && impl_->domain.contains(std::get<Rational>(p));
    case SpaceKind::Plane: return std::holds_alternative<std::pair<Rational, Rational>>(p);
  }
  return false;
}

std::string MeasurableSpace::describe() const {
  switch (kind()) {
    case SpaceKind::Finite:
      return "finite space of " + std::to_string(universe().size()) + " points";
    case SpaceKind::FiniteProduct:
      return "finite product " + left().describe() + " x " + right().describe();
    case SpaceKind::RealLine:
      return impl_->domain == IntervalSet::real_line() ? "real line"
                                                       : "real line traced on " + impl_->domain.to_string();
    case SpaceKind::Plane: return "plane";
  }
  return "?";
}

bool operator==(const MeasurableSpace& a, const MeasurableSpace& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SpaceKind::Finite: return a.sigma() == b.sigma();
    case SpaceKind::FiniteProduct: return a.left() == b.left() && a.right() == b.right();
    case SpaceKind::RealLine: return a.domain() == b.domain();
    case SpaceKind::Plane: return true;
  }
  return false;
}

namespace {

template <class Op>
MeasurableSet binary(const MeasurableSet& a, const MeasurableSet& b, Op op) {
  if (a.index() != b.index()) fail(ErrorCode::SpaceMismatch, "sets from different spaces");
  return std::visit(
      [&](const auto& x) -> MeasurableSet {
        using T = std::decay_t<decltype(x)>;
        return op(x, std::get<T>(b));
      },
      a);
}

}  // namespace

MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> MeasurableSet {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Mask>) return Mask(x & y);
    else return intersect(x, y);
  });
}

MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> MeasurableSet {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Mask>) return Mask(x | y);
    else return unite(x, y);
  });
}

MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b) {
  return binary(a, b, [](const auto& x, const auto& y) -> MeasurableSet {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Mask>) return Mask(x & ~y);
    else return difference(x, y);
  });
}

MeasurableSet set_complement(const MeasurableSpace& space, const MeasurableSet& a) {
  return set_difference(space.full_set(), a);
}

bool set_empty(const MeasurableSet& a) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Mask>) return x == 0;
        else return x.empty();
      },
      a);
}

bool set_contains(const MeasurableSet& a, const Point& p) {
  if (const auto* m = std::get_if<Mask>(&a)) {
    const int* i = std::get_if<int>(&p);
    return i && *i >= 0 && *i < 32 && (*m >> *i & 1u);
  }
  if (const auto* s = std::get_if<IntervalSet>(&a)) {
    const Rational* x = std::get_if<Rational>(&p);
    return x && s->contains(*x);
  }
  const auto& boxes = std::get<BoxSet>(a);
  const auto* xy = std::get_if<std::pair<Rational, Rational>>(&p);
  return xy && boxes.contains(xy->first, xy->second);
}

bool set_subset(const MeasurableSet& a, const MeasurableSet& b) {
  return set_empty(set_difference(a, b));
}

std::string format_set(const MeasurableSpace& space, const MeasurableSet& s) {
  if (const auto* m = std::get_if<Mask>(&s)) {
    if (space.is_finite()) return format_mask(space.universe(), *m);
    return "mask " + std::to_string(*m);
  }
  if (const auto* i = std::get_if<IntervalSet>(&s)) return i->to_string();
  return std::get<BoxSet>(s).to_string();
}

std::string format_point(const MeasurableSpace& space, const Point& p) {
  if (const auto* i = std::get_if<int>(&p)) {
    if (space.is_finite() && *i >= 0 && *i < space.universe().size()) return space.universe().label(*i);
    return "#" + std::to_string(*i);
  }
  if (const auto* x = std::get_if<Rational>(&p)) return to_string(*x);
  const auto& xy = std::get<std::pair<Rational, Rational>>(p);
  return "(" + to_string(xy.first) + "," + to_string(xy.second) + ")";
}

std::vector<Rational> test_grid(std::vector<Rational> breakpoints) {
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());
  std::vector<Rational> grid;
  for (const Piece& p : elementary_pieces(breakpoints)) grid.push_back(p.representative);
  return grid;
}

}  // namespace measkit
