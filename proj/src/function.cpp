#include "measkit/function.hpp"

#include <algorithm>

namespace measkit {

namespace {

XReal solve_for(const XReal& y, const AffinePiece& p) {
  if (!y.is_finite()) return sgn(p.a) > 0 ? y : neg(y);
  return XReal((y.value() - p.b) / p.a);
}

Interval empty_interval() { return Interval::open(XReal(0), XReal(0)); }

const Interval kNonneg({XReal(0), true}, {XReal::pos_inf(), false});
const Interval kNegative = Interval::open(XReal::neg_inf(), XReal(0));

const AffinePiece* find_piece(const std::vector<AffinePiece>& pieces, const Rational& x) {
  for (const AffinePiece& p : pieces)
    if (p.interval.contains(x)) return &p;
  return nullptr;
}

}  // namespace

Interval affine_preimage(const AffinePiece& p, const Interval& range) {
  if (p.interval.empty() || range.empty()) return empty_interval();
  if (sgn(p.a) == 0) return range.contains(p.b) ? p.interval : empty_interval();
  Bound lo;
  Bound hi;
  if (sgn(p.a) > 0) {
    lo = {solve_for(range.lo().value, p), range.lo().closed};
    hi = {solve_for(range.hi().value, p), range.hi().closed};
  } else {
    lo = {solve_for(range.hi().value, p), range.hi().closed};
    hi = {solve_for(range.lo().value, p), range.lo().closed};
  }
  return intersect(p.interval, Interval(lo, hi));
}

MeasurableFn MeasurableFn::finite_map(const MeasurableSpace& space, std::vector<XReal> values) {
  if (!space.is_finite()) fail(ErrorCode::IncompatibleSpace, "finite maps need a finite space");
  if (values.size() != static_cast<std::size_t>(space.universe().size()))
    fail(ErrorCode::PreconditionFailed, "finite map must give one value per point");
  for (Mask atom : space.atoms()) {
    int first = std::countr_zero(atom);
    for (int i = first + 1; i < 32; ++i)
      if ((atom >> i & 1u) && values[static_cast<std::size_t>(i)] != values[static_cast<std::size_t>(first)])
        fail(ErrorCode::NotMeasurable, "values differ inside the atom " + format_mask(space.universe(), atom));
  }
  MeasurableFn f(FnKind::FiniteMap, space);
  f.values_ = std::move(values);
  return f;
}

MeasurableFn MeasurableFn::piecewise_linear(std::vector<AffinePiece> pieces) {
  for (const AffinePiece& p : pieces) {
    if (p.interval.empty()) fail(ErrorCode::PreconditionFailed, "empty piece " + p.interval.to_string());
    if (!p.interval.bounded()) fail(ErrorCode::PreconditionFailed, "unbounded piece " + p.interval.to_string());
  }
  std::sort(pieces.begin(), pieces.end(), [](const AffinePiece& x, const AffinePiece& y) {
    const Bound& a = x.interval.lo();
    const Bound& b = y.interval.lo();
    if (a.value != b.value) return a.value < b.value;
    return a.closed && !b.closed;
  });
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (!intersect(pieces[i - 1].interval, pieces[i].interval).empty())
      fail(ErrorCode::PreconditionFailed,
           "pieces " + pieces[i - 1].interval.to_string() + " and " + pieces[i].interval.to_string() + " overlap");
  MeasurableFn f(FnKind::PiecewiseLinear, MeasurableSpace::real_line());
  f.pieces_ = std::move(pieces);
  return f;
}

MeasurableFn MeasurableFn::step(SimpleFn g) {
  MeasurableFn f(FnKind::Step, g.space());
  f.simple_ = std::move(g);
  return f;
}

XReal MeasurableFn::eval(const Point& x) const {
  switch (kind_) {
    case FnKind::FiniteMap: {
      if (!space_.contains(x)) fail(ErrorCode::PreconditionFailed, "point outside the space");
      return values_[static_cast<std::size_t>(std::get<int>(x))];
    }
    case FnKind::PiecewiseLinear: {
      const Rational* r = std::get_if<Rational>(&x);
      if (!r) fail(ErrorCode::PreconditionFailed, "piecewise linear functions take real arguments");
      const AffinePiece* p = find_piece(pieces_, *r);
      return p ? XReal(p->at(*r)) : XReal();
    }
    case FnKind::Step: return XReal(simple_->eval(x));
  }
  return XReal();
}

bool MeasurableFn::nonneg() const {
  switch (kind_) {
    case FnKind::FiniteMap:
      return std::all_of(values_.begin(), values_.end(), [](const XReal& v) { return v.sign() >= 0; });
    case FnKind::PiecewiseLinear: {
      auto b = bounds_on(*this, space_.full_set());
      return !b || b->first.sign() >= 0;
    }
    case FnKind::Step: return simple_->nonneg();
  }
  return false;
}

IntervalSet MeasurableFn::domain() const {
  std::vector<Interval> parts;
  for (const AffinePiece& p : pieces_) parts.push_back(p.interval);
  return IntervalSet::canonicalize(std::move(parts));
}

std::vector<Rational> MeasurableFn::breakpoints() const {
  switch (kind_) {
    case FnKind::FiniteMap: return {};
    case FnKind::PiecewiseLinear: {
      std::vector<Rational> out;
      for (const AffinePiece& p : pieces_) {
        out.push_back(p.interval.lo().value.value());
        out.push_back(p.interval.hi().value.value());
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    case FnKind::Step: return simple_->breakpoints();
  }
  return {};
}

std::string MeasurableFn::describe() const {
  std::string s;
  switch (kind_) {
    case FnKind::FiniteMap:
      s = "map(";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ", ";
        s += space_.universe().label(static_cast<int>(i)) + ": " + values_[i].to_string();
      }
      return s + ")";
    case FnKind::PiecewiseLinear:
      s = "pwl(";
      for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) s += ", ";
        s += pieces_[i].interval.to_string() + ": " + to_string(pieces_[i].a) + "x + " + to_string(pieces_[i].b);
      }
      return s + ")";
    case FnKind::Step:
      s = "step(";
      for (std::size_t i = 0; i < simple_->terms().size(); ++i) {
        const Term& t = simple_->terms()[i];
        if (i) s += " + ";
        s += to_string(t.coef) + "*1" + format_set(space_, t.support);
      }
      return s + ")";
  }
  return s;
}

namespace {

void widen(std::optional<std::pair<XReal, XReal>>& acc, const XReal& lo, const XReal& hi) {
  if (!acc) acc.emplace(lo, hi);
  else acc = std::make_pair(min(acc->first, lo), max(acc->second, hi));
}

}  // namespace

std::optional<std::pair<XReal, XReal>> bounds_on(const MeasurableFn& f, const MeasurableSet& a) {
  f.space().require_measurable(a);
  std::optional<std::pair<XReal, XReal>> acc;
  switch (f.kind()) {
    case FnKind::FiniteMap: {
      Mask m = std::get<Mask>(a);
      for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) widen(acc, f.values()[static_cast<std::size_t>(i)], f.values()[static_cast<std::size_t>(i)]);
      return acc;
    }
    case FnKind::PiecewiseLinear: {
      const IntervalSet& s = std::get<IntervalSet>(a);
      for (const AffinePiece& p : f.pieces()) {
        for (const auto range = intersect(s, IntervalSet(p.interval)); const Interval& c : range.components()) {
          XReal u(p.at(c.lo().value.value()));
          XReal v(p.at(c.hi().value.value()));
          widen(acc, min(u, v), max(u, v));
        }
      }
      if (!difference(s, f.domain()).empty()) widen(acc, XReal(), XReal());
      return acc;
    }
    case FnKind::Step: {
      SimpleFn c = canonicalize(f.simple());
      for (const Term& t : c.terms())
        if (!set_empty(set_intersect(t.support, a))) widen(acc, XReal(t.coef), XReal(t.coef));
      return acc;
    }
  }
  return acc;
}

namespace {

std::vector<AffinePiece> as_pieces(const MeasurableFn& f) {
  if (f.kind() == FnKind::PiecewiseLinear) return f.pieces();
  if (f.kind() != FnKind::Step || f.space().kind() != SpaceKind::RealLine)
    fail(ErrorCode::UnsupportedShape, "cannot combine " + f.describe() + " with a piecewise linear function");
  std::vector<AffinePiece> out;
  for (const auto range = canonicalize(f.simple()); const Term& t : range.terms()) {
    if (sgn(t.coef) == 0) continue;
    for (const Interval& c : std::get<IntervalSet>(t.support).components()) {
      if (!c.bounded())
        fail(ErrorCode::UnsupportedShape, "step function is nonzero on the unbounded set " + c.to_string());
      out.push_back(AffinePiece{c, 0, t.coef});
    }
  }
  return out;
}

MeasurableFn combine_pieces(const Rational& alpha, const std::vector<AffinePiece>& f, const Rational& beta,
                            const std::vector<AffinePiece>& g) {
  std::vector<Rational> cuts;
  std::vector<Interval> dom;
  for (const auto* v : {&f, &g})
    for (const AffinePiece& p : *v) {
      cuts.push_back(p.interval.lo().value.value());
      cuts.push_back(p.interval.hi().value.value());
      dom.push_back(p.interval);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  IntervalSet domain = IntervalSet::canonicalize(dom);
  std::vector<AffinePiece> out;
  for (const Piece& e : elementary_pieces(cuts)) {
    if (!domain.contains(e.representative)) continue;
    Rational a = 0;
    Rational b = 0;
    if (const AffinePiece* p = find_piece(f, e.representative)) {
      a += alpha * p->a;
      b += alpha * p->b;
    }
    if (const AffinePiece* p = find_piece(g, e.representative)) {
      a += beta * p->a;
      b += beta * p->b;
    }
    out.push_back(AffinePiece{e.interval, a, b});
  }
  return MeasurableFn::piecewise_linear(std::move(out));
}

std::vector<AffinePiece> pieces_in(const MeasurableFn& f, const Interval& range, bool negate) {
  std::vector<AffinePiece> out;
  for (const AffinePiece& p : f.pieces()) {
    Interval part = affine_preimage(p, range);
    if (part.empty()) continue;
    out.push_back(negate ? AffinePiece{part, -p.a, -p.b} : AffinePiece{part, p.a, p.b});
  }
  return out;
}

}  // namespace

MeasurableFn linear_combination(const Rational& alpha, const MeasurableFn& f, const Rational& beta,
                                const MeasurableFn& g) {
  if (f.kind() == FnKind::FiniteMap || g.kind() == FnKind::FiniteMap) {
    if (f.kind() != g.kind() || !(f.space() == g.space()))
      fail(ErrorCode::SpaceMismatch, "finite maps combine only with finite maps on the same space");
    std::vector<XReal> v;
    for (std::size_t i = 0; i < f.values().size(); ++i)
      v.push_back(add_checked(mul_mt(XReal(alpha), f.values()[i]), mul_mt(XReal(beta), g.values()[i])));
    return MeasurableFn::finite_map(f.space(), std::move(v));
  }
  if (f.kind() == FnKind::Step && g.kind() == FnKind::Step)
    return MeasurableFn::step(combine(CombineOp::Add, scale(alpha, f.simple()), scale(beta, g.simple())));
  return combine_pieces(alpha, as_pieces(f), beta, as_pieces(g));
}

MeasurableFn abs(const MeasurableFn& f) {
  switch (f.kind()) {
    case FnKind::FiniteMap: {
      std::vector<XReal> v;
      for (const XReal& x : f.values()) v.push_back(abs(x));
      return MeasurableFn::finite_map(f.space(), std::move(v));
    }
    case FnKind::PiecewiseLinear: {
      auto out = pieces_in(f, kNonneg, false);
      auto neg_part = pieces_in(f, kNegative, true);
      out.insert(out.end(), neg_part.begin(), neg_part.end());
      return MeasurableFn::piecewise_linear(std::move(out));
    }
    case FnKind::Step: {
      std::vector<Term> terms = to_disjoint(f.simple()).terms();
      for (Term& t : terms) t.coef = ::abs(t.coef);
      return MeasurableFn::step(SimpleFn(f.space(), std::move(terms), Repr::Disjoint));
    }
  }
  return f;
}

std::pair<MeasurableFn, MeasurableFn> split_parts(const MeasurableFn& f) {
  switch (f.kind()) {
    case FnKind::FiniteMap: {
      std::vector<XReal> plus;
      std::vector<XReal> minus;
      for (const XReal& x : f.values()) {
        plus.push_back(max(x, XReal()));
        minus.push_back(max(neg(x), XReal()));
      }
      return {MeasurableFn::finite_map(f.space(), std::move(plus)),
              MeasurableFn::finite_map(f.space(), std::move(minus))};
    }
    case FnKind::PiecewiseLinear: {
      auto zero_on = [&](const Interval& range) {
        std::vector<AffinePiece> out;
        for (const AffinePiece& p : f.pieces()) {
          Interval part = affine_preimage(p, range);
          if (!part.empty()) out.push_back(AffinePiece{part, 0, 0});
        }
        return out;
      };
      auto plus = pieces_in(f, kNonneg, false);
      auto plus_zero = zero_on(kNegative);
      plus.insert(plus.end(), plus_zero.begin(), plus_zero.end());
      auto minus = pieces_in(f, kNegative, true);
      auto minus_zero = zero_on(kNonneg);
      minus.insert(minus.end(), minus_zero.begin(), minus_zero.end());
      return {MeasurableFn::piecewise_linear(std::move(plus)), MeasurableFn::piecewise_linear(std::move(minus))};
    }
    case FnKind::Step: {
      std::vector<Term> plus = to_disjoint(f.simple()).terms();
      std::vector<Term> minus = plus;
      for (Term& t : plus) t.coef = sgn(t.coef) > 0 ? t.coef : Rational(0);
      for (Term& t : minus) t.coef = sgn(t.coef) < 0 ? Rational(-t.coef) : Rational(0);
      return {MeasurableFn::step(SimpleFn(f.space(), std::move(plus), Repr::Disjoint)),
              MeasurableFn::step(SimpleFn(f.space(), std::move(minus), Repr::Disjoint))};
    }
  }
  return {f, f};
}

MeasurableSet abs_level_set(const MeasurableFn& f, const Rational& c) {
  if (sgn(c) <= 0) fail(ErrorCode::PreconditionFailed, "level must be positive");
  switch (f.kind()) {
    case FnKind::FiniteMap: {
      Mask m = 0;
      for (std::size_t i = 0; i < f.values().size(); ++i)
        if (!(abs(f.values()[i]) < XReal(c))) m |= Mask{1} << i;
      return m;
    }
    case FnKind::PiecewiseLinear: {
      std::vector<Interval> parts;
      Interval up({XReal(c), true}, {XReal::pos_inf(), false});
      Interval down({XReal::neg_inf(), false}, {XReal(-c), true});
      for (const AffinePiece& p : f.pieces()) {
        parts.push_back(affine_preimage(p, up));
        parts.push_back(affine_preimage(p, down));
      }
      std::erase_if(parts, [](const Interval& i) { return i.empty(); });
      return IntervalSet::canonicalize(std::move(parts));
    }
    case FnKind::Step: {
      MeasurableSet out = f.space().empty_set();
      for (const auto range = canonicalize(f.simple()); const Term& t : range.terms())
        if (::abs(t.coef) >= c) out = set_union(out, t.support);
      return out;
    }
  }
  return Mask{0};
}

bool pointwise_leq(const MeasurableFn& f, const MeasurableFn& g, std::string* witness) {
  auto note = [&](const std::string& w) {
    if (witness) *witness = w;
    return false;
  };
  if (f.kind() == FnKind::FiniteMap || g.kind() == FnKind::FiniteMap) {
    if (f.kind() != g.kind() || !(f.space() == g.space()))
      fail(ErrorCode::SpaceMismatch, "finite maps compare only with finite maps on the same space");
    for (std::size_t i = 0; i < f.values().size(); ++i)
      if (g.values()[i] < f.values()[i])
        return note("at " + f.space().universe().label(static_cast<int>(i)) + ": " + f.values()[i].to_string() +
                    " > " + g.values()[i].to_string());
    return true;
  }
  MeasurableFn d = linear_combination(1, g, -1, f);
  if (d.kind() == FnKind::Step) {
    for (const auto range = canonicalize(d.simple()); const Term& t : range.terms())
      if (sgn(t.coef) < 0)
        return note("on " + format_set(d.space(), t.support) + " the difference is " + to_string(t.coef));
    return true;
  }
  for (const AffinePiece& p : d.pieces()) {
    Interval bad = affine_preimage(p, kNegative);
    if (!bad.empty()) return note("on " + bad.to_string() + " the first function is larger");
  }
  return true;
}

std::vector<Point> evaluation_points(const std::vector<const MeasurableFn*>& fns) {
  std::vector<Point> out;
  if (fns.empty()) return out;
  const MeasurableSpace& space = fns.front()->space();
  if (space.is_finite()) {
    for (int i = 0; i < space.universe().size(); ++i) out.emplace_back(i);
    return out;
  }
  if (space.kind() != SpaceKind::RealLine) fail(ErrorCode::UnsupportedShape, "no evaluation grid on the plane");
  std::vector<Rational> cuts;
  for (const MeasurableFn* f : fns) {
    auto b = f->breakpoints();
    cuts.insert(cuts.end(), b.begin(), b.end());
  }
  for (const Rational& x : test_grid(std::move(cuts))) out.emplace_back(x);
  return out;
}

}  // namespace measkit
