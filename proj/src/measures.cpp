#include "measkit/measures.hpp"

#include <bit>
#include <functional>
#include <optional>
#include <unordered_set>

namespace measkit {

struct Measure::Node {
  MeasureKind kind = MeasureKind::LebesgueR;
  MeasurableSpace space = MeasurableSpace::real_line();
  std::vector<XReal> weights;
  MeasurableSet subset = Mask{0};
  Point point = 0;
  std::shared_ptr<const Measure> base;
  std::shared_ptr<const Measure> left;
  std::shared_ptr<const Measure> right;
};

namespace {

int lowest_bit(Mask m) { return std::countr_zero(m); }

}  // namespace

Measure Measure::table_unchecked(const MeasurableSpace& space, std::vector<XReal> weights) {
  if (!space.is_finite()) fail(ErrorCode::IncompatibleSpace, "weight tables need a finite space");
  if (weights.size() != static_cast<std::size_t>(space.universe().size()))
    fail(ErrorCode::PreconditionFailed, "weight table size does not match the universe");
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::FiniteTable;
  node->space = space;
  node->weights = std::move(weights);
  return Measure(std::move(node));
}

Measure Measure::table(const MeasurableSpace& space, std::vector<XReal> weights) {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i].sign() < 0)
      fail(ErrorCode::PreconditionFailed, "negative weight " + weights[i].to_string() + " at point " +
                                              std::to_string(i));
  return table_unchecked(space, std::move(weights));
}

Measure Measure::zero(const MeasurableSpace& space) {
  if (space.is_finite()) return table(space, std::vector<XReal>(static_cast<std::size_t>(space.universe().size())));
  if (space.kind() == SpaceKind::Plane) return restricted(lebesgue2(), space.empty_set());
  return restricted(lebesgue(), space.empty_set());
}

Measure Measure::counting(const MeasurableSpace& space, const MeasurableSet& y) {
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::Counting;
  node->space = space;
  if (space.is_finite()) {
    if (!std::holds_alternative<Mask>(y) || !space.universe().contains(std::get<Mask>(y)))
      fail(ErrorCode::PreconditionFailed, "counting set must be a subset of the universe");
  } else if (space.kind() == SpaceKind::RealLine) {
    if (!std::holds_alternative<IntervalSet>(y))
      fail(ErrorCode::PreconditionFailed, "counting set on the line must be an interval set");
  } else {
    fail(ErrorCode::IncompatibleSpace, "counting measures on the plane are not supported");
  }
  node->subset = y;
  return Measure(std::move(node));
}

Measure Measure::dirac(const MeasurableSpace& space, const Point& at) {
  if (!space.contains(at)) fail(ErrorCode::PreconditionFailed, "Dirac point outside the space");
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::Dirac;
  node->space = space;
  node->point = at;
  return Measure(std::move(node));
}

Measure Measure::lebesgue() {
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::LebesgueR;
  node->space = MeasurableSpace::real_line();
  return Measure(std::move(node));
}

Measure Measure::lebesgue2() { return tensor_measure(lebesgue(), lebesgue()); }

Measure Measure::restricted(const Measure& base, const MeasurableSet& y) {
  base.space().require_measurable(y);
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::Restricted;
  node->space = base.space();
  node->subset = y;
  node->base = std::make_shared<const Measure>(base);
  return Measure(std::move(node));
}

Measure Measure::trace(const Measure& base, const MeasurableSet& y) {
  const MeasurableSpace& s = base.space();
  s.require_measurable(y);
  auto node = std::make_shared<Node>();
  node->kind = MeasureKind::Trace;
  if (s.is_finite())
    node->space = MeasurableSpace::finite(trace_family(s.sigma(), std::get<Mask>(y)));
  else if (s.kind() == SpaceKind::RealLine)
    node->space = MeasurableSpace::real_line(std::get<IntervalSet>(y));
  else
    fail(ErrorCode::UnsupportedShape, "trace measures on the plane are not supported");
  node->subset = y;
  node->base = std::make_shared<const Measure>(base);
  return Measure(std::move(node));
}

Measure tensor_measure(const Measure& left, const Measure& right) {
  auto node = std::make_shared<Measure::Node>();
  SpaceKind lk = left.space().kind();
  SpaceKind rk = right.space().kind();
  if (lk == SpaceKind::Finite && rk == SpaceKind::Finite) {
    node->kind = MeasureKind::Tensor;
  } else if (left.kind() == MeasureKind::LebesgueR && right.kind() == MeasureKind::LebesgueR) {
    node->kind = MeasureKind::Lebesgue2;
  } else {
    fail(ErrorCode::UnsupportedFactorKinds,
         "tensor products need two finite-space factors or two Lebesgue factors");
  }
  node->space = MeasurableSpace::product(left.space(), right.space());
  node->left = std::make_shared<const Measure>(left);
  node->right = std::make_shared<const Measure>(right);
  return Measure(std::move(node));
}

MeasureKind Measure::kind() const { return node_->kind; }
const MeasurableSpace& Measure::space() const { return node_->space; }
const std::vector<XReal>& Measure::weights() const { return node_->weights; }
const MeasurableSet& Measure::subset() const { return node_->subset; }
const Point& Measure::point() const { return node_->point; }

const Measure& Measure::base() const {
  if (!node_->base) fail(ErrorCode::PreconditionFailed, "measure has no base");
  return *node_->base;
}
const Measure& Measure::left() const {
  if (!node_->left) fail(ErrorCode::PreconditionFailed, "measure is not a product");
  return *node_->left;
}
const Measure& Measure::right() const {
  if (!node_->right) fail(ErrorCode::PreconditionFailed, "measure is not a product");
  return *node_->right;
}

std::string Measure::describe() const {
  switch (kind()) {
    case MeasureKind::FiniteTable: {
      std::string s = "table(";
      for (std::size_t i = 0; i < weights().size(); ++i) {
        if (i) s += ", ";
        s += space().universe().label(static_cast<int>(i)) + ": " + weights()[i].to_string();
      }
      return s + ")";
    }
    case MeasureKind::Counting: return "counting(" + format_set(space(), subset()) + ")";
    case MeasureKind::Dirac: return "dirac(" + format_point(space(), point()) + ")";
    case MeasureKind::LebesgueR: return "lebesgue";
    case MeasureKind::Restricted:
      return "restricted(" + base().describe() + ", " + format_set(base().space(), subset()) + ")";
    case MeasureKind::Trace:
      return "trace(" + base().describe() + ", " + format_set(base().space(), subset()) + ")";
    case MeasureKind::Tensor: return "tensor(" + left().describe() + ", " + right().describe() + ")";
    case MeasureKind::Lebesgue2: return "lebesgue2";
  }
  return "?";
}

namespace {

XReal count_points(const IntervalSet& s) {
  long n = 0;
  for (const Interval& i : s.components()) {
    if (!i.is_singleton()) return XReal::pos_inf();
    ++n;
  }
  return XReal(n);
}

}  // namespace

XReal measure(const Measure& mu, const MeasurableSet& a) {
  const MeasurableSpace& space = mu.space();
  space.require_measurable(a);
  switch (mu.kind()) {
    case MeasureKind::FiniteTable: {
      Mask m = std::get<Mask>(a);
      XReal total;
      for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) total = total + mu.weights()[static_cast<std::size_t>(i)];
      return total;
    }
    case MeasureKind::Counting:
      if (space.is_finite())
        return XReal(std::popcount(std::get<Mask>(a) & std::get<Mask>(mu.subset())));
      return count_points(intersect(std::get<IntervalSet>(a), std::get<IntervalSet>(mu.subset())));
    case MeasureKind::Dirac: return XReal(set_contains(a, mu.point()) ? 1 : 0);
    case MeasureKind::LebesgueR: return lebesgue(std::get<IntervalSet>(a));
    case MeasureKind::Restricted: return measure(mu.base(), set_intersect(a, mu.subset()));
    case MeasureKind::Trace:
      if (space.is_finite())
        return measure(mu.base(), expand_mask(std::get<Mask>(a), std::get<Mask>(mu.subset())));
      return measure(mu.base(), a);
    case MeasureKind::Tensor: {
      // Integrate x1 -> right(section of A at x1) against left, atom by atom.
      const Mask m = std::get<Mask>(a);
      const FiniteUniverse& u2 = mu.right().space().universe();
      const int n2 = u2.size();
      XReal total;
      for (Mask atom : mu.left().space().atoms()) {
        int x1 = lowest_bit(atom);
        Mask section = (m >> (x1 * n2)) & u2.full();
        total = total + mul_mt(measure(mu.right(), section), measure(mu.left(), atom));
      }
      return total;
    }
    case MeasureKind::Lebesgue2: return area(std::get<BoxSet>(a));
  }
  return XReal();
}

MeasureFlags classify(const Measure& mu) {
  const MeasurableSpace& space = mu.space();
  if (space.is_finite()) {
    MeasureFlags f;
    f.finite = measure(mu, space.full_set()).is_finite();
    f.sigma_finite = true;
    bool singletons = true;
    bool null_points = true;
    for (Mask atom : space.atoms()) {
      XReal w = measure(mu, atom);
      if (!w.is_finite()) f.sigma_finite = false;
      if (std::popcount(atom) != 1) singletons = false;
      if (!w.is_zero()) null_points = false;
    }
    f.diffuse = singletons && null_points;
    return f;
  }
  switch (mu.kind()) {
    case MeasureKind::Counting: {
      const auto& y = std::get<IntervalSet>(mu.subset());
      XReal card = count_points(y);
      return {card.is_finite(), card.is_finite(), y.empty()};
    }
    case MeasureKind::Dirac: return {true, true, false};
    case MeasureKind::LebesgueR: return {false, true, true};
    case MeasureKind::Lebesgue2: return {false, true, true};
    case MeasureKind::Restricted:
    case MeasureKind::Trace: {
      MeasureFlags base = classify(mu.base());
      bool finite = base.finite || measure(mu.base(), mu.subset()).is_finite();
      return {finite, base.sigma_finite || finite, base.diffuse};
    }
    default: break;
  }
  fail(ErrorCode::PreconditionFailed, "cannot classify " + mu.describe());
}

std::vector<MeasurableSet> disjointify(const std::vector<MeasurableSet>& sets) {
  std::vector<MeasurableSet> out;
  out.reserve(sets.size());
  if (sets.empty()) return out;
  MeasurableSet covered = set_difference(sets.front(), sets.front());
  for (const MeasurableSet& a : sets) {
    out.push_back(set_difference(a, covered));
    covered = set_union(covered, a);
  }
  return out;
}

namespace {

// Evaluates mu and turns library errors into a failure note.
struct Evaluator {
  const Measure& mu;
  std::string error;

  std::optional<XReal> operator()(const MeasurableSet& a) {
    try {
      return measure(mu, a);
    } catch (const Error& e) {
      error = e.what();
      return std::nullopt;
    }
  }
};

std::optional<XReal> checked_sum(const std::vector<XReal>& terms) {
  try {
    XReal total;
    for (const XReal& t : terms) total = total + t;
    return total;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

VerificationReport verify_measure_axioms(const Measure& mu, const std::vector<MeasurableSet>& samples) {
  const MeasurableSpace& space = mu.space();
  for (const auto& s : samples) space.require_measurable(s);
  VerificationReport report;
  report.title = "measure axioms for " + mu.describe();
  Evaluator eval{mu, {}};
  auto show = [&](const MeasurableSet& s) { return format_set(space, s); };

  {
    std::string witness;
    std::size_t bad = 0;
    for (const auto& s : samples) {
      auto v = eval(s);
      if (!v || v->sign() < 0) {
        if (witness.empty()) witness = "mu(" + show(s) + ") = " + (v ? v->to_string() : eval.error);
        ++bad;
      }
    }
    report.add("nonnegativity", bad == 0, witness);
  }
  {
    auto v = eval(space.empty_set());
    report.add("mu(empty) = 0", v && v->is_zero(), v ? v->to_string() : eval.error);
  }
  {
    std::vector<MeasurableSet> parts = disjointify(samples);
    std::vector<XReal> values;
    bool ok = true;
    std::string witness;
    MeasurableSet whole = space.empty_set();
    for (const auto& p : parts) {
      auto v = eval(p);
      if (!v) {
        ok = false;
        witness = eval.error;
        break;
      }
      values.push_back(*v);
      whole = set_union(whole, p);
    }
    if (ok) {
      auto lhs = eval(whole);
      auto rhs = checked_sum(values);
      ok = lhs && rhs && *lhs == *rhs;
      if (!ok)
        witness = "mu(union) = " + (lhs ? lhs->to_string() : "?") + " vs sum = " +
                  (rhs ? rhs->to_string() : "undefined");
    }
    report.add("finite additivity (disjointified samples)", ok, witness);
  }
  {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        if (!set_empty(set_intersect(a, b))) continue;
        auto u = eval(set_union(a, b));
        auto va = eval(a);
        auto vb = eval(b);
        auto sum = (va && vb) ? checked_sum({*va, *vb}) : std::nullopt;
        if (!u || !sum || *u != *sum) {
          ++bad;
          if (witness.empty()) witness = show(a) + " and " + show(b);
        }
      }
    }
    report.add("pairwise additivity", bad == 0, witness);
  }
  {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        if (!set_subset(a, b)) continue;
        auto va = eval(a);
        auto vb = eval(b);
        if (!va || !vb || *vb < *va) {
          ++bad;
          if (witness.empty()) witness = show(a) + " in " + show(b);
        }
      }
    }
    report.add("monotonicity", bad == 0, witness);
  }
  {
    std::size_t bad = 0;
    std::string witness;
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        auto u = eval(set_union(a, b));
        auto va = eval(a);
        auto vb = eval(b);
        auto sum = (va && vb) ? checked_sum({*va, *vb}) : std::nullopt;
        if (!u || !sum || *sum < *u) {
          ++bad;
          if (witness.empty()) witness = show(a) + " and " + show(b);
        }
      }
    }
    report.add("finite Boole inequality", bad == 0, witness);
  }
  {
    // Partition of X: the disjointified samples plus what they leave out.
    std::vector<MeasurableSet> parts = disjointify(samples);
    MeasurableSet covered = space.empty_set();
    for (const auto& p : parts) covered = set_union(covered, p);
    parts.push_back(set_complement(space, covered));
    std::size_t bad = 0;
    std::string witness;
    for (const auto& a : samples) {
      std::vector<XReal> pieces;
      bool defined = true;
      for (const auto& p : parts) {
        auto v = eval(set_intersect(a, p));
        if (!v) {
          defined = false;
          break;
        }
        pieces.push_back(*v);
      }
      auto whole = eval(a);
      auto sum = defined ? checked_sum(pieces) : std::nullopt;
      if (!whole || !sum || *whole != *sum) {
        ++bad;
        if (witness.empty()) witness = show(a);
      }
    }
    report.add("pseudopartition identity", bad == 0, witness);
  }
  return report;
}

namespace {

// Finds a family of pairwise disjoint members covering the universe, each
// with finite mu-measure.
bool has_finite_pseudopartition(const SubsetFamily& g, const Measure& mu) {
  std::vector<Mask> finite_members;
  for (Mask m : g.members())
    if (m != 0 && measure(mu, m).is_finite()) finite_members.push_back(m);
  const Mask full = g.universe().full();
  std::unordered_set<Mask> visited;
  std::function<bool(Mask)> search = [&](Mask covered) {
    if (covered == full) return true;
    if (!visited.insert(covered).second) return false;
    Mask next_point = Mask{1} << std::countr_zero(static_cast<Mask>(~covered & full));
    for (Mask m : finite_members)
      if ((m & next_point) && !(m & covered) && search(covered | m)) return true;
    return false;
  };
  return search(0);
}

}  // namespace

bool verify_uniqueness_pi_system(const MeasurableSpace& space, const SubsetFamily& generators,
                                 const Measure& mu1, const Measure& mu2) {
  if (space.kind() != SpaceKind::Finite)
    fail(ErrorCode::HypothesisFailed, "finite space: uniqueness is verified on finite spaces only");
  if (!(mu1.space() == space) || !(mu2.space() == space))
    fail(ErrorCode::HypothesisFailed, "measures on the space: a measure lives on another space");
  if (generators.universe() != space.universe())
    fail(ErrorCode::HypothesisFailed, "generator universe differs from the space");
  SystemCheck pi = is_system(SystemKind::PiSystem, generators);
  if (!pi.ok) fail(ErrorCode::HypothesisFailed, "pi-system: " + pi.violated_axiom);
  if (!(generate(SystemKind::SigmaAlgebra, generators) == space.sigma()))
    fail(ErrorCode::HypothesisFailed, "generator: G does not generate the sigma-algebra");
  if (!has_finite_pseudopartition(generators, mu1))
    fail(ErrorCode::HypothesisFailed,
         "pseudopartition: G has no pseudopartition of X with mu1-finite parts");
  for (Mask g : generators.members()) {
    if (measure(mu1, g) != measure(mu2, g))
      fail(ErrorCode::HypothesisFailed,
           "coincide on G: the measures differ on " + format_mask(space.universe(), g));
  }
  for (Mask a : space.sigma().members())
    if (measure(mu1, a) != measure(mu2, a)) return false;
  return true;
}

bool is_negligible(const Measure& mu, Mask a) {
  const MeasurableSpace& space = mu.space();
  if (!space.is_finite()) fail(ErrorCode::IncompatibleSpace, "is_negligible needs a finite space");
  Mask hull = 0;
  for (Mask atom : space.atoms())
    if (atom & a) hull |= atom;
  return measure(mu, hull).is_zero();
}

}  // namespace measkit
