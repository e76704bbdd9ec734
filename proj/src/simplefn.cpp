#include "measkit/simplefn.hpp"

#include <algorithm>
#include <map>

namespace measkit {

const char* repr_name(Repr r) {
  switch (r) {
    case Repr::Simple: return "simple";
    case Repr::Disjoint: return "disjoint";
    case Repr::Canonical: return "canonical";
  }
  return "?";
}

namespace {

void check_partition(const MeasurableSpace& space, const std::vector<Term>& terms) {
  MeasurableSet covered = space.empty_set();
  for (const Term& t : terms) {
    if (set_empty(t.support)) fail(ErrorCode::PreconditionFailed, "disjoint representation has an empty support");
    if (!set_empty(set_intersect(covered, t.support)))
      fail(ErrorCode::PreconditionFailed, "supports overlap at " + format_set(space, set_intersect(covered, t.support)));
    covered = set_union(covered, t.support);
  }
  MeasurableSet missing = set_complement(space, covered);
  if (!set_empty(missing))
    fail(ErrorCode::PreconditionFailed, "supports do not cover " + format_set(space, missing));
}

}  // namespace

SimpleFn::SimpleFn(MeasurableSpace space, std::vector<Term> terms, Repr repr)
    : space_(std::move(space)), terms_(std::move(terms)), repr_(repr) {
  for (const Term& t : terms_) space_.require_measurable(t.support);
  if (repr_ != Repr::Simple) check_partition(space_, terms_);
  if (repr_ == Repr::Canonical) {
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (!(terms_[i - 1].coef < terms_[i].coef))
        fail(ErrorCode::PreconditionFailed, "canonical coefficients must be strictly increasing");
  }
}

SimpleFn SimpleFn::zero(const MeasurableSpace& space) { return constant(space, 0); }

SimpleFn SimpleFn::constant(const MeasurableSpace& space, const Rational& c) {
  if (set_empty(space.full_set())) return SimpleFn(space, {}, Repr::Canonical);
  return SimpleFn(space, {Term{c, space.full_set()}}, Repr::Canonical);
}

SimpleFn SimpleFn::indicator(const MeasurableSpace& space, const MeasurableSet& a, const Rational& c) {
  return SimpleFn(space, {Term{c, a}});
}

Rational SimpleFn::eval(const Point& x) const {
  Rational v = 0;
  for (const Term& t : terms_)
    if (set_contains(t.support, x)) v += t.coef;
  return v;
}

bool SimpleFn::nonneg() const { return sgn(min_value()) >= 0; }

Rational SimpleFn::min_value() const {
  SimpleFn c = canonicalize(*this);
  return c.terms().empty() ? Rational(0) : c.terms().front().coef;
}

Rational SimpleFn::max_value() const {
  SimpleFn c = canonicalize(*this);
  return c.terms().empty() ? Rational(0) : c.terms().back().coef;
}

std::vector<Rational> SimpleFn::breakpoints() const {
  std::vector<Rational> out;
  for (const Term& t : terms_) {
    if (const auto* s = std::get_if<IntervalSet>(&t.support)) {
      auto e = s->endpoints();
      out.insert(out.end(), e.begin(), e.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimpleFn to_disjoint(const SimpleFn& f) {
  if (f.repr() != Repr::Simple) return SimpleFn(f.space(), f.terms(), Repr::Disjoint);
  std::vector<Term> parts;
  if (!set_empty(f.space().full_set())) parts.push_back(Term{0, f.space().full_set()});
  for (const Term& t : f.terms()) {
    std::vector<Term> next;
    next.reserve(parts.size() * 2);
    for (Term& p : parts) {
      MeasurableSet in = set_intersect(p.support, t.support);
      if (set_empty(in)) {
        next.push_back(std::move(p));
        continue;
      }
      MeasurableSet out = set_difference(p.support, t.support);
      next.push_back(Term{p.coef + t.coef, std::move(in)});
      if (!set_empty(out)) next.push_back(Term{p.coef, std::move(out)});
    }
    parts = std::move(next);
  }
  return SimpleFn(f.space(), std::move(parts), Repr::Disjoint);
}

SimpleFn canonicalize(const SimpleFn& f) {
  if (f.repr() == Repr::Canonical) return f;
  SimpleFn d = to_disjoint(f);
  std::map<Rational, MeasurableSet> groups;
  for (const Term& t : d.terms()) {
    auto it = groups.find(t.coef);
    if (it == groups.end()) groups.emplace(t.coef, t.support);
    else it->second = set_union(it->second, t.support);
  }
  std::vector<Term> terms;
  terms.reserve(groups.size());
  for (auto& [coef, support] : groups) terms.push_back(Term{coef, std::move(support)});
  return SimpleFn(f.space(), std::move(terms), Repr::Canonical);
}

SimpleFn combine(CombineOp op, const SimpleFn& f, const SimpleFn& g) {
  if (!(f.space() == g.space())) fail(ErrorCode::SpaceMismatch, "simple functions live on different spaces");
  SimpleFn a = to_disjoint(f);
  SimpleFn b = to_disjoint(g);
  std::vector<Term> terms;
  for (const Term& s : a.terms()) {
    for (const Term& t : b.terms()) {
      MeasurableSet c = set_intersect(s.support, t.support);
      if (set_empty(c)) continue;
      Rational coef = op == CombineOp::Add ? Rational(s.coef + t.coef) : Rational(s.coef * t.coef);
      terms.push_back(Term{std::move(coef), std::move(c)});
    }
  }
  return SimpleFn(f.space(), std::move(terms), Repr::Disjoint);
}

SimpleFn scale(const Rational& a, const SimpleFn& f) {
  SimpleFn d = to_disjoint(f);
  std::vector<Term> terms = d.terms();
  for (Term& t : terms) t.coef *= a;
  return SimpleFn(f.space(), std::move(terms), Repr::Disjoint);
}

SimpleFn restrict_to(const SimpleFn& f, const MeasurableSet& a) {
  return combine(CombineOp::Mul, f, SimpleFn::indicator(f.space(), a));
}

namespace {

void require_space(const SimpleFn& f, const Measure& mu) {
  if (!(f.space() == mu.space()))
    fail(ErrorCode::IncompatibleSpace, "function on " + f.space().describe() + " but measure on " +
                                           mu.space().describe());
}

}  // namespace

XReal integral_sf_plus(const SimpleFn& f, const Measure& mu) {
  require_space(f, mu);
  SimpleFn c = canonicalize(f);
  std::vector<XReal> parts;
  parts.reserve(c.terms().size());
  for (const Term& t : c.terms()) {
    if (sgn(t.coef) < 0)
      fail(ErrorCode::NegativeValue, "value " + to_string(t.coef) + " on " + format_set(c.space(), t.support));
    parts.push_back(mul_mt(XReal(t.coef), measure(mu, t.support)));
  }
  return sum_nonneg(parts);
}

XReal integral_by_terms(const SimpleFn& f, const Measure& mu) {
  require_space(f, mu);
  XReal total;
  for (const Term& t : f.terms()) total = total + mul_mt(XReal(t.coef), measure(mu, t.support));
  return total;
}

XReal integral_over_subset(const SimpleFn& f, const Measure& mu, const MeasurableSet& a) {
  f.space().require_measurable(a);
  return integral_sf_plus(restrict_to(f, a), mu);
}

XReal integral_counting(const SimpleFn& f, Mask y) {
  if (!f.space().is_finite()) fail(ErrorCode::IncompatibleSpace, "counting closed form needs a finite space");
  if (!f.space().universe().contains(y)) fail(ErrorCode::PreconditionFailed, "Y is not a subset of the universe");
  Rational total = 0;
  for (int i = 0; i < f.space().universe().size(); ++i)
    if (y >> i & 1u) {
      Rational v = f.eval(i);
      if (sgn(v) < 0) fail(ErrorCode::NegativeValue, "negative value at " + f.space().universe().label(i));
      total += v;
    }
  return XReal(total);
}

XReal integral_dirac(const SimpleFn& f, const Point& a) {
  if (!f.space().contains(a)) fail(ErrorCode::PreconditionFailed, "Dirac point outside the space");
  Rational v = f.eval(a);
  if (sgn(v) < 0) fail(ErrorCode::NegativeValue, "negative value at the Dirac point");
  return XReal(v);
}

}  // namespace measkit
