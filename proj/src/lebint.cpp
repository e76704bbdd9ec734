#include "measkit/lebint.hpp"

#include <map>

namespace measkit {

namespace {

Rational pow2(int n) {
  mpz_class p = 1;
  p <<= static_cast<mp_bitcnt_t>(n);
  return Rational(p);
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational adapted_value(const XReal& y, int n) {
  if (!(y < XReal(n))) return n;
  Rational scale = pow2(n);
  return Rational(floor_of(y.value() * scale)) / scale;
}

void require_nonneg(const MeasurableFn& f) {
  if (!f.nonneg()) fail(ErrorCode::NegativeFunction, f.describe() + " takes negative values");
}

void require_compatible(const MeasurableFn& f, const Measure& mu) {
  const MeasurableSpace& fs = f.space();
  const MeasurableSpace& ms = mu.space();
  bool ok = fs.kind() == SpaceKind::RealLine ? ms.kind() == SpaceKind::RealLine : fs == ms;
  if (!ok)
    fail(ErrorCode::IncompatibleSpace, "function on " + fs.describe() + " but measure on " + ms.describe());
}

// Moves a line set into the measure's (possibly traced) line.
MeasurableSet clip(const Measure& mu, const MeasurableSet& s) {
  if (mu.space().kind() != SpaceKind::RealLine) return s;
  return intersect(std::get<IntervalSet>(s), mu.space().domain());
}

SimpleFn on_space(const SimpleFn& f, const Measure& mu) {
  if (f.space() == mu.space()) return f;
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    MeasurableSet s = clip(mu, t.support);
    if (!set_empty(s)) terms.push_back(Term{t.coef, std::move(s)});
  }
  return SimpleFn(mu.space(), std::move(terms));
}

XReal measure_interval(const Measure& mu, const Interval& j) {
  if (j.empty()) return XReal();
  if (mu.kind() == MeasureKind::LebesgueR) return j.length();
  return measure(mu, clip(mu, IntervalSet(j)));
}

SimpleFn finite_map_as_simple(const MeasurableFn& f, const std::function<Rational(const XReal&)>& value) {
  std::vector<Term> terms;
  for (Mask atom : f.space().atoms())
    terms.push_back(Term{value(f.values()[static_cast<std::size_t>(std::countr_zero(atom))]), atom});
  return SimpleFn(f.space(), std::move(terms), Repr::Disjoint);
}

// Calls emit(value, interval) for every nonzero level of the stage on each piece.
template <class Emit>
void pwl_levels(const MeasurableFn& f, int n, Emit emit) {
  const Rational scale = pow2(n);
  const Integer top = Integer(n) * scale.get_num();
  for (const AffinePiece& p : f.pieces()) {
    if (sgn(p.a) == 0) {
      Rational v = adapted_value(XReal(p.b), n);
      if (sgn(v) != 0) emit(v, p.interval);
      continue;
    }
    Rational u = p.at(p.interval.lo().value.value());
    Rational w = p.at(p.interval.hi().value.value());
    Rational vmin = u < w ? u : w;
    Rational vmax = u < w ? w : u;
    Integer first = floor_of(vmin * scale);
    if (first < 1) first = 1;
    Integer last = floor_of(vmax * scale);
    if (last > top - 1) last = top - 1;
    for (Integer i = first; i <= last; ++i) {
      Rational lo = Rational(i) / scale;
      Rational hi = Rational(i + 1) / scale;
      Interval part = affine_preimage(p, Interval({XReal(lo), true}, {XReal(hi), false}));
      if (!part.empty()) emit(lo, part);
    }
    if (!(vmax < Rational(n))) {
      Interval part = affine_preimage(p, Interval({XReal(n), true}, {XReal::pos_inf(), false}));
      if (!part.empty()) emit(Rational(n), part);
    }
  }
}

// Closed-form integral of a nonnegative piecewise linear function over the
// part of the line inside `within`, for the measures where it is available.
std::optional<XReal> pwl_exact(const MeasurableFn& f, const Measure& mu, const IntervalSet& within) {
  switch (mu.kind()) {
    case MeasureKind::LebesgueR: {
      Rational total = 0;
      for (const AffinePiece& p : f.pieces()) {
        for (const auto range = intersect(within, IntervalSet(p.interval)); const Interval& c : range.components()) {
          Rational l = c.lo().value.value();
          Rational h = c.hi().value.value();
          total += p.a * (h * h - l * l) / 2 + p.b * (h - l);
        }
      }
      return XReal(total);
    }
    case MeasureKind::Dirac: {
      const Rational& a = std::get<Rational>(mu.point());
      return within.contains(a) ? f.eval(a) : XReal();
    }
    case MeasureKind::Counting: {
      IntervalSet y = intersect(within, std::get<IntervalSet>(mu.subset()));
      XReal total;
      for (const Interval& c : y.components()) {
        if (!c.is_singleton()) return std::nullopt;
        total = total + f.eval(c.lo().value.value());
      }
      return total;
    }
    case MeasureKind::Restricted:
    case MeasureKind::Trace:
      return pwl_exact(f, mu.base(), intersect(within, std::get<IntervalSet>(mu.subset())));
    default: return std::nullopt;
  }
}

std::optional<XReal> certified_bound(const MeasurableFn& f, const Measure& mu, int n) {
  auto b = bounds_on(f, f.space().full_set());
  if (!b || !b->second.is_finite() || !(b->second < XReal(n))) return std::nullopt;
  XReal m = measure(mu, clip(mu, f.domain()));
  if (!m.is_finite()) return std::nullopt;
  return XReal(m.value() / pow2(n));
}

std::optional<XReal> exact_integral(const MeasurableFn& f, const Measure& mu) {
  switch (f.kind()) {
    case FnKind::FiniteMap: {
      XReal total;
      for (Mask atom : f.space().atoms())
        total = total + mul_mt(f.values()[static_cast<std::size_t>(std::countr_zero(atom))], measure(mu, atom));
      return total;
    }
    case FnKind::Step: return integral_sf_plus(on_space(f.simple(), mu), mu);
    case FnKind::PiecewiseLinear: return pwl_exact(f, mu, IntervalSet::real_line());
  }
  return std::nullopt;
}

}  // namespace

SimpleFn adapted_simple(const MeasurableFn& f, int n) {
  if (n < 0) fail(ErrorCode::PreconditionFailed, "level must be nonnegative");
  require_nonneg(f);
  switch (f.kind()) {
    case FnKind::FiniteMap:
      return finite_map_as_simple(f, [n](const XReal& v) { return adapted_value(v, n); });
    case FnKind::Step: {
      std::vector<Term> terms = canonicalize(f.simple()).terms();
      for (Term& t : terms) t.coef = adapted_value(XReal(t.coef), n);
      return SimpleFn(f.space(), std::move(terms), Repr::Disjoint);
    }
    case FnKind::PiecewiseLinear: {
      std::map<Rational, std::vector<Interval>> levels;
      pwl_levels(f, n, [&](const Rational& v, const Interval& j) {
        if (sgn(v) != 0) levels[v].push_back(j);
      });
      std::vector<Term> terms;
      IntervalSet rest = IntervalSet::real_line();
      for (auto& [v, parts] : levels) {
        IntervalSet s = IntervalSet::canonicalize(std::move(parts));
        rest = difference(rest, s);
        terms.push_back(Term{v, std::move(s)});
      }
      if (!rest.empty()) terms.insert(terms.begin(), Term{0, std::move(rest)});
      return SimpleFn(f.space(), std::move(terms), Repr::Canonical);
    }
  }
  return SimpleFn::zero(f.space());
}

XReal stage_integral(const MeasurableFn& f, const Measure& mu, int n) {
  require_compatible(f, mu);
  if (f.kind() != FnKind::PiecewiseLinear) return integral_sf_plus(on_space(adapted_simple(f, n), mu), mu);
  require_nonneg(f);
  XReal total;
  pwl_levels(f, n, [&](const Rational& v, const Interval& j) { total = total + mul_mt(XReal(v), measure_interval(mu, j)); });
  return total;
}

IntegralValue integral_nonneg(const MeasurableFn& f, const Measure& mu, int n_max) {
  require_compatible(f, mu);
  require_nonneg(f);
  if (auto v = exact_integral(f, mu)) return IntegralValue{*v, true, XReal()};
  return IntegralValue{stage_integral(f, mu, n_max), false, certified_bound(f, mu, n_max)};
}

IntegralResult integral_mplus(const MeasurableFn& f, const Measure& mu, int n_max, const Rational& tol) {
  if (n_max < 1) fail(ErrorCode::PreconditionFailed, "n_max must be at least 1");
  require_compatible(f, mu);
  require_nonneg(f);
  IntegralResult r;
  for (int n = 1; n <= n_max; ++n) r.stages.push_back(AdaptedStage{n, stage_integral(f, mu, n)});
  r.stage_value = r.stages.back().integral;
  if (auto v = exact_integral(f, mu)) {
    r.value = *v;
    r.exact = true;
    if (v->is_finite() && r.stage_value.is_finite()) r.bound = *v - r.stage_value;
    else if (*v == r.stage_value) r.bound = XReal();
  } else {
    r.value = r.stage_value;
    r.bound = certified_bound(f, mu, n_max);
  }
  r.within_tol = r.bound && !(XReal(tol) < *r.bound);
  return r;
}

IntegralValue integral_signed(const MeasurableFn& f, const Measure& mu, int n_max) {
  auto [plus, minus] = split_parts(f);
  IntegralValue p = integral_nonneg(plus, mu, n_max);
  IntegralValue m = integral_nonneg(minus, mu, n_max);
  if (!p.value.is_finite()) fail(ErrorCode::NotIntegrable, "the positive part has infinite integral");
  if (!m.value.is_finite()) fail(ErrorCode::NotIntegrable, "the negative part has infinite integral");
  IntegralValue out;
  out.value = p.value - m.value;
  out.exact = p.exact && m.exact;
  if (p.bound && m.bound) out.bound = *p.bound + *m.bound;
  return out;
}

IntegralValue seminorm_n1(const MeasurableFn& f, const Measure& mu, int n_max) {
  return integral_nonneg(abs(f), mu, n_max);
}

IntegralValue integral_over_interval(const MeasurableFn& f, const XReal& a, const XReal& b, const Measure& mu,
                                     int n_max) {
  if (mu.space().kind() != SpaceKind::RealLine)
    fail(ErrorCode::IncompatibleSpace, "interval integrals need a measure on the line");
  if (!classify(mu).diffuse) fail(ErrorCode::NonDiffuseMeasure, mu.describe() + " has atoms");
  if (a == b) return IntegralValue{XReal(), true, XReal()};
  const XReal& lo = min(a, b);
  const XReal& hi = max(a, b);
  IntervalSet y = intersect(IntervalSet(Interval::open(lo, hi)), mu.space().domain());
  IntegralValue v = integral_signed(f, Measure::restricted(mu, y), n_max);
  if (b < a) v.value = neg(v.value);
  return v;
}

XReal counting_integral(const std::vector<XReal>& values) {
  XReal total_abs;
  for (const XReal& v : values) total_abs = total_abs + abs(v);
  if (!total_abs.is_finite()) fail(ErrorCode::NotAbsolutelySummable, "the sum of |f| is infinite");
  XReal total;
  for (const XReal& v : values) total = total + v;
  return total;
}

XReal dirac_integral(const MeasurableFn& f, const Point& a) {
  XReal v = f.eval(a);
  if (!v.is_finite()) fail(ErrorCode::PreconditionFailed, "f is infinite at the Dirac point");
  return v;
}

ChebyshevResult chebyshev(const MeasurableFn& f, const Measure& mu, const Rational& a, int n_max) {
  require_compatible(f, mu);
  ChebyshevResult r;
  r.lhs = mul_mt(XReal(a), measure(mu, clip(mu, abs_level_set(f, a))));
  r.rhs = seminorm_n1(f, mu, n_max);
  XReal upper = r.rhs.value;
  if (!r.rhs.exact && r.rhs.bound) upper = upper + *r.rhs.bound;
  r.holds = !(upper < r.lhs);
  return r;
}

namespace {

void require_finite_maps(const MeasurableFn& f, const MeasurableFn& g, const Measure& mu) {
  if (f.kind() != FnKind::FiniteMap || g.kind() != FnKind::FiniteMap)
    fail(ErrorCode::IncompatibleSpace, "almost-everywhere tools work on finite maps");
  if (!(f.space() == g.space()) || !(f.space() == mu.space()))
    fail(ErrorCode::SpaceMismatch, "functions and measure live on different spaces");
}

}  // namespace

bool ae_equal(const MeasurableFn& f, const MeasurableFn& g, const Measure& mu) {
  require_finite_maps(f, g, mu);
  Mask differ = 0;
  for (std::size_t i = 0; i < f.values().size(); ++i)
    if (f.values()[i] != g.values()[i]) differ |= Mask{1} << i;
  return is_negligible(mu, differ);
}

MeasurableFn almost_sum(const MeasurableFn& f, const MeasurableFn& g, const Measure& mu) {
  require_finite_maps(f, g, mu);
  Mask undefined = 0;
  std::vector<XReal> sum;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const XReal& x = f.values()[i];
    const XReal& y = g.values()[i];
    if ((x.is_pos_inf() && y.is_neg_inf()) || (x.is_neg_inf() && y.is_pos_inf())) {
      undefined |= Mask{1} << i;
      sum.emplace_back();
    } else {
      sum.push_back(x + y);
    }
  }
  if (!is_negligible(mu, undefined))
    fail(ErrorCode::NotAlmostSummable,
         "the sum is undefined on " + format_mask(f.space().universe(), undefined) + ", which is not negligible");
  return MeasurableFn::finite_map(f.space(), std::move(sum));
}

MeanValue first_mean_value(const MeasurableFn& f, const Measure& mu, int n_max) {
  require_compatible(f, mu);
  XReal total = measure(mu, mu.space().full_set());
  if (total.is_zero()) fail(ErrorCode::ZeroMeasure, "mu(X) = 0");
  if (!total.is_finite()) fail(ErrorCode::PreconditionFailed, "mu(X) is infinite");
  MeasurableSet x = mu.space().full_set();
  auto b = bounds_on(f, x);
  if (!b || !b->first.is_finite() || !b->second.is_finite())
    fail(ErrorCode::UnboundedFunction, f.describe() + " is unbounded");
  IntegralValue v = integral_signed(f, mu, n_max);
  MeanValue r;
  r.lower = b->first;
  r.upper = b->second;
  r.mean = XReal(v.value.value() / total.value());
  r.exact = v.exact;
  r.strict = r.lower < r.mean && r.mean < r.upper;
  const Rational target = r.mean.value();
  switch (f.kind()) {
    case FnKind::FiniteMap:
      for (std::size_t i = 0; i < f.values().size() && !r.witness; ++i)
        if (f.values()[i] == r.mean) r.witness = Point(static_cast<int>(i));
      break;
    case FnKind::Step:
      for (const auto range = canonicalize(f.simple()); const Term& t : range.terms())
        if (t.coef == target && !r.witness) {
          MeasurableSet s = clip(mu, t.support);
          if (auto* line = std::get_if<IntervalSet>(&s); line && !line->empty()) r.witness = sample_point(*line);
          else if (auto* m = std::get_if<Mask>(&s); m && *m) r.witness = Point(std::countr_zero(*m));
        }
      break;
    case FnKind::PiecewiseLinear: {
      const IntervalSet& dom = std::get<IntervalSet>(x);
      for (const AffinePiece& p : f.pieces()) {
        IntervalSet hit = intersect(dom, IntervalSet(affine_preimage(p, Interval::point(target))));
        if (!hit.empty()) {
          r.witness = sample_point(hit);
          break;
        }
      }
      if (!r.witness && sgn(target) == 0) {
        IntervalSet off = difference(dom, f.domain());
        if (!off.empty()) r.witness = sample_point(off);
      }
      break;
    }
  }
  return r;
}

}  // namespace measkit
