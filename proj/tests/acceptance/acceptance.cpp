// Acceptance battery: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <sys/wait.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "measkit/convergence.hpp"
#include "measkit/product.hpp"
#include "measkit/suites.hpp"
#include "../support/oracles.hpp"

using namespace measkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) detail = what;
    ++failures;
    pass = false;
  }
};

XReal q(const Rational& r) { return XReal(r); }

Rational random_finite(oracle::Rng& rng) { return rng.rational(-5, 5, 7); }

// ---------------------------------------------------------------------------
// 1. Extended-real laws.

XReal draw(oracle::Rng& rng, int shape) {
  if (shape == 0) return XReal::neg_inf();
  if (shape == 2) return XReal::pos_inf();
  return q(random_finite(rng));
}

bool add_defined(const XReal& a, const XReal& b) {
  return !((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()));
}

void xreal_triple(Outcome& o, const XReal& a, const XReal& b, const XReal& c) {
  auto label = [&] { return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")"; };
  // Commutativity and definedness of + on the extended line.
  bool defined = add_defined(a, b);
  try {
    XReal ab = a + b;
    o.check(defined && ab == b + a, "a+b commutes " + label());
    if (a.is_finite() && b.is_finite()) o.check(ab == q(a.value() + b.value()), "finite sum " + label());
  } catch (const Error& e) {
    o.check(!defined && e.code() == ErrorCode::UndefinedSum, "undefined sum reported " + label());
  }
  // Products are total; commutative and associative.
  o.check(a * b == b * a, "ab = ba " + label());
  o.check((a * b) * c == a * (b * c), "(ab)c = a(bc) " + label());
  // Zero and infinity products.
  o.check(XReal() * a == XReal(), "0 a = 0 " + label());
  if (a.sign() > 0) o.check(a * XReal::pos_inf() == XReal::pos_inf(), "a inf = inf " + label());
  if (a.sign() < 0) o.check(a * XReal::pos_inf() == XReal::neg_inf(), "a inf = -inf " + label());
  // Triangle inequality where the sum is defined.
  if (defined) o.check(abs(a + b) <= abs(a) + abs(b), "|a+b| <= |a|+|b| " + label());

  // Laws on the nonnegative half-line.
  XReal x = abs(a), y = abs(b), z = abs(c);
  auto plabel = [&] { return "(" + x.to_string() + ", " + y.to_string() + ", " + z.to_string() + ")"; };
  o.check(x + y == y + x, "x+y = y+x " + plabel());
  o.check((x + y) + z == x + (y + z), "(x+y)+z = x+(y+z) " + plabel());
  o.check(x * (y + z) == x * y + x * z, "x(y+z) = xy+xz " + plabel());
  const XReal half(Rational(1, 2));
  XReal young = half * pow_mt(x, XReal(2)) + half * pow_mt(y, XReal(2));
  o.check(x * y <= young, "xy <= x^2/2 + y^2/2 " + plabel());
}

Outcome criterion_1() {
  Outcome o;
  oracle::Rng rng(1);
  for (int s1 = 0; s1 < 3; ++s1)
    for (int s2 = 0; s2 < 3; ++s2)
      for (int s3 = 0; s3 < 3; ++s3)
        for (int rep = 0; rep < 10; ++rep) xreal_triple(o, draw(rng, s1), draw(rng, s2), draw(rng, s3));
  for (int i = 0; i < 500; ++i) xreal_triple(o, draw(rng, 1), draw(rng, 1), draw(rng, 1));
  xreal_triple(o, XReal(), XReal::pos_inf(), XReal::neg_inf());
  return o;
}

// ---------------------------------------------------------------------------
// 2. Generated systems: minimality and idempotence.

const SystemKind kKinds[] = {SystemKind::PiSystem, SystemKind::SetAlgebra, SystemKind::LambdaSystem,
                             SystemKind::MonotoneClass, SystemKind::SigmaAlgebra};

oracle::Kind to_oracle(SystemKind k) {
  switch (k) {
    case SystemKind::PiSystem: return oracle::Kind::Pi;
    case SystemKind::SetAlgebra: return oracle::Kind::Algebra;
    case SystemKind::LambdaSystem: return oracle::Kind::Lambda;
    case SystemKind::MonotoneClass: return oracle::Kind::Monotone;
    case SystemKind::SigmaAlgebra: return oracle::Kind::Sigma;
  }
  return oracle::Kind::Sigma;
}

SubsetFamily family(int n, oracle::FamilyBits bits) {
  std::vector<Mask> ms;
  for (auto s : oracle::members(bits, n)) ms.push_back(s);
  return SubsetFamily(FiniteUniverse(n), ms);
}

Outcome criterion_2() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    const oracle::FamilyBits all = (oracle::FamilyBits{1} << (1 << n)) - 1;
    for (oracle::FamilyBits g = 0; g <= all; ++g)
      for (SystemKind k : kKinds) {
        if (k == SystemKind::PiSystem && g == 0) continue;
        SubsetFamily out = generate(k, family(n, g));
        o.check(out == family(n, oracle::brute_generated(g, n, to_oracle(k))),
                std::string(system_kind_name(k)) + " minimality on " + format_family(family(n, g)));
        o.check(generate(k, out) == out, std::string(system_kind_name(k)) + " idempotence");
      }
  }
  oracle::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    oracle::FamilyBits g = 0;
    int count = static_cast<int>(rng.range(1, 5));
    for (int j = 0; j < count; ++j) g |= oracle::FamilyBits{1} << rng.range(0, 31);
    for (SystemKind k : kKinds) {
      SubsetFamily out = generate(k, family(5, g));
      o.check(out == family(5, oracle::naive_closure(g, 5, to_oracle(k))),
              std::string(system_kind_name(k)) + " on five points");
      o.check(generate(k, out) == out, std::string(system_kind_name(k)) + " idempotence on five points");
      o.check(is_system(k, out).ok, std::string(system_kind_name(k)) + " closure is of its kind");
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 3. Pi-lambda and monotone class theorems by enumeration.

Outcome criterion_3() {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  std::size_t pis = 0, algebras = 0;
  for (int n = 1; n <= 4; ++n) {
    const oracle::FamilyBits all = (oracle::FamilyBits{1} << (1 << n)) - 1;
    std::size_t pis_n = 0, algebras_n = 0;
    for (oracle::FamilyBits f = 1; f <= all; ++f) {
      if (oracle::closed(f, n, oracle::Kind::Pi)) {
        ++pis_n;
        SubsetFamily p = family(n, f);
        o.check(generate(SystemKind::LambdaSystem, p) == generate(SystemKind::SigmaAlgebra, p),
                "lambda(P) = sigma(P) for " + format_family(p));
      }
      if (oracle::closed(f, n, oracle::Kind::Algebra)) {
        ++algebras_n;
        SubsetFamily a = family(n, f);
        o.check(generate(SystemKind::MonotoneClass, a) == generate(SystemKind::SigmaAlgebra, a),
                "C(A) = sigma(A) for " + format_family(a));
      }
    }
    EnumerationReport d = verify_dynkin(n);
    EnumerationReport m = verify_monotone_class(n);
    o.check(d.failures == 0 && d.cases == pis_n, "library pi-lambda enumeration at size " + std::to_string(n));
    o.check(m.failures == 0 && m.cases == algebras_n, "library monotone class enumeration at size " + std::to_string(n));
    pis += pis_n;
    algebras += algebras_n;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(secs <= 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  if (o.pass) {
    std::ostringstream s;
    s << pis << " pi-systems, " << algebras << " set algebras, " << static_cast<int>(secs * 1000) << " ms";
    o.detail = s.str();
  }
  return o;
}

// ---------------------------------------------------------------------------
// 4. Lebesgue measure on interval sets.

IntervalSet random_interval_set(oracle::Rng& rng) {
  std::vector<Interval> parts;
  int k = static_cast<int>(rng.range(0, 4));
  for (int i = 0; i < k; ++i) {
    Rational a = rng.rational(-6, 6), b = rng.rational(-6, 6);
    if (b < a) std::swap(a, b);
    bool lc = rng.coin(), hc = rng.coin();
    if (a == b) lc = hc = true;
    parts.push_back(Interval({q(a), lc}, {q(b), hc}));
  }
  if (rng.range(0, 15) == 0) parts.push_back(Interval::open(q(rng.rational(-6, 6)), XReal::pos_inf()));
  return IntervalSet::canonicalize(parts);
}

XReal oracle_length(const IntervalSet& s, const std::vector<Rational>& cuts) {
  oracle::LineMeasure m = oracle::measure_by_membership(cuts, [&](const Rational& x) { return s.contains(x); });
  return m.infinite ? XReal::pos_inf() : q(m.value);
}

Outcome criterion_4() {
  Outcome o;
  oracle::Rng rng(4);
  const Measure lambda = Measure::lebesgue();
  for (int i = 0; i < 1000; ++i) {
    Rational a = rng.rational(-100, 100, 50), b = rng.rational(-100, 100, 50);
    if (b < a) std::swap(a, b);
    o.check(measure(lambda, IntervalSet(Interval::closed(q(a), q(b)))) == q(b - a),
            "lambda([" + to_string(a) + "," + to_string(b) + "])");
  }
  for (int i = 0; i < 1000; ++i) {
    IntervalSet a = random_interval_set(rng), b = random_interval_set(rng);
    std::vector<Rational> cuts = a.endpoints();
    for (const auto& e : b.endpoints()) cuts.push_back(e);
    auto mu = [&](const IntervalSet& s) { return measure(lambda, s); };
    IntervalSet u = unite(a, b), m = intersect(a, b), d = difference(a, b);
    std::string tag = " for A=" + a.to_string() + ", B=" + b.to_string();
    o.check(mu(a) == oracle_length(a, cuts) && mu(u) == oracle_length(u, cuts) && mu(m) == oracle_length(m, cuts),
            "membership oracle" + tag);
    o.check(mu(u) == mu(a) + mu(difference(b, a)), "finite additivity" + tag);
    o.check(mu(m) <= mu(a) && mu(a) <= mu(u), "monotonicity" + tag);
    o.check(mu(u) <= mu(a) + mu(b), "subadditivity" + tag);
    o.check(mu(a) == mu(m) + mu(d), "Caratheodory split" + tag);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 5. Finite subcovers.

Outcome criterion_5() {
  Outcome o;
  oracle::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.rational(-5, 5), b = a + rng.rational(0, 6);
    std::vector<Interval> cover;
    // A chain of overlapping open intervals through [a, b] plus noise.
    Rational x = a - rng.rational(0, 1) - Rational(1, 8);
    while (x <= b) {
      Rational next = x + rng.rational(0, 2) + Rational(1, 4);
      Rational lo = x - rng.rational(0, 1, 4) - Rational(1, 16);
      cover.push_back(Interval::open(q(lo), q(next)));
      x = next - Rational(1, 16);
    }
    int noise = static_cast<int>(rng.range(0, 5));
    for (int k = 0; k < noise; ++k) {
      Rational lo = rng.rational(-8, 8);
      cover.push_back(Interval::open(q(lo), q(lo + rng.rational(0, 3) + Rational(1, 10))));
    }
    std::shuffle(cover.begin(), cover.end(), rng.engine);
    std::string tag = " on [" + to_string(a) + "," + to_string(b) + "]";
    std::vector<std::size_t> chain;
    try {
      chain = extract_finite_subcover(a, b, cover);
    } catch (const Error& e) {
      o.check(false, std::string("extraction failed: ") + e.what() + tag);
      continue;
    }
    o.check(!chain.empty(), "empty chain" + tag);
    if (chain.empty()) continue;
    const Interval& first = cover[chain.front()];
    const Interval& last = cover[chain.back()];
    o.check(first.lo().value < q(a), "a_{i0} < a" + tag);
    o.check(q(b) < last.hi().value, "b < b_{iq}" + tag);
    XReal total;
    std::vector<Interval> used;
    std::vector<bool> seen(cover.size(), false);
    for (std::size_t p = 0; p < chain.size(); ++p) {
      o.check(!seen[chain[p]], "repeated index" + tag);
      seen[chain[p]] = true;
      used.push_back(cover[chain[p]]);
      total = total + cover[chain[p]].length();
      if (p + 1 < chain.size())
        o.check(cover[chain[p + 1]].lo().value < cover[chain[p]].hi().value, "a_{i(p+1)} < b_{ip}" + tag);
    }
    IntervalSet target(Interval::closed(q(a), q(b)));
    o.check(target.subset_of(IntervalSet::canonicalize(used)), "chain covers [a,b]" + tag);
    o.check(q(b - a) <= total, "sum of lengths >= b - a" + tag);
  }
  return o;
}

// ---------------------------------------------------------------------------
// 6. Simple-function integrals.

MeasurableSpace random_finite_space(oracle::Rng& rng) {
  int n = static_cast<int>(rng.range(1, 5));
  FiniteUniverse u(n);
  if (rng.coin()) return MeasurableSpace::finite(u);
  std::vector<Mask> gens;
  int k = static_cast<int>(rng.range(0, 2));
  for (int i = 0; i < k; ++i) gens.push_back(static_cast<Mask>(rng.range(0, static_cast<long>(u.full()))));
  return MeasurableSpace::finite(generate(SystemKind::SigmaAlgebra, SubsetFamily(u, gens)));
}

SimpleFn random_simple(oracle::Rng& rng, const MeasurableSpace& s) {
  const auto& members = s.sigma().members();
  std::vector<Term> terms;
  int k = static_cast<int>(rng.range(0, 4));
  for (int i = 0; i < k; ++i)
    terms.push_back(Term{rng.rational(0, 4), members[static_cast<std::size_t>(rng.range(0, static_cast<long>(members.size()) - 1))]});
  return SimpleFn(s, std::move(terms));
}

SimpleFn random_step(oracle::Rng& rng, const MeasurableSpace& line, long max_value = 4) {
  std::vector<Term> terms;
  int k = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < k; ++i) {
    Rational a = rng.rational(-4, 4), b = a + rng.rational(0, 3) + Rational(1, 5);
    bool lc = rng.coin(), hc = rng.coin();
    terms.push_back(Term{rng.rational(0, max_value), IntervalSet(Interval({q(a), lc}, {q(b), hc}))});
  }
  return SimpleFn(line, std::move(terms));
}

// Integral of a nonnegative step function from its values on gaps between
// breakpoints.
XReal step_oracle(const SimpleFn& f) {
  std::vector<Rational> cuts = f.breakpoints();
  std::sort(cuts.begin(), cuts.end());
  XReal total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total = total + q(f.eval(Point{Rational((cuts[i] + cuts[i + 1]) / 2)}) * (cuts[i + 1] - cuts[i]));
  return total;
}

Outcome criterion_6() {
  Outcome o;
  oracle::Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    MeasurableSpace s = random_finite_space(rng);
    std::vector<XReal> w;
    for (int k = 0; k < s.universe().size(); ++k) w.emplace_back(rng.rational(0, 3));
    // Weights constant on atoms keep the table a measure of the coarse space.
    for (Mask atom : s.atoms())
      for (int k = 0; k < s.universe().size(); ++k)
        if (atom >> k & 1u) w[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(std::countr_zero(atom))];
    Measure mu = Measure::table(s, w);
    SimpleFn f = random_simple(rng, s), g = random_simple(rng, s);
    Rational c = rng.rational(0, 3);
    Rational expected = 0;
    for (int k = 0; k < s.universe().size(); ++k) expected += f.eval(Point{k}) * w[static_cast<std::size_t>(k)].value();
    XReal v = integral_sf_plus(f, mu);
    o.check(v == q(expected), "pointwise oracle");
    o.check(integral_by_terms(f, mu) == v, "any representation");
    o.check(integral_by_terms(to_disjoint(f), mu) == v, "disjoint representation");
    o.check(integral_sf_plus(canonicalize(f), mu) == v, "canonical representation");
    o.check(integral_sf_plus(f + g, mu) == v + integral_sf_plus(g, mu), "additivity");
    o.check(integral_sf_plus(scale(c, f), mu) == q(c) * v, "homogeneity");
    o.check(v <= integral_sf_plus(f + g, mu), "monotonicity");
  }
  const MeasurableSpace line = MeasurableSpace::real_line();
  const Measure lambda = Measure::lebesgue();
  for (int i = 0; i < 200; ++i) {
    SimpleFn f = random_step(rng, line), g = random_step(rng, line);
    Rational c = rng.rational(0, 3);
    XReal v = integral_sf_plus(f, lambda);
    o.check(v == step_oracle(f), "step oracle");
    o.check(integral_by_terms(f, lambda) == v, "step any representation");
    o.check(integral_by_terms(to_disjoint(f), lambda) == v, "step disjoint representation");
    o.check(integral_sf_plus(f + g, lambda) == v + step_oracle(g), "step additivity");
    o.check(integral_sf_plus(scale(c, f), lambda) == q(c) * v, "step homogeneity");
  }
  return o;
}

// ---------------------------------------------------------------------------
// 7. Adapted sequences.

Outcome criterion_7() {
  Outcome o;
  MeasurableFn id = MeasurableFn::piecewise_linear({AffinePiece{Interval::closed(XReal(0), XReal(1)), 1, 0}});
  for (int n = 1; n <= 20; ++n)
    o.check(stage_integral(id, Measure::lebesgue(), n) == q(Rational(1, 2) - oracle::pow2_inverse(n + 1)),
            "stage " + std::to_string(n) + " of x on [0,1]");
  oracle::Rng rng(7);
  const MeasurableSpace line = MeasurableSpace::real_line();
  for (int i = 0; i < 200; ++i) {
    std::vector<Term> terms;
    int k = static_cast<int>(rng.range(1, 3));
    for (int j = 0; j < k; ++j) {
      Rational a = rng.rational(-3, 3), b = a + rng.rational(0, 2) + Rational(1, 3);
      terms.push_back(Term{Rational(rng.range(0, 24), 4), IntervalSet(Interval::closed_open(q(a), q(b)))});
    }
    MeasurableFn f = MeasurableFn::step(SimpleFn(line, terms));
    XReal exact = integral_sf_plus(f.simple(), Measure::lebesgue());
    Rational top = canonicalize(f.simple()).max_value();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), top.get_num_mpz_t(), top.get_den_mpz_t());
    int first = static_cast<int>(fl.get_si()) + 2;
    for (int n = first; n <= first + 4; ++n)
      o.check(stage_integral(f, Measure::lebesgue(), n) == exact,
              f.describe() + " has not stabilized at n=" + std::to_string(n));
  }
  return o;
}

// ---------------------------------------------------------------------------
// 8. Fatou, Chebyshev, and null integrals.

Outcome criterion_8() {
  Outcome o;
  const Measure lambda = Measure::lebesgue();
  std::vector<ConvergenceCase> battery = fatou_battery();
  o.check(battery.size() == 20, "Fatou battery has " + std::to_string(battery.size()) + " cases");
  VerificationReport r = verify_convergence(Theorem::Fatou, battery, lambda, 12, oracle::pow2_inverse(10));
  for (const CheckCase& c : r.cases) o.check(c.pass, "Fatou: " + c.name + " " + c.detail);
  for (const ConvergenceCase& c : battery)
    o.check(integral_nonneg(c.limit, lambda, 20).value <= *c.liminf_integral, "Fatou inequality for " + c.name);

  oracle::Rng rng(8);
  const MeasurableSpace line = MeasurableSpace::real_line();
  for (int i = 0; i < 200; ++i) {
    Rational a(rng.range(1, 12), rng.range(1, 4));
    if (i % 2 == 0) {
      int n = static_cast<int>(rng.range(1, 4));
      MeasurableSpace s = MeasurableSpace::finite(FiniteUniverse(n));
      std::vector<XReal> v, w;
      Rational level = 0, n1 = 0;
      for (int k = 0; k < n; ++k) {
        Rational x = rng.rational(-4, 4), y = rng.rational(0, 2);
        v.emplace_back(x);
        w.emplace_back(y);
        if (::abs(x) >= a) level += y;
        n1 += ::abs(x) * y;
      }
      ChebyshevResult c = chebyshev(MeasurableFn::finite_map(s, v), Measure::table(s, w), a, 20);
      o.check(c.lhs == q(a * level) && c.rhs.value == q(n1), "Chebyshev oracle values");
      o.check(c.holds && c.lhs <= c.rhs.value, "Chebyshev on a finite space");
    } else {
      // Step function with possibly negative values.
      std::vector<Term> terms;
      for (int k = 0; k < 2; ++k) {
        Rational lo = rng.rational(-3, 3), hi = lo + rng.rational(0, 2) + Rational(1, 4);
        terms.push_back(Term{rng.rational(-4, 4), IntervalSet(Interval::closed_open(q(lo), q(hi)))});
      }
      SimpleFn sf(line, terms);
      MeasurableFn f = MeasurableFn::step(sf);
      ChebyshevResult c = chebyshev(f, lambda, a, 20);
      std::vector<Rational> cuts = sf.breakpoints();
      oracle::LineMeasure level =
          oracle::measure_by_membership(cuts, [&](const Rational& x) { return ::abs(sf.eval(Point{x})) >= a; });
      Rational n1 = 0;
      std::sort(cuts.begin(), cuts.end());
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        n1 += ::abs(sf.eval(Point{Rational((cuts[k] + cuts[k + 1]) / 2)})) * (cuts[k + 1] - cuts[k]);
      o.check(c.lhs == q(a * level.value) && c.rhs.value == q(n1), "Chebyshev oracle values on the line");
      o.check(c.holds && c.lhs <= c.rhs.value, "Chebyshev on the line");
    }
  }

  // Integral zero exactly when f vanishes almost everywhere.
  for (int n = 1; n <= 4; ++n) {
    MeasurableSpace s = MeasurableSpace::finite(FiniteUniverse(n));
    MeasurableFn zero = MeasurableFn::finite_map(s, std::vector<XReal>(static_cast<std::size_t>(n)));
    for (Mask null_points = 0; null_points < (Mask{1} << n); ++null_points)
      for (Mask support = 0; support < (Mask{1} << n); ++support) {
        std::vector<XReal> w, v;
        for (int k = 0; k < n; ++k) {
          w.emplace_back((null_points >> k & 1u) ? Rational(0) : Rational(rng.rational(0, 3) + Rational(1, 7)));
          if (support >> k & 1u) v.emplace_back(rng.range(0, 5) == 0 ? XReal::pos_inf() : XReal(Rational(rng.rational(0, 3) + Rational(1, 5))));
          else v.emplace_back();
        }
        Measure mu = Measure::table(s, w);
        MeasurableFn f = MeasurableFn::finite_map(s, v);
        bool zero_integral = integral_nonneg(f, mu, 20).value.is_zero();
        bool oracle_null = (support & ~null_points) == 0;
        o.check(zero_integral == oracle_null && ae_equal(f, zero, mu) == oracle_null,
                "null integral on " + std::to_string(n) + " points");
      }
  }
  return o;
}

// ---------------------------------------------------------------------------
// 9. Dominated convergence.

Outcome criterion_9() {
  Outcome o;
  const Measure lambda = Measure::lebesgue();
  const MeasurableSpace line = MeasurableSpace::real_line();
  auto ind = [&](const Rational& hi) {
    return MeasurableFn::step(SimpleFn::indicator(line, IntervalSet(Interval::closed(XReal(0), q(hi)))));
  };
  MeasurableFn limit = ind(Rational(1, 2));
  MeasurableFn dominator = ind(1);
  const int n_max = 1024;
  const Rational tol = oracle::pow2_inverse(10);
  for (int n = 0; n <= n_max; ++n) {
    Rational expected_gap(1, n + 2);
    MeasurableFn fn = ind(Rational(1, 2) + expected_gap);
    IntegralValue v = integral_nonneg(fn, lambda, 20);
    o.check(v.exact && v.value == q(Rational(1, 2) + expected_gap), "integral of f_" + std::to_string(n));
    o.check(pointwise_leq(fn, dominator), "domination at n=" + std::to_string(n));
    IntegralValue d = seminorm_n1(linear_combination(1, fn, -1, limit), lambda, 20);
    o.check(d.value == q(expected_gap), "N1(f_n - f) at n=" + std::to_string(n));
  }
  MeasurableFn last = ind(Rational(1, 2) + Rational(1, n_max + 2));
  XReal gap = seminorm_n1(linear_combination(1, last, -1, limit), lambda, 20).value;
  o.check(gap <= q(tol), "N1 distance " + gap.to_string() + " above 2^-10 at n_max");
  XReal drift = abs(integral_nonneg(last, lambda, 20).value - q(Rational(1, 2)));
  o.check(drift <= q(tol), "integral drift " + drift.to_string() + " above 2^-10 at n_max");
  VerificationReport r = verify_convergence(Theorem::Dominated, dominated_battery(), lambda, n_max, tol);
  for (const CheckCase& c : r.cases) o.check(c.pass, "dominated battery: " + c.name + " " + c.detail);
  return o;
}

// ---------------------------------------------------------------------------
// 10. Tonelli.

Outcome criterion_10() {
  Outcome o;
  oracle::Rng rng(10);
  const MeasurableSpace x3 = MeasurableSpace::finite(FiniteUniverse(3));
  const MeasurableSpace prod = MeasurableSpace::product(x3, x3);
  std::vector<XReal> w1, w2;
  for (int i = 0; i < 3; ++i) {
    w1.emplace_back(rng.rational(0, 3));
    w2.emplace_back(rng.rational(0, 3));
  }
  w1[2] = XReal(0);
  const Measure mu1 = Measure::table(x3, w1), mu2 = Measure::table(x3, w2);
  auto run = [&](const std::vector<XReal>& v, const std::string& tag) {
    XReal expected;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) expected = expected + v[static_cast<std::size_t>(i * 3 + j)] * w1[i] * w2[j];
    MeasurableFn f = MeasurableFn::finite_map(prod, v);
    TonelliResult a = tonelli(f, mu1, mu2, 1);
    TonelliResult b = tonelli(f, mu1, mu2, 2);
    o.check(a.direct == expected && b.direct == expected, "direct integral " + tag);
    o.check(a.iterated == expected, "iterated i=1 " + tag);
    o.check(b.iterated == expected, "iterated i=2 " + tag);
  };
  for (Mask a1 = 0; a1 < 8; ++a1)
    for (Mask a2 = 0; a2 < 8; ++a2) {
      std::vector<XReal> v;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v.emplace_back(((a1 >> i) & (a2 >> j) & 1u) ? 1 : 0);
      run(v, "rectangle " + std::to_string(a1) + "x" + std::to_string(a2));
    }
  for (int k = 0; k < 100; ++k) {
    std::vector<XReal> v;
    for (int i = 0; i < 9; ++i) v.emplace_back(rng.range(0, 9) == 0 ? XReal::pos_inf() : XReal(rng.rational(0, 4)));
    run(v, "random map " + std::to_string(k));
  }

  const MeasurableSpace line = MeasurableSpace::real_line();
  const Measure lambda = Measure::lebesgue();
  for (int k = 0; k < 100; ++k) {
    SimpleFn f1 = random_step(rng, line, 3), f2 = random_step(rng, line, 3);
    XReal expected = step_oracle(f1) * step_oracle(f2);
    MeasurableFn f = MeasurableFn::step(tensor_step(f1, f2));
    TonelliResult a = tonelli(f, lambda, lambda, 1);
    TonelliResult b = tonelli(f, lambda, lambda, 2);
    o.check(a.direct == expected && a.iterated == expected && b.iterated == expected,
            "tensor step pair " + std::to_string(k));
  }
  const Measure lambda2 = Measure::lebesgue2();
  for (int k = 0; k < 100; ++k) {
    IntervalSet x1 = random_interval_set(rng), y1 = random_interval_set(rng);
    IntervalSet x2 = random_interval_set(rng), y2 = random_interval_set(rng);
    auto len = [&](const IntervalSet& s) {
      std::vector<Rational> cuts = s.endpoints();
      return oracle_length(s, cuts);
    };
    BoxSet r1 = BoxSet::rectangle(x1, y1);
    o.check(measure(lambda2, r1) == len(x1) * len(y1), "box area " + r1.to_string());
    BoxSet r2 = BoxSet::rectangle(x2, y2);
    XReal s1 = len(x1) * len(y1), s2 = len(x2) * len(y2);
    XReal overlap = len(intersect(x1, x2)) * len(intersect(y1, y2));
    if (s1.is_finite() && s2.is_finite())
      o.check(measure(lambda2, unite(r1, r2)) == s1 + s2 - overlap, "union area by inclusion-exclusion");
  }
  return o;
}

// ---------------------------------------------------------------------------
// 11. Uniqueness from the singleton pi-system.

Outcome criterion_11() {
  Outcome o;
  const MeasurableSpace x3 = MeasurableSpace::finite(FiniteUniverse(3));
  const SubsetFamily singletons(x3.universe(), {0b000, 0b001, 0b010, 0b100});
  const std::vector<XReal> values{XReal(0), XReal(Rational(1, 2)), XReal(1), XReal(2), XReal::pos_inf()};
  std::vector<std::vector<XReal>> tables;
  for (const XReal& a : values)
    for (const XReal& b : values)
      for (const XReal& c : values) tables.push_back({a, b, c});
  std::size_t agreeing = 0, concluded = 0;
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = 0; j < tables.size(); ++j) {
      Measure m1 = Measure::table(x3, tables[i]);
      Measure m2 = j % 2 == 0 ? Measure::table(x3, tables[j])
                              : Measure::restricted(Measure::table(x3, tables[j]), MeasurableSet{Mask{0b111}});
      bool agree_on_g = tables[i] == tables[j];
      bool finite_parts = true;
      for (const XReal& w : tables[i]) finite_parts = finite_parts && w.is_finite();
      agreeing += agree_on_g;
      try {
        bool equal = verify_uniqueness_pi_system(x3, singletons, m1, m2);
        ++concluded;
        o.check(agree_on_g && finite_parts, "conclusion drawn without its hypotheses");
        bool oracle_equal = true;
        for (Mask a = 0; a < 8; ++a) {
          XReal s1, s2;
          for (int k = 0; k < 3; ++k)
            if (a >> k & 1u) {
              s1 = s1 + tables[i][static_cast<std::size_t>(k)];
              s2 = s2 + tables[j][static_cast<std::size_t>(k)];
            }
          oracle_equal = oracle_equal && s1 == s2;
        }
        o.check(equal && oracle_equal, "measures agreeing on singletons differ");
      } catch (const Error& e) {
        o.check(e.code() == ErrorCode::HypothesisFailed, std::string("unexpected error ") + e.what());
        o.check(!(agree_on_g && finite_parts), std::string("hypotheses rejected wrongly: ") + e.what());
      }
    }
  if (o.pass) o.detail = std::to_string(concluded) + " agreeing pairs concluded equal, " +
                         std::to_string(tables.size() * tables.size() - concluded) + " rejected by hypotheses";
  (void)agreeing;
  return o;
}

// ---------------------------------------------------------------------------
// 12. CLI golden files.

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string("\"") + MEASKIT_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion_12() {
  Outcome o;
  const std::string golden = MEASKIT_GOLDEN_DIR;
  Run v1 = run_cli("verify");
  Run v2 = run_cli("verify");
  o.check(v1.code == 0, "verify exits " + std::to_string(v1.code));
  o.check(v1.out.find(" cases pass\n") != std::string::npos, "verify does not report all cases passing");
  o.check(v1.out == v2.out, "verify output differs between runs");
  const std::string input = "--input \"" + golden + "/identity.json\"";
  Run i1 = run_cli("integrate " + input);
  Run i2 = run_cli("integrate " + input);
  o.check(i1.code == 0, "integrate exits " + std::to_string(i1.code));
  o.check(i1.out.find("\nvalue: 1/2\n") != std::string::npos, "integrate does not print value 1/2");
  o.check(i1.out.find("\nbound: 1/2048 (2^-11)\n") != std::string::npos, "integrate does not print bound 2^-11");
  o.check(i1.out == i2.out, "integrate output differs between runs");
  o.check(i1.out == read_file(golden + "/integrate_identity/expected.txt"), "integrate output differs from golden file");
  Run j1 = run_cli("integrate --json " + input);
  o.check(j1.out == read_file(golden + "/integrate_identity_json/expected.txt"), "JSON report differs from golden file");
  if (o.pass) {
    std::size_t at = v1.out.rfind("all ");
    o.detail = at == std::string::npos ? "" : v1.out.substr(at, v1.out.size() - at - 1);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"extended-real laws", criterion_1},
      {"generated-system minimality and idempotence", criterion_2},
      {"pi-lambda and monotone class theorems", criterion_3},
      {"Lebesgue measure on interval sets", criterion_4},
      {"finite-subcover extraction", criterion_5},
      {"simple-function integral invariance and linearity", criterion_6},
      {"adapted-sequence convergence", criterion_7},
      {"Fatou, Chebyshev and null integrals", criterion_8},
      {"dominated convergence", criterion_9},
      {"Tonelli", criterion_10},
      {"uniqueness from a pi-system", criterion_11},
      {"CLI golden files", criterion_12},
  };
  int failed = 0;
  auto total_start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    long ms = static_cast<long>(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.checks << " checks";
    if (!o.pass && o.failures) std::cout << ", " << o.failures << " failed";
    std::cout << ", " << ms << " ms)";
    if (!o.detail.empty()) std::cout << " - " << o.detail;
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  long total = static_cast<long>(
      std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count());
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria pass in " << total << " s" << std::endl;
  return failed;
}
