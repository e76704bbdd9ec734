#include "measkit/suites.hpp"

#include <random>

#include "measkit/product.hpp"

namespace measkit {

namespace {

const MeasurableSpace& line() {
  static const MeasurableSpace s = MeasurableSpace::real_line();
  return s;
}

Interval co(const Rational& a, const Rational& b) { return Interval::closed_open(XReal(a), XReal(b)); }
Interval cc(const Rational& a, const Rational& b) { return Interval::closed(XReal(a), XReal(b)); }

MeasurableFn ind(const Interval& i, const Rational& c = 1) {
  return MeasurableFn::step(SimpleFn::indicator(line(), IntervalSet(i), c));
}

MeasurableFn zero_line() { return MeasurableFn::step(SimpleFn::zero(line())); }

MeasurableFn pwl(std::vector<AffinePiece> pieces) { return MeasurableFn::piecewise_linear(std::move(pieces)); }

MeasurableFn identity_01() { return pwl({{cc(0, 1), 1, 0}}); }

MeasurableFn tent_01() { return pwl({{co(0, Rational(1, 2)), 1, 0}, {cc(Rational(1, 2), 1), -1, 1}}); }

Rate constant_rate(const Rational& r) {
  return [r](int) { return XReal(r); };
}

Rational inv(int k) { return Rational(1, k); }

Rational two_pow_minus(int k) {
  mpz_class d = 1;
  d <<= static_cast<mp_bitcnt_t>(k);
  return Rational(mpz_class(1), d);
}

}  // namespace

std::vector<ConvergenceCase> beppo_levi_battery() {
  std::vector<ConvergenceCase> b;
  b.push_back({"adapted stages of x on [0,1]",
               [](int n) { return MeasurableFn::step(adapted_simple(identity_01(), n)); }, identity_01(),
               std::nullopt, {}, std::nullopt, [](int n) { return XReal(two_pow_minus(n + 1)); }, 0});
  b.push_back({"growing intervals [0, 1 - 1/(n+1)]", [](int n) { return ind(cc(0, 1 - inv(n + 1))); },
               ind(co(0, 1)), std::nullopt, {}, std::nullopt, [](int n) { return XReal(inv(n + 1)); }, 0});
  b.push_back({"x capped at n/(n+1)",
               [](int n) {
                 Rational c(n, n + 1);
                 if (n == 0) return pwl({{cc(0, 1), 0, 0}});
                 return pwl({{cc(0, c), 1, 0}, {Interval::open_closed(XReal(c), XReal(1)), 0, c}});
               },
               identity_01(), std::nullopt, {}, std::nullopt,
               [](int n) { return XReal(Rational(1, 2 * (n + 1) * (n + 1))); }, 0});
  b.push_back({"constant tent", [](int) { return tent_01(); }, tent_01(), std::nullopt, {}, std::nullopt,
               constant_rate(0), 0});
  return b;
}

std::vector<ConvergenceCase> fatou_battery() {
  std::vector<ConvergenceCase> b;
  auto zero_tail = [](int) { return zero_line(); };
  for (Rational c : {Rational(1), Rational(2)})
    for (Rational s : {Rational(0), Rational(1, 2)})
      b.push_back({"escaping block c=" + to_string(c) + " s=" + to_string(s),
                   [c, s](int n) { return ind(co(s + n, s + n + 1), c); }, zero_line(), std::nullopt, zero_tail,
                   XReal(c), constant_rate(0), 0});
  for (Rational c : {Rational(1), Rational(3)})
    b.push_back({"concentrating spike c=" + to_string(c),
                 [c](int n) { return ind(Interval::open(XReal(0), XReal(inv(n + 1))), c * (n + 1)); }, zero_line(),
                 std::nullopt, zero_tail, XReal(c), constant_rate(0), 0});
  for (Rational c : {Rational(1), Rational(1, 2)})
    b.push_back({"alternating disjoint blocks c=" + to_string(c),
                 [c](int n) { return n % 2 == 0 ? ind(co(0, 1), c) : ind(co(1, 2), c); }, zero_line(), std::nullopt,
                 zero_tail, XReal(c), constant_rate(0), 0});
  for (Rational s : {Rational(0), Rational(5)})
    b.push_back({"alternating overlapping blocks s=" + to_string(s),
                 [s](int n) { return n % 2 == 0 ? ind(co(s, s + 2)) : ind(co(s + 1, s + 3)); }, ind(co(s + 1, s + 2)),
                 std::nullopt, [s](int) { return ind(co(s + 1, s + 2)); }, XReal(2), constant_rate(0), 0});
  for (Rational c : {Rational(1), Rational(2)})
    b.push_back({"decreasing heights c=" + to_string(c),
                 [c](int n) { return ind(cc(0, 1), c * (1 + inv(n + 1))); }, ind(cc(0, 1), c), std::nullopt,
                 [c](int) { return ind(cc(0, 1), c); }, XReal(c), [c](int n) { return XReal(c * inv(n + 1)); }, 0});
  for (Rational c : {Rational(1), Rational(3, 2)})
    b.push_back({"increasing intervals c=" + to_string(c),
                 [c](int n) { return ind(cc(0, 1 - inv(n + 2)), c); }, ind(co(0, 1), c), std::nullopt,
                 [c](int n) { return ind(cc(0, 1 - inv(n + 2)), c); }, XReal(c),
                 [c](int n) { return XReal(c * inv(n + 2)); }, 0});
  b.push_back({"constant identity", [](int) { return identity_01(); }, identity_01(), std::nullopt,
               [](int) { return identity_01(); }, XReal(Rational(1, 2)), constant_rate(0), 0});
  b.push_back({"shrinking tents",
               [](int n) {
                 Rational h = Rational(2, n + 1);
                 return pwl({{co(0, h / 2), 2 / h, 0}, {cc(h / 2, h), -2 / h, 2}});
               },
               zero_line(), std::nullopt, zero_tail, XReal(0), [](int n) { return XReal(inv(n + 1)); }, 0});
  b.push_back({"oscillating slopes",
               [](int n) { return n % 2 == 0 ? identity_01() : pwl({{cc(0, 1), -1, 1}}); }, tent_01(), std::nullopt,
               [](int) { return tent_01(); }, XReal(Rational(1, 2)), constant_rate(0), 0});
  b.push_back({"flattening blocks", [](int n) { return ind(co(0, n + 1), inv(n + 1)); }, zero_line(), std::nullopt,
               zero_tail, XReal(1), constant_rate(0), 0});
  b.push_back({"fixed block plus escaping block",
               [](int n) {
                 SimpleFn f(line(), {Term{1, IntervalSet(co(0, 1))}, Term{1, IntervalSet(co(n, n + 1))}});
                 return MeasurableFn::step(f);
               },
               ind(co(0, 1)), std::nullopt, [](int) { return ind(co(0, 1)); }, XReal(2), {}, 0});
  b.push_back({"alternating heights", [](int n) { return ind(cc(0, 1), n % 2 == 0 ? 1 : 3); }, ind(cc(0, 1)),
               std::nullopt, [](int) { return ind(cc(0, 1)); }, XReal(1), {}, 0});
  return b;
}

std::vector<ConvergenceCase> dominated_battery() {
  std::vector<ConvergenceCase> b;
  b.push_back({"shrinking indicators [0, 1/2 + 1/(n+2)]",
               [](int n) { return ind(cc(0, Rational(1, 2) + inv(n + 2))); }, ind(cc(0, Rational(1, 2))),
               ind(cc(0, 1)), {}, std::nullopt, [](int n) { return XReal(inv(n + 2)); }, 0});
  b.push_back({"truncated identity",
               [](int n) { return pwl({{cc(0, 1 - inv(n + 2)), 1, 0}}); }, identity_01(), ind(cc(0, 1)), {},
               std::nullopt, [](int n) { return XReal(inv(n + 2)); }, 0});
  b.push_back({"signed oscillation damped by 1/(2n+2)",
               [](int n) {
                 Rational h = inv(2 * (n + 1));
                 SimpleFn f(line(), {Term{h, IntervalSet(co(0, 1))}, Term{-h, IntervalSet(co(1, 2))}});
                 return MeasurableFn::step(f);
               },
               zero_line(), ind(co(0, 2)), {}, std::nullopt, [](int n) { return XReal(inv(n + 1)); }, 0});
  b.push_back({"constant sequence", [](int) { return tent_01(); }, tent_01(), ind(cc(0, 1)), {}, std::nullopt,
               constant_rate(0), 0});
  return b;
}

Measure extended_dominated_measure() {
  MeasurableSpace s = MeasurableSpace::finite(FiniteUniverse(std::vector<std::string>{"a", "b", "c"}));
  return Measure::table(s, {XReal(1), XReal(2), XReal(0)});
}

std::vector<ConvergenceCase> extended_dominated_battery() {
  const MeasurableSpace s = extended_dominated_measure().space();
  auto map = [s](std::vector<XReal> v) { return MeasurableFn::finite_map(s, std::move(v)); };
  std::vector<ConvergenceCase> b;
  b.push_back({"decaying mass, unbounded on a null point",
               [map](int n) { return map({XReal(inv(n + 1)), XReal(2), XReal(n)}); },
               map({XReal(0), XReal(2), XReal(0)}), map({XReal(1), XReal(2), XReal(0)}), {}, std::nullopt,
               [](int n) { return XReal(inv(n + 1)); }, 0});
  b.push_back({"infinite on a null point",
               [map](int n) { return map({XReal(-1) + XReal(inv(n + 1)), XReal(1), XReal::pos_inf()}); },
               map({XReal(-1), XReal(1), XReal::neg_inf()}), map({XReal(1), XReal(1), XReal(0)}), {}, std::nullopt,
               [](int n) { return XReal(inv(n + 1)); }, 0});
  return b;
}

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine); }
  Rational rational(long lo, long hi, long max_den = 8) { return Rational(range(lo * max_den, hi * max_den), range(1, max_den)); }
};

Rational sorted_pair_lo(Rational& a, Rational& b) {
  if (b < a) std::swap(a, b);
  return a;
}

IntervalSet random_interval_set(Rng& rng) {
  std::vector<Interval> parts;
  int k = static_cast<int>(rng.range(0, 3));
  for (int i = 0; i < k; ++i) {
    Rational a = rng.rational(-4, 4);
    Rational b = rng.rational(-4, 4);
    sorted_pair_lo(a, b);
    Interval c({XReal(a), rng.range(0, 1) == 1}, {XReal(b), rng.range(0, 1) == 1});
    if (!c.empty()) parts.push_back(c);
  }
  return IntervalSet::canonicalize(std::move(parts));
}

std::vector<MeasurableSet> all_members(const MeasurableSpace& s) {
  std::vector<MeasurableSet> out;
  for (Mask m : s.sigma().members()) out.emplace_back(m);
  return out;
}

void merge(VerificationReport& into, const VerificationReport& part, const std::string& prefix) {
  for (const CheckCase& c : part.cases) into.add(prefix + ": " + c.name, c.pass, c.detail);
}

VerificationReport enumeration_suite(bool dynkin, int size) {
  if (size < 1 || size > 4) fail(ErrorCode::PreconditionFailed, "enumeration suites support sizes 1..4");
  VerificationReport r;
  r.title = dynkin ? "dynkin" : "monotone-class";
  for (int n = 1; n <= size; ++n) {
    EnumerationReport e = dynkin ? verify_dynkin(n) : verify_monotone_class(n);
    r.instances += e.cases;
    std::string detail = std::to_string(e.cases) + (dynkin ? " pi-systems" : " set algebras");
    if (e.failures) detail += ", " + std::to_string(e.failures) + " failures, first " + e.failure_witnesses.front();
    r.add("universe size " + std::to_string(n), e.failures == 0, detail);
  }
  return r;
}

VerificationReport measure_axioms_suite() {
  VerificationReport r;
  r.title = "measure-axioms";
  Rng rng(20231);
  const MeasurableSpace four = MeasurableSpace::finite(FiniteUniverse(4));
  std::vector<XReal> w;
  for (int i = 0; i < 4; ++i) w.emplace_back(rng.rational(0, 3));
  merge(r, verify_measure_axioms(Measure::table(four, w), all_members(four)), "table on 4 points");
  w[3] = XReal::pos_inf();
  merge(r, verify_measure_axioms(Measure::table(four, w), all_members(four)), "table with an infinite weight");
  merge(r, verify_measure_axioms(Measure::counting(four, Mask{0b0101}), all_members(four)), "counting");
  merge(r, verify_measure_axioms(Measure::dirac(four, 2), all_members(four)), "dirac");

  const MeasurableSpace coarse =
      MeasurableSpace::finite(generate(SystemKind::SigmaAlgebra, SubsetFamily(FiniteUniverse(4), {0b0011, 0b0100})));
  merge(r, verify_measure_axioms(Measure::table(coarse, {XReal(1), XReal(2), XReal(3), XReal(0)}), all_members(coarse)),
        "table on a coarse sigma-algebra");

  std::vector<MeasurableSet> line_samples;
  for (int i = 0; i < 12; ++i) line_samples.emplace_back(random_interval_set(rng));
  const Measure lambda = Measure::lebesgue();
  merge(r, verify_measure_axioms(lambda, line_samples), "lebesgue");
  merge(r, verify_measure_axioms(Measure::dirac(line(), Rational(1, 2)), line_samples), "dirac on the line");
  IntervalSet points = IntervalSet::canonicalize({Interval::point(0), Interval::point(1), Interval::point(Rational(5, 2))});
  merge(r, verify_measure_axioms(Measure::counting(line(), points), line_samples), "counting on points");
  IntervalSet window(cc(-1, 2));
  merge(r, verify_measure_axioms(Measure::restricted(lambda, window), line_samples), "restricted lebesgue");
  std::vector<MeasurableSet> inside;
  for (const auto& s : line_samples) inside.emplace_back(intersect(std::get<IntervalSet>(s), window));
  merge(r, verify_measure_axioms(Measure::trace(lambda, window), inside), "trace lebesgue");

  const MeasurableSpace two = MeasurableSpace::finite(FiniteUniverse(2));
  const MeasurableSpace three = MeasurableSpace::finite(FiniteUniverse(3));
  Measure tensor = tensor_measure(Measure::table(two, {XReal(1), XReal(Rational(1, 2))}),
                                  Measure::table(three, {XReal(2), XReal(0), XReal(3)}));
  merge(r, verify_measure_axioms(tensor, all_members(tensor.space())), "tensor of tables");

  std::vector<MeasurableSet> boxes;
  for (int i = 0; i < 6; ++i)
    boxes.emplace_back(BoxSet::rectangle(random_interval_set(rng), random_interval_set(rng)));
  merge(r, verify_measure_axioms(Measure::lebesgue2(), boxes), "lebesgue2");

  const MeasurableSpace x3 = MeasurableSpace::finite(FiniteUniverse(3));
  SubsetFamily singletons(x3.universe(), {0b000, 0b001, 0b010, 0b100, 0b111});
  std::vector<XReal> v{XReal(1), XReal(Rational(2, 3)), XReal(5)};
  bool unique = verify_uniqueness_pi_system(x3, singletons, Measure::table(x3, v), Measure::table(x3, v));
  r.add("uniqueness from the singleton pi-system", unique, "|X| = 3");

  bool agree = true;
  Measure base = Measure::table(four, {XReal(1), XReal(2), XReal(3), XReal(4)});
  Mask y = 0b1010;
  Measure tr = Measure::trace(base, y);
  Measure re = Measure::restricted(base, y);
  for (Mask a : tr.space().sigma().members())
    if (measure(tr, a) != measure(re, expand_mask(a, y))) agree = false;
  r.add("trace and restricted agree on the trace sigma-algebra", agree);
  return r;
}

VerificationReport convergence_suite() {
  VerificationReport r;
  r.title = "convergence";
  const Measure lambda = Measure::lebesgue();
  const Rational tol = two_pow_minus(10);
  merge(r, verify_convergence(Theorem::BeppoLevi, beppo_levi_battery(), lambda, 10, tol), "Beppo Levi");
  merge(r, verify_convergence(Theorem::Fatou, fatou_battery(), lambda, 12, tol), "Fatou");
  merge(r, verify_convergence(Theorem::Dominated, dominated_battery(), lambda, 1024, tol), "dominated");
  merge(r, verify_convergence(Theorem::ExtendedDominated, extended_dominated_battery(), extended_dominated_measure(),
                              1024, tol),
        "extended dominated");
  return r;
}

MeasurableFn random_line_fn(Rng& rng) {
  if (rng.range(0, 1) == 0) {
    std::vector<Term> terms;
    int k = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < k; ++i) {
      Rational a = rng.rational(-3, 3);
      Rational b = rng.rational(-3, 3);
      sorted_pair_lo(a, b);
      if (a == b) b += 1;
      terms.push_back(Term{rng.rational(-3, 3), IntervalSet(co(a, b))});
    }
    return MeasurableFn::step(SimpleFn(line(), std::move(terms)));
  }
  std::vector<AffinePiece> pieces;
  Rational x = rng.rational(-3, 0);
  int k = static_cast<int>(rng.range(1, 3));
  for (int i = 0; i < k; ++i) {
    Rational next = x + Rational(rng.range(1, 8), rng.range(1, 4));
    pieces.push_back(AffinePiece{co(x, next), rng.rational(-2, 2), rng.rational(-2, 2)});
    x = next;
  }
  return MeasurableFn::piecewise_linear(std::move(pieces));
}

VerificationReport chebyshev_suite() {
  VerificationReport r;
  r.title = "chebyshev";
  Rng rng(7);
  const Measure lambda = Measure::lebesgue();
  const MeasurableSpace four = MeasurableSpace::finite(FiniteUniverse(4));
  std::size_t failures = 0;
  std::string witness;
  for (int i = 0; i < 200; ++i) {
    Rational a(rng.range(1, 12), rng.range(1, 4));
    ChebyshevResult c;
    std::string what;
    if (i % 4 == 3) {
      std::vector<XReal> v, w;
      for (int p = 0; p < 4; ++p) {
        v.emplace_back(rng.rational(-3, 3));
        w.emplace_back(rng.rational(0, 2));
      }
      MeasurableFn f = MeasurableFn::finite_map(four, v);
      what = f.describe();
      c = chebyshev(f, Measure::table(four, w), a, 20);
    } else {
      MeasurableFn f = random_line_fn(rng);
      what = f.describe();
      c = chebyshev(f, lambda, a, 20);
    }
    if (!c.holds) {
      ++failures;
      if (witness.empty()) witness = what + " at a=" + to_string(a) + ": " + c.lhs.to_string() + " > " + c.rhs.value.to_string();
    }
  }
  r.add("a mu(|f| >= a) <= N1(f) on 200 random pairs", failures == 0,
        failures ? witness : "200 pairs");
  r.instances = 200;
  return r;
}

VerificationReport tonelli_suite() {
  VerificationReport r;
  r.title = "tonelli";
  Rng rng(846);
  const MeasurableSpace x3 = MeasurableSpace::finite(FiniteUniverse(3));
  std::vector<XReal> w1, w2;
  for (int i = 0; i < 3; ++i) {
    w1.emplace_back(rng.rational(0, 3));
    w2.emplace_back(rng.rational(0, 3));
  }
  w2[1] = XReal(0);
  const Measure mu1 = Measure::table(x3, w1);
  const Measure mu2 = Measure::table(x3, w2);
  const MeasurableSpace prod = MeasurableSpace::product(x3, x3);
  std::size_t bad = 0;
  std::string witness;
  auto check = [&](const MeasurableFn& f) {
    TonelliResult a = tonelli(f, mu1, mu2, 1);
    TonelliResult b = tonelli(f, mu1, mu2, 2);
    if (a.direct != a.iterated || b.direct != b.iterated || a.direct != b.direct) {
      ++bad;
      if (witness.empty()) witness = f.describe();
    }
  };
  for (Mask a1 = 0; a1 < 8; ++a1)
    for (Mask a2 = 0; a2 < 8; ++a2) {
      Mask rect = rectangle(x3.universe(), x3.universe(), a1, a2);
      std::vector<XReal> v;
      for (int i = 0; i < 9; ++i) v.emplace_back((rect >> i & 1u) ? 1 : 0);
      check(MeasurableFn::finite_map(prod, v));
    }
  r.add("rectangle indicators on 3x3", bad == 0, bad ? witness : "64 rectangles");
  bad = 0;
  for (int k = 0; k < 100; ++k) {
    std::vector<XReal> v;
    for (int i = 0; i < 9; ++i) v.emplace_back(rng.range(0, 9) == 0 ? XReal::pos_inf() : XReal(rng.rational(0, 4)));
    check(MeasurableFn::finite_map(prod, v));
  }
  r.add("random nonnegative maps on 3x3", bad == 0, bad ? witness : "100 maps");

  bad = 0;
  for (int k = 0; k < 20; ++k) {
    auto random_step = [&]() {
      std::vector<Term> terms;
      for (int i = 0; i < 2; ++i) {
        Rational a = rng.rational(-2, 2);
        Rational b = a + Rational(rng.range(1, 6), rng.range(1, 3));
        terms.push_back(Term{rng.rational(0, 3), IntervalSet(co(a, b))});
      }
      return SimpleFn(line(), std::move(terms));
    };
    SimpleFn f1 = random_step();
    SimpleFn f2 = random_step();
    MeasurableFn f = MeasurableFn::step(tensor_step(f1, f2));
    TonelliResult a = tonelli(f, Measure::lebesgue(), Measure::lebesgue(), 1);
    TonelliResult b = tonelli(f, Measure::lebesgue(), Measure::lebesgue(), 2);
    XReal product = integral_sf_plus(f1, Measure::lebesgue()) * integral_sf_plus(f2, Measure::lebesgue());
    if (a.direct != product || a.iterated != product || b.iterated != product) {
      ++bad;
      if (witness.empty()) witness = f.describe();
    }
  }
  r.add("tensor step functions under lebesgue2", bad == 0, bad ? witness : "20 pairs");
  r.instances = 64 + 100 + 20;
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dynkin",      "monotone-class", "measure-axioms",
                                              "convergence", "chebyshev",      "tonelli"};
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "dynkin") return enumeration_suite(true, options.size);
  if (name == "monotone-class") return enumeration_suite(false, options.size);
  if (name == "measure-axioms") return measure_axioms_suite();
  if (name == "convergence") return convergence_suite();
  if (name == "chebyshev") return chebyshev_suite();
  if (name == "tonelli") return tonelli_suite();
  fail(ErrorCode::PreconditionFailed, "unknown suite \"" + name + "\"");
}

}  // namespace measkit
