#include <doctest.h>

#include "measkit/simplefn.hpp"
#include "../support/oracles.hpp"

using namespace measkit;

namespace {

MeasurableSpace finite(int n) { return MeasurableSpace::finite(FiniteUniverse(n)); }

SimpleFn random_finite(oracle::Rng& rng, const MeasurableSpace& s, bool nonneg) {
  std::vector<Term> terms;
  int k = static_cast<int>(rng.range(0, 4));
  for (int i = 0; i < k; ++i)
    terms.push_back(Term{rng.rational(nonneg ? 0 : -3, 3), Mask(rng.range(0, (1 << s.universe().size()) - 1))});
  return SimpleFn(s, std::move(terms));
}

Rational pointwise_sum(const SimpleFn& f, const std::vector<XReal>& w) {
  Rational total = 0;
  for (int i = 0; i < f.space().universe().size(); ++i) total += f.eval(Point{i}) * w[i].value();
  return total;
}

}  // namespace

TEST_CASE("representations are validated") {
  MeasurableSpace s = finite(3);
  CHECK_THROWS_AS(SimpleFn(s, {Term{1, Mask{0b011}}, Term{2, Mask{0b110}}}, Repr::Disjoint), Error);
  CHECK_THROWS_AS(SimpleFn(s, {Term{1, Mask{0b011}}}, Repr::Disjoint), Error);
  CHECK_THROWS_AS(SimpleFn(s, {Term{2, Mask{0b011}}, Term{1, Mask{0b100}}}, Repr::Canonical), Error);
  CHECK_NOTHROW(SimpleFn(s, {Term{1, Mask{0b011}}, Term{2, Mask{0b100}}}, Repr::Canonical));
  MeasurableSpace coarse =
      MeasurableSpace::finite(generate(SystemKind::SigmaAlgebra, SubsetFamily(FiniteUniverse(3), {0b011})));
  try {
    SimpleFn bad(coarse, {Term{1, Mask{0b001}}});
    FAIL("expected NotMeasurable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMeasurable);
  }
}

TEST_CASE("canonical and disjoint forms evaluate like the original") {
  oracle::Rng rng(770);
  MeasurableSpace s = finite(4);
  for (int i = 0; i < 200; ++i) {
    SimpleFn f = random_finite(rng, s, false);
    SimpleFn c = canonicalize(f);
    SimpleFn d = to_disjoint(f);
    CHECK(c.repr() == Repr::Canonical);
    CHECK(d.repr() == Repr::Disjoint);
    for (int x = 0; x < 4; ++x) {
      CHECK(c.eval(Point{x}) == f.eval(Point{x}));
      CHECK(d.eval(Point{x}) == f.eval(Point{x}));
    }
    for (std::size_t k = 1; k < c.terms().size(); ++k) CHECK(c.terms()[k - 1].coef < c.terms()[k].coef);
  }
}

TEST_CASE("integrals do not depend on the representation and are linear") {
  oracle::Rng rng(772);
  MeasurableSpace s = finite(4);
  for (int i = 0; i < 200; ++i) {
    std::vector<XReal> w;
    for (int k = 0; k < 4; ++k) w.emplace_back(rng.rational(0, 3));
    Measure mu = Measure::table(s, w);
    SimpleFn f = random_finite(rng, s, true);
    SimpleFn g = random_finite(rng, s, true);
    Rational c = rng.rational(0, 4);
    XReal expected(pointwise_sum(f, w));
    CHECK(integral_sf_plus(f, mu) == expected);
    CHECK(integral_by_terms(f, mu) == expected);
    CHECK(integral_by_terms(to_disjoint(f), mu) == expected);
    CHECK(integral_sf_plus(f + g, mu) == integral_sf_plus(f, mu) + integral_sf_plus(g, mu));
    CHECK(integral_sf_plus(scale(c, f), mu) == mul_mt(XReal(c), integral_sf_plus(f, mu)));
    CHECK(integral_sf_plus(f * g, mu) == XReal(pointwise_sum(f * g, w)));
  }
}

TEST_CASE("negative values and mismatched spaces are rejected") {
  MeasurableSpace s = finite(2);
  Measure mu = Measure::table(s, {XReal(1), XReal(1)});
  try {
    (void)integral_sf_plus(SimpleFn(s, {Term{-1, Mask{1}}}), mu);
    FAIL("expected NegativeValue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeValue);
  }
  try {
    (void)(SimpleFn::constant(s, 1) + SimpleFn::constant(finite(3), 1));
    FAIL("expected SpaceMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceMismatch);
  }
}

TEST_CASE("infinite measures with zero coefficients") {
  MeasurableSpace s = finite(2);
  Measure mu = Measure::table(s, {XReal::pos_inf(), XReal(1)});
  CHECK(integral_sf_plus(SimpleFn::indicator(s, Mask{0b10}, 3), mu) == XReal(3));
  CHECK(integral_sf_plus(SimpleFn::indicator(s, Mask{0b01}, 3), mu) == XReal::pos_inf());
  CHECK(integral_sf_plus(SimpleFn::zero(s), mu) == XReal());
}

TEST_CASE("step functions on the line") {
  MeasurableSpace line = MeasurableSpace::real_line();
  Measure lam = Measure::lebesgue();
  SimpleFn f(line, {Term{2, IntervalSet(Interval::parse("[0,1)"))}, Term{1, IntervalSet(Interval::parse("[1/2,3]"))}});
  CHECK(f.eval(Point{Rational(3, 4)}) == 3);
  CHECK(integral_sf_plus(f, lam) == XReal(Rational(2 + Rational(5, 2))));
  CHECK(integral_over_subset(f, lam, IntervalSet(Interval::parse("[0,1/2]"))) == XReal(1));
  CHECK(integral_dirac(f, Point{Rational(1, 2)}) == XReal(3));
  CHECK(f.breakpoints() == std::vector<Rational>{0, Rational(1, 2), 1, 3});
  CHECK(f.max_value() == 3);
  CHECK(f.min_value() == 0);
  MeasurableSpace s = finite(3);
  SimpleFn g(s, {Term{1, Mask{0b011}}, Term{Rational(1, 2), Mask{0b110}}});
  CHECK(integral_counting(g, 0b110) == XReal(2));
}
