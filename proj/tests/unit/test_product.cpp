#include <doctest.h>

#include "measkit/product.hpp"
#include "../support/oracles.hpp"

using namespace measkit;

namespace {

MeasurableSpace finite(int n) { return MeasurableSpace::finite(FiniteUniverse(n)); }
IntervalSet iv(const char* text) { return IntervalSet(Interval::parse(text)); }

}  // namespace

TEST_CASE("sections of finite product sets") {
  MeasurableSpace p = MeasurableSpace::product(finite(2), finite(3));
  Mask a = rectangle(FiniteUniverse(2), FiniteUniverse(3), 0b10, 0b101) | Mask{1};
  CHECK(std::get<Mask>(section_set(p, a, 1, Point{1})) == 0b101);
  CHECK(std::get<Mask>(section_set(p, a, 1, Point{0})) == 0b001);
  CHECK(std::get<Mask>(section_set(p, a, 2, Point{0})) == 0b11);
  try {
    (void)section_set(p, a, 1, Point{2});
    FAIL("expected AnchorOutOfSpace");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AnchorOutOfSpace);
  }
  SectionMeasure m = measure_of_section(p, a, 1, Measure::table(finite(3), {XReal(1), XReal(2), XReal(4)}));
  CHECK(m.by_point == std::vector<XReal>{XReal(1), XReal(5)});
}

TEST_CASE("sections of plane sets") {
  MeasurableSpace plane = plane_space();
  BoxSet s = unite(BoxSet::rectangle(iv("[0,2)"), iv("[0,1)")), BoxSet::rectangle(iv("[1,3)"), iv("[2,4)")));
  CHECK(std::get<IntervalSet>(section_set(plane, s, 1, Point{Rational(3, 2)})).to_string() == "[0,1) u [2,4)");
  CHECK(std::get<IntervalSet>(section_set(plane, s, 2, Point{Rational(1, 2)})).to_string() == "[0,2)");
  SectionMeasure m = measure_of_section(plane, s, 1, Measure::lebesgue());
  XReal total;
  for (const auto& [piece, v] : m.by_piece) total = total + mul_mt(piece.length(), v);
  CHECK(total == area(s));
}

TEST_CASE("tonelli on finite products matches the weighted double sum") {
  oracle::Rng rng(846);
  MeasurableSpace x2 = finite(2), x3 = finite(3);
  MeasurableSpace p = MeasurableSpace::product(x2, x3);
  for (int i = 0; i < 100; ++i) {
    std::vector<XReal> w1, w2, v;
    for (int k = 0; k < 2; ++k) w1.emplace_back(rng.rational(0, 3));
    for (int k = 0; k < 3; ++k) w2.emplace_back(rng.rational(0, 3));
    XReal expected;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b) {
        XReal x = rng.range(0, 12) == 0 ? XReal::pos_inf() : XReal(rng.rational(0, 4));
        v.push_back(x);
        expected = expected + mul_mt(x, mul_mt(w1[a], w2[b]));
      }
    Measure m1 = Measure::table(x2, w1), m2 = Measure::table(x3, w2);
    MeasurableFn f = MeasurableFn::finite_map(p, v);
    for (int axis : {1, 2}) {
      TonelliResult t = tonelli(f, m1, m2, axis);
      CHECK(t.direct == expected);
      CHECK(t.iterated == expected);
    }
  }
}

TEST_CASE("tonelli rejects negative functions") {
  MeasurableSpace p = MeasurableSpace::product(finite(1), finite(2));
  MeasurableFn f = MeasurableFn::finite_map(p, {XReal(1), XReal(-1)});
  Measure m1 = Measure::table(finite(1), {XReal(1)}), m2 = Measure::table(finite(2), {XReal(1), XReal(1)});
  try {
    (void)tonelli(f, m1, m2, 1);
    FAIL("expected NegativeFunction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeFunction);
  }
}

TEST_CASE("tensor step functions integrate to the product of integrals") {
  MeasurableSpace line = MeasurableSpace::real_line();
  SimpleFn f1(line, {Term{2, iv("[0,1)")}, Term{1, iv("[1/2,3)")}});
  SimpleFn f2(line, {Term{Rational(1, 3), iv("[-1,2)")}});
  SimpleFn t = tensor_step(f1, f2);
  CHECK(t.eval(Point{std::make_pair(Rational(3, 4), Rational(0))}) == 1);
  MeasurableFn f = MeasurableFn::step(t);
  XReal expected = integral_sf_plus(f1, Measure::lebesgue()) * integral_sf_plus(f2, Measure::lebesgue());
  for (int axis : {1, 2}) {
    TonelliResult r = tonelli(f, Measure::lebesgue(), Measure::lebesgue(), axis);
    CHECK(r.direct == expected);
    CHECK(r.iterated == expected);
  }
  TonelliResult sub =
      tonelli_over_subset(f, BoxSet::rectangle(iv("[0,1)"), iv("[0,1)")), Measure::lebesgue(), Measure::lebesgue(), 2);
  CHECK(sub.direct == XReal(Rational(5, 6)));
  CHECK(sub.iterated == sub.direct);
}

TEST_CASE("grid step functions") {
  StepFn2D g{{0, 1, 3}, {0, 2}, {{1}, {Rational(1, 2)}}};
  SimpleFn s = to_simple(g);
  CHECK(s.eval(Point{std::make_pair(Rational(1, 2), Rational(1))}) == 1);
  CHECK(s.eval(Point{std::make_pair(Rational(2), Rational(1))}) == Rational(1, 2));
  CHECK(s.eval(Point{std::make_pair(Rational(3), Rational(1))}) == 0);
  CHECK(integral_sf_plus(s, Measure::lebesgue2()) == XReal(4));
}
