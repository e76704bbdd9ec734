#include "measkit/product.hpp"

#include <algorithm>

namespace measkit {

MeasurableSpace plane_space() {
  static const MeasurableSpace plane =
      MeasurableSpace::product(MeasurableSpace::real_line(), MeasurableSpace::real_line());
  return plane;
}

namespace {

void check_axis(int axis) {
  if (axis != 1 && axis != 2) fail(ErrorCode::PreconditionFailed, "axis must be 1 or 2");
}

const MeasurableSpace& factor(const MeasurableSpace& product, int axis) {
  return axis == 1 ? product.left() : product.right();
}

}  // namespace

MeasurableSet section_set(const MeasurableSpace& product, const MeasurableSet& a, int axis, const Point& anchor) {
  check_axis(axis);
  if (product.kind() != SpaceKind::FiniteProduct && product.kind() != SpaceKind::Plane)
    fail(ErrorCode::IncompatibleSpace, "sections need a product space");
  product.require_measurable(a);
  if (!factor(product, axis).contains(anchor))
    fail(ErrorCode::AnchorOutOfSpace, "anchor " + format_point(factor(product, axis), anchor) +
                                          " is not in factor " + std::to_string(axis));
  if (product.kind() == SpaceKind::Plane) {
    const auto& boxes = std::get<BoxSet>(a);
    const auto& x = std::get<Rational>(anchor);
    return axis == 1 ? boxes.section_at_x(x) : boxes.section_at_y(x);
  }
  const Mask m = std::get<Mask>(a);
  const int n1 = product.left().universe().size();
  const int n2 = product.right().universe().size();
  const int at = std::get<int>(anchor);
  Mask out = 0;
  if (axis == 1) {
    for (int j = 0; j < n2; ++j)
      if (m >> (at * n2 + j) & 1u) out |= Mask{1} << j;
  } else {
    for (int i = 0; i < n1; ++i)
      if (m >> (i * n2 + at) & 1u) out |= Mask{1} << i;
  }
  return out;
}

SectionMeasure measure_of_section(const MeasurableSpace& product, const MeasurableSet& a, int axis,
                                  const Measure& mu_other) {
  check_axis(axis);
  const int other = 3 - axis;
  SectionMeasure out;
  if (product.kind() == SpaceKind::FiniteProduct) {
    if (!(mu_other.space() == factor(product, other)))
      fail(ErrorCode::UnsupportedShape, "measure does not live on factor " + std::to_string(other));
    for (int x = 0; x < factor(product, axis).universe().size(); ++x)
      out.by_point.push_back(measure(mu_other, section_set(product, a, axis, x)));
    return out;
  }
  if (product.kind() != SpaceKind::Plane || mu_other.space().kind() != SpaceKind::RealLine)
    fail(ErrorCode::UnsupportedShape, "section measures need finite factors or box sets with a line measure");
  product.require_measurable(a);
  const BoxSet& boxes = std::get<BoxSet>(a);
  const BoxSet oriented = axis == 1 ? boxes : boxes.transposed();
  for (const Piece& p : elementary_pieces(oriented.x_breakpoints()))
    out.by_piece.emplace_back(p.interval,
                              measure(mu_other, intersect(oriented.section_at_x(p.representative),
                                                          mu_other.space().domain())));
  return out;
}

namespace {

TonelliResult tonelli_finite(const MeasurableFn& f, const Measure& mu1, const Measure& mu2, int axis) {
  Measure tensor = tensor_measure(mu1, mu2);
  if (!(f.space() == tensor.space()))
    fail(ErrorCode::IncompatibleSpace, "function does not live on the product of the measure spaces");
  TonelliResult r;
  r.direct = integral_nonneg(f, tensor, 1).value;
  const Measure& outer = axis == 1 ? mu1 : mu2;
  const Measure& inner = axis == 1 ? mu2 : mu1;
  const int n2 = mu2.space().universe().size();
  const int n_inner = inner.space().universe().size();
  XReal total;
  for (Mask atom : outer.space().atoms()) {
    int x = std::countr_zero(atom);
    std::vector<XReal> slice;
    for (int y = 0; y < n_inner; ++y) {
      int index = axis == 1 ? x * n2 + y : y * n2 + x;
      slice.push_back(f.values()[static_cast<std::size_t>(index)]);
    }
    XReal value = integral_nonneg(MeasurableFn::finite_map(inner.space(), std::move(slice)), inner, 1).value;
    total = total + mul_mt(value, measure(outer, atom));
  }
  r.iterated = total;
  return r;
}

TonelliResult tonelli_plane(const SimpleFn& f, const Measure& mu1, const Measure& mu2, int axis) {
  if (mu1.kind() != MeasureKind::LebesgueR || mu2.kind() != MeasureKind::LebesgueR)
    fail(ErrorCode::UnsupportedShape, "plane step functions are integrated against two Lebesgue factors");
  TonelliResult r;
  r.direct = integral_sf_plus(f, tensor_measure(mu1, mu2));
  std::vector<Term> oriented;
  std::vector<Rational> cuts;
  for (const Term& t : f.terms()) {
    BoxSet s = std::get<BoxSet>(t.support);
    if (axis == 2) s = s.transposed();
    auto b = s.x_breakpoints();
    cuts.insert(cuts.end(), b.begin(), b.end());
    oriented.push_back(Term{t.coef, std::move(s)});
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const MeasurableSpace line = MeasurableSpace::real_line();
  const Measure lambda = Measure::lebesgue();
  XReal total;
  for (const Piece& p : elementary_pieces(cuts)) {
    std::vector<Term> slice;
    for (const Term& t : oriented)
      slice.push_back(Term{t.coef, std::get<BoxSet>(t.support).section_at_x(p.representative)});
    XReal value = integral_sf_plus(SimpleFn(line, std::move(slice)), lambda);
    total = total + mul_mt(value, p.interval.length());
  }
  r.iterated = total;
  return r;
}

}  // namespace

TonelliResult tonelli(const MeasurableFn& f, const Measure& mu1, const Measure& mu2, int axis) {
  check_axis(axis);
  if (!f.nonneg()) fail(ErrorCode::NegativeFunction, f.describe() + " takes negative values");
  if (f.kind() == FnKind::FiniteMap) return tonelli_finite(f, mu1, mu2, axis);
  if (f.kind() == FnKind::Step && f.space().kind() == SpaceKind::Plane)
    return tonelli_plane(f.simple(), mu1, mu2, axis);
  fail(ErrorCode::UnsupportedShape, "Tonelli needs a finite map on a finite product or a plane step function");
}

TonelliResult tonelli_over_subset(const MeasurableFn& f, const MeasurableSet& a, const Measure& mu1,
                                  const Measure& mu2, int axis) {
  f.space().require_measurable(a);
  if (f.kind() == FnKind::FiniteMap) {
    std::vector<XReal> v = f.values();
    const Mask m = std::get<Mask>(a);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!(m >> i & 1u)) v[i] = XReal();
    return tonelli(MeasurableFn::finite_map(f.space(), std::move(v)), mu1, mu2, axis);
  }
  if (f.kind() == FnKind::Step) return tonelli(MeasurableFn::step(restrict_to(f.simple(), a)), mu1, mu2, axis);
  fail(ErrorCode::UnsupportedShape, "Tonelli needs a finite map on a finite product or a plane step function");
}

SimpleFn tensor_step(const SimpleFn& f1, const SimpleFn& f2) {
  for (const SimpleFn* f : {&f1, &f2})
    if (f->space().kind() != SpaceKind::RealLine)
      fail(ErrorCode::UnsupportedShape, "tensor steps need two step functions on the line");
  std::vector<Term> terms;
  for (const Term& s : f1.terms())
    for (const Term& t : f2.terms())
      terms.push_back(Term{s.coef * t.coef, BoxSet::rectangle(std::get<IntervalSet>(s.support),
                                                              std::get<IntervalSet>(t.support))});
  return SimpleFn(plane_space(), std::move(terms));
}

SimpleFn to_simple(const StepFn2D& f) {
  auto increasing = [](const std::vector<Rational>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (!(v[i - 1] < v[i])) return false;
    return v.size() >= 2;
  };
  if (!increasing(f.xs) || !increasing(f.ys))
    fail(ErrorCode::PreconditionFailed, "grid breakpoints must be strictly increasing (at least two per axis)");
  if (f.cells.size() != f.xs.size() - 1)
    fail(ErrorCode::PreconditionFailed, "cells must have one row per x-interval");
  std::vector<Term> terms;
  for (std::size_t i = 0; i + 1 < f.xs.size(); ++i) {
    if (f.cells[i].size() != f.ys.size() - 1)
      fail(ErrorCode::PreconditionFailed, "cells must have one column per y-interval");
    IntervalSet x(Interval::closed_open(XReal(f.xs[i]), XReal(f.xs[i + 1])));
    for (std::size_t j = 0; j + 1 < f.ys.size(); ++j) {
      IntervalSet y(Interval::closed_open(XReal(f.ys[j]), XReal(f.ys[j + 1])));
      terms.push_back(Term{f.cells[i][j], BoxSet::rectangle(x, y)});
    }
  }
  return SimpleFn(plane_space(), std::move(terms));
}

}  // namespace measkit
