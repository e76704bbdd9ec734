#pragma once

#include <utility>
#include <vector>

#include "measkit/lebint.hpp"

namespace measkit {

// Section of a product set at an anchor of factor `axis` (1 or 2): the
// points of the other factor paired with the anchor. AnchorOutOfSpace when
// the anchor is not a point of factor `axis`.
MeasurableSet section_set(const MeasurableSpace& product, const MeasurableSet& a, int axis, const Point& anchor);

/// x_axis -> mu_j(section of A at x_axis), tabulated per point of a finite
/// factor or per elementary piece of the line.
struct SectionMeasure {
  std::vector<XReal> by_point;
  std::vector<std::pair<Interval, XReal>> by_piece;
};
SectionMeasure measure_of_section(const MeasurableSpace& product, const MeasurableSet& a, int axis,
                                  const Measure& mu_other);

struct TonelliResult {
  XReal direct;
  XReal iterated;
};

// Integral against mu1 x mu2 computed directly and as the iterated
// integral that integrates first over the factor other than `axis`.
// f is a finite map on a finite product or a step function on the plane
// (with two Lebesgue factors).
TonelliResult tonelli(const MeasurableFn& f, const Measure& mu1, const Measure& mu2, int axis);
TonelliResult tonelli_over_subset(const MeasurableFn& f, const MeasurableSet& a, const Measure& mu1,
                                  const Measure& mu2, int axis);

// (x, y) -> f1(x) f2(y) for step functions on the line.
SimpleFn tensor_step(const SimpleFn& f1, const SimpleFn& f2);

/// Step function on a rectangular grid: cells[i][j] is the value on
/// [xs[i], xs[i+1]) x [ys[j], ys[j+1]); zero outside the grid.
struct StepFn2D {
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  std::vector<std::vector<Rational>> cells;
};
SimpleFn to_simple(const StepFn2D& f);

MeasurableSpace plane_space();

}  // namespace measkit
