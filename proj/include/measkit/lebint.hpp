#pragma once

#include <optional>
#include <vector>

#include "measkit/function.hpp"

namespace measkit {

struct AdaptedStage {
  int n = 0;
  XReal integral;
};

/// An integral value. When `exact` is false, `value` is a lower value and
/// `bound` (if present) certifies the distance to the true integral.
struct IntegralValue {
  XReal value;
  bool exact = false;
  std::optional<XReal> bound;
};

struct IntegralResult {
  XReal value;
  bool exact = false;
  std::vector<AdaptedStage> stages;
  XReal stage_value;            // integral of the last stage
  std::optional<XReal> bound;   // integral minus stage_value is at most this
  bool within_tol = false;
};

// Level n of the dyadic adapted sequence: floor(2^n f)/2^n where f < n, and
// n elsewhere. NegativeFunction for functions with negative values.
SimpleFn adapted_simple(const MeasurableFn& f, int n);
// Integral of the level-n stage, streamed level by level for piecewise
// linear functions.
XReal stage_integral(const MeasurableFn& f, const Measure& mu, int n);

// Integral of a nonnegative function with the table of stages 1..n_max.
IntegralResult integral_mplus(const MeasurableFn& f, const Measure& mu, int n_max, const Rational& tol);
// Same value without the stage table.
IntegralValue integral_nonneg(const MeasurableFn& f, const Measure& mu, int n_max);
// Integral of f+ minus integral of f-; NotIntegrable when either diverges.
IntegralValue integral_signed(const MeasurableFn& f, const Measure& mu, int n_max);
// Integral of |f|.
IntegralValue seminorm_n1(const MeasurableFn& f, const Measure& mu, int n_max);
// Oriented integral over the interval between a and b; the measure must be
// diffuse (NonDiffuseMeasure).
IntegralValue integral_over_interval(const MeasurableFn& f, const XReal& a, const XReal& b, const Measure& mu,
                                     int n_max);

// Sum over a finite index set; NotAbsolutelySummable unless sum |f| < inf.
XReal counting_integral(const std::vector<XReal>& values);
// f(a); f(a) must be finite.
XReal dirac_integral(const MeasurableFn& f, const Point& a);

struct ChebyshevResult {
  XReal lhs;          // a * mu(|f| >= a)
  IntegralValue rhs;  // N1(f)
  bool holds = false;
};
ChebyshevResult chebyshev(const MeasurableFn& f, const Measure& mu, const Rational& a, int n_max);

// Finite spaces.
bool ae_equal(const MeasurableFn& f, const MeasurableFn& g, const Measure& mu);
// f + g where the sum is defined and 0 elsewhere; NotAlmostSummable when the
// undefined part is not negligible.
MeasurableFn almost_sum(const MeasurableFn& f, const MeasurableFn& g, const Measure& mu);

struct MeanValue {
  XReal lower;
  XReal mean;
  XReal upper;
  bool strict = false;
  bool exact = false;
  std::optional<Point> witness;  // a point where f equals the mean
};
// ZeroMeasure when mu(X) = 0, PreconditionFailed when mu(X) is infinite,
// UnboundedFunction when f is unbounded.
MeanValue first_mean_value(const MeasurableFn& f, const Measure& mu, int n_max);

}  // namespace measkit
