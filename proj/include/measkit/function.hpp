#pragma once

#include <optional>
#include <vector>

#include "measkit/simplefn.hpp"

namespace measkit {

/// x -> a*x + b on a bounded interval.
struct AffinePiece {
  Interval interval;
  Rational a;
  Rational b;

  Rational at(const Rational& x) const { return a * x + b; }
};

// Points of the piece's interval where a*x + b lies in `range`.
Interval affine_preimage(const AffinePiece& p, const Interval& range);

enum class FnKind { FiniteMap, PiecewiseLinear, Step };

/// A measurable function in one of the exactly computable classes: a table
/// on a finite space, a piecewise affine function on a bounded part of the
/// line (zero elsewhere), or a simple function.
class MeasurableFn {
 public:
  // Values must be constant on the atoms of the space (NotMeasurable).
  static MeasurableFn finite_map(const MeasurableSpace& space, std::vector<XReal> values);
  // Pieces must be bounded, nonempty and pairwise disjoint (PreconditionFailed).
  static MeasurableFn piecewise_linear(std::vector<AffinePiece> pieces);
  static MeasurableFn step(SimpleFn f);

  FnKind kind() const { return kind_; }
  const MeasurableSpace& space() const { return space_; }
  const std::vector<XReal>& values() const { return values_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const SimpleFn& simple() const { return *simple_; }

  XReal eval(const Point& x) const;
  bool nonneg() const;
  // Union of the pieces (PiecewiseLinear only).
  IntervalSet domain() const;
  // Breakpoints for pointwise checks on the line; empty for finite maps.
  std::vector<Rational> breakpoints() const;
  std::string describe() const;

 private:
  MeasurableFn(FnKind kind, MeasurableSpace space) : kind_(kind), space_(std::move(space)) {}
  FnKind kind_;
  MeasurableSpace space_;
  std::vector<XReal> values_;
  std::vector<AffinePiece> pieces_;
  std::optional<SimpleFn> simple_;
};

// Infimum and supremum of f over a set of its space (0 counts where a
// piecewise linear function is undefined). Empty sets give nullopt.
std::optional<std::pair<XReal, XReal>> bounds_on(const MeasurableFn& f, const MeasurableSet& a);

// Pointwise alpha*f + beta*g. Finite maps need the same space; a step
// function with bounded support combines with a piecewise linear function.
MeasurableFn linear_combination(const Rational& alpha, const MeasurableFn& f, const Rational& beta,
                                const MeasurableFn& g);
MeasurableFn abs(const MeasurableFn& f);
// Values clipped below at 0, and the same for -f.
std::pair<MeasurableFn, MeasurableFn> split_parts(const MeasurableFn& f);

// {x : |f(x)| >= c} for c > 0, as a set of f's space.
MeasurableSet abs_level_set(const MeasurableFn& f, const Rational& c);

// f <= g everywhere; on failure the witness names a point or region.
bool pointwise_leq(const MeasurableFn& f, const MeasurableFn& g, std::string* witness = nullptr);

// Sample points covering every region where the functions are constant or
// affine: all points of a finite space, or a grid on the line.
std::vector<Point> evaluation_points(const std::vector<const MeasurableFn*>& fns);

}  // namespace measkit
