#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "measkit/boxset.hpp"
#include "measkit/intervals.hpp"
#include "measkit/setsys.hpp"

namespace measkit {

/// A measurable set of one of the supported spaces: a bitmask over a finite
/// universe (including finite products), an interval set of the line, or a
/// box set of the plane.
using MeasurableSet = std::variant<Mask, IntervalSet, BoxSet>;

/// A point: element index of a finite universe, real number, or plane point.
using Point = std::variant<int, Rational, std::pair<Rational, Rational>>;

enum class SpaceKind { Finite, RealLine, FiniteProduct, Plane };

class MeasurableSpace {
 public:
  // Finite universe with the given sigma-algebra (validated).
  static MeasurableSpace finite(const SubsetFamily& sigma);
  static MeasurableSpace finite(const FiniteUniverse& universe);  // power set
  // The real line, or the trace of the Borel sets on `domain`.
  static MeasurableSpace real_line();
  static MeasurableSpace real_line(const IntervalSet& domain);
  // Finite x finite (product sigma-algebra) or line x line (plane).
  static MeasurableSpace product(const MeasurableSpace& left, const MeasurableSpace& right);

  SpaceKind kind() const;
  bool is_finite() const { return kind() == SpaceKind::Finite || kind() == SpaceKind::FiniteProduct; }

  // Finite and finite-product spaces.
  const FiniteUniverse& universe() const;
  const SubsetFamily& sigma() const;
  const std::vector<Mask>& atoms() const;
  // Product spaces.
  const MeasurableSpace& left() const;
  const MeasurableSpace& right() const;
  // Real line.
  const IntervalSet& domain() const;

  MeasurableSet full_set() const;
  MeasurableSet empty_set() const;
  bool is_measurable(const MeasurableSet& s) const;
  // Throws NotMeasurable.
  void require_measurable(const MeasurableSet& s) const;
  bool contains(const Point& p) const;

  std::string describe() const;

  friend bool operator==(const MeasurableSpace& a, const MeasurableSpace& b);

 private:
  struct Impl;
  explicit MeasurableSpace(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Set algebra on sets of the same space.
MeasurableSet set_intersect(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_union(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_difference(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet set_complement(const MeasurableSpace& space, const MeasurableSet& a);
bool set_empty(const MeasurableSet& a);
bool set_contains(const MeasurableSet& a, const Point& p);
bool set_subset(const MeasurableSet& a, const MeasurableSet& b);

std::string format_set(const MeasurableSpace& space, const MeasurableSet& s);
std::string format_point(const MeasurableSpace& space, const Point& p);

// Finite evaluation grid for pointwise checks on the line: every breakpoint,
// midpoints between consecutive breakpoints, and one point beyond each end.
std::vector<Rational> test_grid(std::vector<Rational> breakpoints);

}  // namespace measkit
