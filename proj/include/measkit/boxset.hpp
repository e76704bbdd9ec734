#pragma once

#include <functional>
#include <string>
#include <vector>

#include "measkit/intervals.hpp"

namespace measkit {

/// Rectangle A1 x A2 of the plane with interval-set sides.
struct Box {
  IntervalSet x;
  IntervalSet y;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Finite union of rectangles in canonical form: one slab per distinct
/// nonempty vertical section, where the slab's x-set is exactly the set of
/// abscissae having that section. Slabs are ordered by their leftmost piece,
/// so equal point sets have equal representations.
class BoxSet {
 public:
  BoxSet() = default;
  static BoxSet from_boxes(const std::vector<Box>& boxes);
  static BoxSet rectangle(const IntervalSet& x, const IntervalSet& y);
  static BoxSet plane();

  const std::vector<Box>& slabs() const { return slabs_; }
  bool empty() const { return slabs_.empty(); }
  bool contains(const Rational& x, const Rational& y) const;
  // Vertical section {y : (x, y) in S}.
  IntervalSet section_at_x(const Rational& x) const;
  // Horizontal section {x : (x, y) in S}.
  IntervalSet section_at_y(const Rational& y) const;
  BoxSet transposed() const;
  std::vector<Rational> x_breakpoints() const;

  std::string to_string() const;

  friend bool operator==(const BoxSet&, const BoxSet&) = default;

  // Builds the canonical form from a section function that is constant on
  // the elementary pieces cut at `breakpoints`.
  static BoxSet from_sections(const std::vector<Rational>& breakpoints,
                              const std::function<IntervalSet(const Rational&)>& section);

 private:
  std::vector<Box> slabs_;
};

BoxSet set_op(SetOp op, const BoxSet& a, const BoxSet& b);
BoxSet complement(const BoxSet& a);
inline BoxSet unite(const BoxSet& a, const BoxSet& b) { return set_op(SetOp::Union, a, b); }
inline BoxSet intersect(const BoxSet& a, const BoxSet& b) { return set_op(SetOp::Intersect, a, b); }
inline BoxSet difference(const BoxSet& a, const BoxSet& b) { return set_op(SetOp::Difference, a, b); }

// Sum of slab areas length(x) * length(y) (0 * inf = 0).
XReal area(const BoxSet& s);

}  // namespace measkit
