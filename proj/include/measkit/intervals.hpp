#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "measkit/xreal.hpp"

namespace measkit {

/// Interval endpoint. Infinite endpoints are always open.
struct Bound {
  XReal value;
  bool closed = false;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Interval of the real line with rational (or infinite, open) endpoints.
/// Nonempty means lo < hi, or lo == hi with both ends closed (a singleton).
class Interval {
 public:
  // Throws MalformedBound when lo > hi or an infinite endpoint is closed.
  Interval(Bound lo, Bound hi);

  static Interval open(XReal a, XReal b) { return Interval({std::move(a), false}, {std::move(b), false}); }
  static Interval closed(XReal a, XReal b) { return Interval({std::move(a), true}, {std::move(b), true}); }
  static Interval closed_open(XReal a, XReal b) { return Interval({std::move(a), true}, {std::move(b), false}); }
  static Interval open_closed(XReal a, XReal b) { return Interval({std::move(a), false}, {std::move(b), true}); }
  static Interval point(const Rational& x) { return closed(XReal(x), XReal(x)); }
  static Interval real_line() { return open(XReal::neg_inf(), XReal::pos_inf()); }

  const Bound& lo() const { return lo_; }
  const Bound& hi() const { return hi_; }
  bool empty() const;
  bool is_singleton() const { return lo_.closed && hi_.closed && lo_.value == hi_.value; }
  bool bounded() const { return lo_.value.is_finite() && hi_.value.is_finite(); }
  bool contains(const Rational& x) const;
  // hi - lo, inf when unbounded; 0 for empty intervals.
  XReal length() const;

  /// "(a,b)", "[a,b]", "[a,b)" or "(a,b]".
  std::string to_string() const;
  static Interval parse(std::string_view text);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Bound lo_;
  Bound hi_;
};

// Intersection of two intervals (possibly empty).
Interval intersect(const Interval& a, const Interval& b);

/// Canonical finite union of intervals: nonempty components, sorted, pairwise
/// disjoint, and no two components could be merged into one interval.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(Interval i);  // NOLINT: an interval is a one-component set
  static IntervalSet canonicalize(std::vector<Interval> raw);
  static IntervalSet real_line() { return IntervalSet(Interval::real_line()); }

  const std::vector<Interval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool bounded() const;
  bool contains(const Rational& x) const;
  bool subset_of(const IntervalSet& other) const;
  // Finite endpoints of all components, sorted and deduplicated.
  std::vector<Rational> endpoints() const;

  std::string to_string() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> components_;
};

enum class SetOp { Union, Intersect, Difference };

IntervalSet set_op(SetOp op, const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);
inline IntervalSet unite(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::Union, a, b); }
inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::Intersect, a, b); }
inline IntervalSet difference(const IntervalSet& a, const IntervalSet& b) { return set_op(SetOp::Difference, a, b); }

// Total length of the components; endpoint flags do not matter.
XReal length(const IntervalSet& a);
// Lebesgue measure of a representable set (equal to its length).
XReal lebesgue(const IntervalSet& a);

// Some point of a nonempty set, used as a witness.
Rational sample_point(const IntervalSet& a);

// Sum of the cover lengths after checking that the cover is made of bounded
// open intervals and contains A (NotACover with a witness otherwise). This is
// an upper bound for the outer measure of A.
XReal cover_upper_bound(const IntervalSet& a, const std::vector<Interval>& cover);

// Extracts a chain i0..iq of distinct cover indices with lo(i0) < a,
// b < hi(iq), and lo(i(p+1)) < hi(ip), covering [a, b]. The smallest index
// containing the current point is chosen at each step.
std::vector<std::size_t> extract_finite_subcover(const Rational& a, const Rational& b,
                                                 const std::vector<Interval>& cover);

/// Elementary pieces of the line cut at sorted distinct breakpoints: the
/// points themselves and the open gaps (including both rays). Any set whose
/// boundary lies within the breakpoints is a union of pieces.
struct Piece {
  Interval interval;
  Rational representative;
};
std::vector<Piece> elementary_pieces(const std::vector<Rational>& breakpoints);

}  // namespace measkit
