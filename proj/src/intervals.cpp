#include "measkit/intervals.hpp"

#include <algorithm>

namespace measkit {

namespace {

// Orders lower bounds: smaller value first; at equal values a closed bound
// starts earlier.
bool lower_before(const Bound& a, const Bound& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

// Orders upper bounds: smaller value first; at equal values an open bound
// ends earlier.
bool upper_before(const Bound& a, const Bound& b) {
  if (a.value != b.value) return a.value < b.value;
  return !a.closed && b.closed;
}

Bound tighter_lower(const Bound& a, const Bound& b) { return lower_before(a, b) ? b : a; }
Bound tighter_upper(const Bound& a, const Bound& b) { return upper_before(a, b) ? a : b; }
Bound looser_upper(const Bound& a, const Bound& b) { return upper_before(a, b) ? b : a; }

Bound open_at(const XReal& v) { return Bound{v, false}; }

// Complementary bound at the same value (the point switches sides). Infinite
// bounds stay open.
Bound flipped(const Bound& b) { return Bound{b.value, b.value.is_finite() && !b.closed}; }

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\n");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Interval::Interval(Bound lo, Bound hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if ((!lo_.value.is_finite() && lo_.closed) || (!hi_.value.is_finite() && hi_.closed))
    fail(ErrorCode::MalformedBound, "infinite endpoints must be open");
  if (lo_.value > hi_.value)
    fail(ErrorCode::MalformedBound,
         "lower bound " + lo_.value.to_string() + " exceeds upper bound " + hi_.value.to_string());
}

bool Interval::empty() const {
  if (lo_.value < hi_.value) return false;
  return !(lo_.closed && hi_.closed);
}

bool Interval::contains(const Rational& x) const {
  XReal v(x);
  bool above = lo_.closed ? lo_.value <= v : lo_.value < v;
  bool below = hi_.closed ? v <= hi_.value : v < hi_.value;
  return above && below;
}

XReal Interval::length() const {
  if (empty()) return XReal();
  return hi_.value - lo_.value;
}

std::string Interval::to_string() const {
  return std::string(lo_.closed ? "[" : "(") + lo_.value.to_string() + "," +
         hi_.value.to_string() + (hi_.closed ? "]" : ")");
}

Interval Interval::parse(std::string_view text) {
  std::string s = trim(text);
  if (s.size() < 5 || (s.front() != '(' && s.front() != '[') ||
      (s.back() != ')' && s.back() != ']'))
    fail(ErrorCode::ParseError, "malformed interval '" + std::string(text) + "'");
  auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    fail(ErrorCode::ParseError, "malformed interval '" + std::string(text) + "'");
  XReal lo = XReal::parse(trim(std::string_view(s).substr(1, comma - 1)));
  XReal hi = XReal::parse(trim(std::string_view(s).substr(comma + 1, s.size() - comma - 2)));
  bool lo_closed = s.front() == '[';
  bool hi_closed = s.back() == ']';
  if ((!lo.is_finite() && lo_closed) || (!hi.is_finite() && hi_closed))
    fail(ErrorCode::ParseError, "'" + std::string(text) + "': inf only allowed on an open side");
  return Interval({lo, lo_closed}, {hi, hi_closed});
}

Interval intersect(const Interval& a, const Interval& b) {
  Bound lo = tighter_lower(a.lo(), b.lo());
  Bound hi = tighter_upper(a.hi(), b.hi());
  if (lo.value > hi.value) return Interval(open_at(lo.value), open_at(lo.value));
  return Interval(lo, hi);
}

IntervalSet::IntervalSet(Interval i) {
  if (!i.empty()) components_.push_back(std::move(i));
}

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw) {
  std::erase_if(raw, [](const Interval& i) { return i.empty(); });
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return lower_before(a.lo(), b.lo()); });
  IntervalSet out;
  for (Interval& next : raw) {
    if (!out.components_.empty()) {
      Interval& cur = out.components_.back();
      const Bound& hi = cur.hi();
      const Bound& lo = next.lo();
      bool touches = lo.value < hi.value || (lo.value == hi.value && (hi.closed || lo.closed));
      if (touches) {
        cur = Interval(cur.lo(), looser_upper(cur.hi(), next.hi()));
        continue;
      }
    }
    out.components_.push_back(std::move(next));
  }
  return out;
}

bool IntervalSet::bounded() const {
  return components_.empty() ||
         (components_.front().lo().value.is_finite() && components_.back().hi().value.is_finite());
}

bool IntervalSet::contains(const Rational& x) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const Interval& i) { return i.contains(x); });
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return difference(*this, other).empty();
}

std::vector<Rational> IntervalSet::endpoints() const {
  std::vector<Rational> out;
  for (const Interval& i : components_) {
    if (i.lo().value.is_finite()) out.push_back(i.lo().value.value());
    if (i.hi().value.is_finite()) out.push_back(i.hi().value.value());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string IntervalSet::to_string() const {
  if (components_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += " u ";
    s += components_[i].to_string();
  }
  return s;
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<Interval> gaps;
  Bound start = open_at(XReal::neg_inf());
  for (const Interval& c : a.components()) {
    Bound end = flipped(c.lo());
    if (start.value <= end.value) gaps.emplace_back(start, end);
    start = flipped(c.hi());
  }
  if (start.value.is_finite() || start.value.is_neg_inf())
    gaps.emplace_back(start, open_at(XReal::pos_inf()));
  return IntervalSet::canonicalize(std::move(gaps));
}

IntervalSet set_op(SetOp op, const IntervalSet& a, const IntervalSet& b) {
  switch (op) {
    case SetOp::Union: {
      std::vector<Interval> all = a.components();
      all.insert(all.end(), b.components().begin(), b.components().end());
      return IntervalSet::canonicalize(std::move(all));
    }
    case SetOp::Intersect: {
      std::vector<Interval> out;
      const auto& xs = a.components();
      const auto& ys = b.components();
      std::size_t i = 0, j = 0;
      while (i < xs.size() && j < ys.size()) {
        Interval meet = intersect(xs[i], ys[j]);
        if (!meet.empty()) out.push_back(meet);
        if (upper_before(xs[i].hi(), ys[j].hi()))
          ++i;
        else
          ++j;
      }
      return IntervalSet::canonicalize(std::move(out));
    }
    case SetOp::Difference:
      return intersect(a, complement(b));
  }
  return {};
}

XReal length(const IntervalSet& a) {
  XReal total;
  for (const Interval& i : a.components()) total = total + i.length();
  return total;
}

XReal lebesgue(const IntervalSet& a) { return length(a); }

Rational sample_point(const IntervalSet& a) {
  if (a.empty()) fail(ErrorCode::PreconditionFailed, "sample_point of the empty set");
  const Interval& c = a.components().front();
  const XReal& lo = c.lo().value;
  const XReal& hi = c.hi().value;
  if (c.lo().closed) return lo.value();
  if (lo.is_finite() && hi.is_finite()) return Rational((lo.value() + hi.value()) / 2);
  if (lo.is_finite()) return Rational(lo.value() + 1);
  if (hi.is_finite()) return Rational(hi.value() - 1);
  return Rational(0);
}

namespace {

void require_bounded_open(const std::vector<Interval>& cover) {
  for (std::size_t k = 0; k < cover.size(); ++k) {
    const Interval& i = cover[k];
    if (!i.bounded() || i.lo().closed || i.hi().closed)
      fail(ErrorCode::PreconditionFailed,
           "cover interval " + std::to_string(k) + " " + i.to_string() + " is not bounded and open");
  }
}

void require_covers(const IntervalSet& target, const std::vector<Interval>& cover) {
  IntervalSet uncovered = difference(target, IntervalSet::canonicalize(cover));
  if (!uncovered.empty())
    fail(ErrorCode::NotACover, "point " + to_string(sample_point(uncovered)) + " is not covered");
}

}  // namespace

XReal cover_upper_bound(const IntervalSet& a, const std::vector<Interval>& cover) {
  require_bounded_open(cover);
  require_covers(a, cover);
  XReal total;
  for (const Interval& i : cover) total = total + i.length();
  return total;
}

std::vector<std::size_t> extract_finite_subcover(const Rational& a, const Rational& b,
                                                 const std::vector<Interval>& cover) {
  if (a > b) fail(ErrorCode::PreconditionFailed, "extract_finite_subcover needs a <= b");
  require_bounded_open(cover);
  require_covers(IntervalSet(Interval::closed(XReal(a), XReal(b))), cover);

  std::vector<bool> available(cover.size(), true);
  std::vector<std::size_t> chain;
  XReal x(a);
  const XReal end(b);
  while (true) {
    std::size_t next = cover.size();
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (available[j] && cover[j].lo().value < x && x < cover[j].hi().value) {
        next = j;
        break;
      }
    }
    // Unreachable once containment holds; kept so a bad cover cannot loop.
    if (next == cover.size())
      fail(ErrorCode::NotACover, "no remaining interval contains " + x.to_string());
    available[next] = false;
    chain.push_back(next);
    x = cover[next].hi().value;
    if (end < x) break;
  }
  return chain;
}

std::vector<Piece> elementary_pieces(const std::vector<Rational>& breakpoints) {
  std::vector<Piece> out;
  if (breakpoints.empty()) {
    out.push_back({Interval::real_line(), Rational(0)});
    return out;
  }
  const Rational& first = breakpoints.front();
  out.push_back({Interval::open(XReal::neg_inf(), XReal(first)), Rational(first - 1)});
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    const Rational& p = breakpoints[k];
    out.push_back({Interval::point(p), p});
    if (k + 1 < breakpoints.size()) {
      const Rational& q = breakpoints[k + 1];
      out.push_back({Interval::open(XReal(p), XReal(q)), Rational((p + q) / 2)});
    }
  }
  const Rational& last = breakpoints.back();
  out.push_back({Interval::open(XReal(last), XReal::pos_inf()), Rational(last + 1)});
  return out;
}

}  // namespace measkit
