#include "measkit/boxset.hpp"

#include <algorithm>

namespace measkit {

namespace {

std::vector<Rational> merge_breakpoints(std::vector<Rational> a, const std::vector<Rational>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

BoxSet BoxSet::from_sections(const std::vector<Rational>& breakpoints,
                             const std::function<IntervalSet(const Rational&)>& section) {
  std::vector<IntervalSet> sections;
  std::vector<std::vector<Interval>> pieces;
  for (const Piece& p : elementary_pieces(breakpoints)) {
    IntervalSet s = section(p.representative);
    if (s.empty()) continue;
    auto it = std::find(sections.begin(), sections.end(), s);
    if (it == sections.end()) {
      sections.push_back(std::move(s));
      pieces.push_back({p.interval});
    } else {
      pieces[static_cast<std::size_t>(it - sections.begin())].push_back(p.interval);
    }
  }
  BoxSet out;
  for (std::size_t k = 0; k < sections.size(); ++k)
    out.slabs_.push_back(Box{IntervalSet::canonicalize(std::move(pieces[k])), std::move(sections[k])});
  return out;
}

BoxSet BoxSet::from_boxes(const std::vector<Box>& boxes) {
  std::vector<Rational> bps;
  for (const Box& b : boxes) bps = merge_breakpoints(std::move(bps), b.x.endpoints());
  return from_sections(bps, [&](const Rational& x) {
    IntervalSet s;
    for (const Box& b : boxes)
      if (b.x.contains(x)) s = unite(s, b.y);
    return s;
  });
}

BoxSet BoxSet::rectangle(const IntervalSet& x, const IntervalSet& y) {
  return from_boxes({Box{x, y}});
}

BoxSet BoxSet::plane() { return rectangle(IntervalSet::real_line(), IntervalSet::real_line()); }

bool BoxSet::contains(const Rational& x, const Rational& y) const {
  return section_at_x(x).contains(y);
}

IntervalSet BoxSet::section_at_x(const Rational& x) const {
  for (const Box& b : slabs_)
    if (b.x.contains(x)) return b.y;
  return {};
}

IntervalSet BoxSet::section_at_y(const Rational& y) const {
  std::vector<Interval> parts;
  for (const Box& b : slabs_)
    if (b.y.contains(y)) parts.insert(parts.end(), b.x.components().begin(), b.x.components().end());
  return IntervalSet::canonicalize(std::move(parts));
}

BoxSet BoxSet::transposed() const {
  std::vector<Rational> bps;
  for (const Box& b : slabs_) bps = merge_breakpoints(std::move(bps), b.y.endpoints());
  return from_sections(bps, [this](const Rational& y) { return section_at_y(y); });
}

std::vector<Rational> BoxSet::x_breakpoints() const {
  std::vector<Rational> bps;
  for (const Box& b : slabs_) bps = merge_breakpoints(std::move(bps), b.x.endpoints());
  return bps;
}

std::string BoxSet::to_string() const {
  if (slabs_.empty()) return "{}";
  std::string s;
  for (std::size_t k = 0; k < slabs_.size(); ++k) {
    if (k) s += " u ";
    s += "(" + slabs_[k].x.to_string() + ") x (" + slabs_[k].y.to_string() + ")";
  }
  return s;
}

BoxSet set_op(SetOp op, const BoxSet& a, const BoxSet& b) {
  std::vector<Rational> bps = merge_breakpoints(a.x_breakpoints(), b.x_breakpoints());
  return BoxSet::from_sections(bps, [&](const Rational& x) {
    return set_op(op, a.section_at_x(x), b.section_at_x(x));
  });
}

BoxSet complement(const BoxSet& a) {
  return BoxSet::from_sections(a.x_breakpoints(),
                               [&](const Rational& x) { return complement(a.section_at_x(x)); });
}

XReal area(const BoxSet& s) {
  XReal total;
  for (const Box& b : s.slabs()) total = total + mul_mt(length(b.x), length(b.y));
  return total;
}

}  // namespace measkit
