#include "measkit/codec.hpp"

namespace measkit {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text_of(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string, got " + j.dump());
  return j.get<std::string>();
}

}  // namespace

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

XReal read_xreal(const Json& j) {
  if (j.is_number_integer()) return XReal(j.get<long long>());
  return XReal::parse(text_of(j, "number"));
}

Rational read_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text_of(j, "rational"));
}

FiniteUniverse read_universe(const Json& j) {
  if (j.is_number_integer()) {
    long n = j.get<long>();
    if (n < 1 || n > FiniteUniverse::kMaxSize) bad("universe size must be 1.." + std::to_string(FiniteUniverse::kMaxSize));
    return FiniteUniverse(static_cast<int>(n));
  }
  if (!j.is_array()) bad("universe must be a size or an array of labels");
  std::vector<std::string> labels;
  for (const Json& l : j) labels.push_back(text_of(l, "label"));
  try {
    return FiniteUniverse(std::move(labels));
  } catch (const Error& e) {
    bad(e.what());
  }
}

Mask read_mask(const FiniteUniverse& u, const Json& j) {
  if (!j.is_array()) bad("finite sets are arrays of labels, got " + j.dump());
  Mask m = 0;
  for (const Json& l : j) {
    std::string label = text_of(l, "label");
    int i = u.index_of(label);
    if (i < 0) bad("unknown label \"" + label + "\"");
    m |= Mask{1} << i;
  }
  return m;
}

SubsetFamily read_family(const FiniteUniverse& u, const Json& j) {
  if (!j.is_array()) bad("families are arrays of sets");
  std::vector<Mask> members;
  for (const Json& s : j) members.push_back(read_mask(u, s));
  return SubsetFamily(u, std::move(members));
}

MeasurableSpace read_finite_space(const Json& j) {
  FiniteUniverse u = read_universe(field(j, "universe"));
  if (j.contains("sigma")) return MeasurableSpace::finite(read_family(u, j["sigma"]));
  if (j.contains("generators"))
    return MeasurableSpace::finite(generate(SystemKind::SigmaAlgebra, read_family(u, j["generators"])));
  return MeasurableSpace::finite(u);
}

IntervalSet read_interval_set(const Json& j) {
  try {
    if (j.is_string()) return IntervalSet(Interval::parse(j.get<std::string>()));
    if (!j.is_array()) bad("line sets are interval strings or arrays of them, got " + j.dump());
    std::vector<Interval> parts;
    for (const Json& s : j) {
      Interval i = Interval::parse(text_of(s, "interval"));
      if (!i.empty()) parts.push_back(i);
    }
    return IntervalSet::canonicalize(std::move(parts));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    bad(e.what());
  }
}

BoxSet read_box_set(const Json& j) {
  const Json& boxes = field(j, "boxes");
  if (!boxes.is_array()) bad("\"boxes\" must be an array");
  std::vector<Box> out;
  for (const Json& b : boxes) {
    if (!b.is_array() || b.size() != 2) bad("a box is a pair [xset, yset]");
    out.push_back(Box{read_interval_set(b[0]), read_interval_set(b[1])});
  }
  return BoxSet::from_boxes(out);
}

MeasurableSet read_set(const MeasurableSpace& space, const Json& j) {
  MeasurableSet s;
  switch (space.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct: s = read_mask(space.universe(), j); break;
    case SpaceKind::RealLine: s = read_interval_set(j); break;
    case SpaceKind::Plane: s = read_box_set(j); break;
  }
  return s;
}

Point read_point(const MeasurableSpace& space, const Json& j) {
  switch (space.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::FiniteProduct: {
      std::string label = text_of(j, "point label");
      int i = space.universe().index_of(label);
      if (i < 0) bad("unknown label \"" + label + "\"");
      return i;
    }
    case SpaceKind::RealLine: return read_rational(j);
    case SpaceKind::Plane:
      if (!j.is_array() || j.size() != 2) bad("plane points are pairs");
      return std::make_pair(read_rational(j[0]), read_rational(j[1]));
  }
  return 0;
}

namespace {

bool has_universe(const Json& j) { return j.is_object() && j.contains("universe"); }

MeasurableSpace space_for(const Json& j) {
  return has_universe(j) ? read_finite_space(j) : MeasurableSpace::real_line();
}

Measure read_table(const Json& j) {
  const Json& w = field(j, "weights");
  MeasurableSpace space = MeasurableSpace::real_line();
  if (has_universe(j)) {
    space = read_finite_space(j);
  } else {
    if (!w.is_object()) bad("a table without \"universe\" needs weights keyed by label");
    std::vector<std::string> labels;
    for (auto it = w.begin(); it != w.end(); ++it) labels.push_back(it.key());
    Json copy = j;
    copy["universe"] = labels;
    space = read_finite_space(copy);
  }
  const FiniteUniverse& u = space.universe();
  std::vector<XReal> weights(static_cast<std::size_t>(u.size()));
  if (w.is_array()) {
    if (w.size() != weights.size()) bad("weight array size does not match the universe");
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = read_xreal(w[i]);
  } else if (w.is_object()) {
    for (auto it = w.begin(); it != w.end(); ++it) {
      int i = u.index_of(it.key());
      if (i < 0) bad("unknown label \"" + it.key() + "\" in weights");
      weights[static_cast<std::size_t>(i)] = read_xreal(it.value());
    }
  } else {
    bad("weights must be an object or an array");
  }
  return Measure::table(space, std::move(weights));
}

}  // namespace

Measure read_measure(const Json& j) {
  std::string kind = text_of(field(j, "kind"), "measure kind");
  if (kind == "lebesgue") return Measure::lebesgue();
  if (kind == "lebesgue2") return Measure::lebesgue2();
  if (kind == "table") return read_table(j);
  if (kind == "dirac") {
    MeasurableSpace space = space_for(j);
    return Measure::dirac(space, read_point(space, field(j, "at")));
  }
  if (kind == "counting") {
    MeasurableSpace space = space_for(j);
    return Measure::counting(space, read_set(space, field(j, "Y")));
  }
  if (kind == "tensor") return tensor_measure(read_measure(field(j, "left")), read_measure(field(j, "right")));
  if (kind == "restricted" || kind == "trace") {
    Measure base = read_measure(field(j, "base"));
    MeasurableSet y = read_set(base.space(), field(j, "Y"));
    return kind == "restricted" ? Measure::restricted(base, y) : Measure::trace(base, y);
  }
  bad("unknown measure kind \"" + kind + "\"");
}

StepFn2D read_grid(const Json& j) {
  StepFn2D f;
  for (const Json& x : field(j, "xs")) f.xs.push_back(read_rational(x));
  for (const Json& y : field(j, "ys")) f.ys.push_back(read_rational(y));
  for (const Json& row : field(j, "cells")) {
    if (!row.is_array()) bad("cells must be an array of rows");
    std::vector<Rational> r;
    for (const Json& v : row) r.push_back(read_rational(v));
    f.cells.push_back(std::move(r));
  }
  return f;
}

MeasurableFn read_function(const Json& j, const MeasurableSpace& space) {
  std::string kind = text_of(field(j, "kind"), "function kind");
  if (kind == "pwl") {
    std::vector<AffinePiece> pieces;
    for (const Json& p : field(j, "pieces")) {
      Interval i = Interval::parse(text_of(field(p, "interval"), "interval"));
      pieces.push_back(AffinePiece{i, read_rational(field(p, "a")), read_rational(field(p, "b"))});
    }
    return MeasurableFn::piecewise_linear(std::move(pieces));
  }
  if (kind == "map") {
    if (!space.is_finite()) bad("\"map\" functions need a finite space");
    const FiniteUniverse& u = space.universe();
    const Json& v = field(j, "values");
    std::vector<XReal> values(static_cast<std::size_t>(u.size()));
    if (v.is_array()) {
      if (v.size() != values.size()) bad("value array size does not match the universe");
      for (std::size_t i = 0; i < values.size(); ++i) values[i] = read_xreal(v[i]);
    } else {
      std::vector<bool> seen(values.size());
      for (auto it = v.begin(); it != v.end(); ++it) {
        int i = u.index_of(it.key());
        if (i < 0) bad("unknown label \"" + it.key() + "\" in values");
        values[static_cast<std::size_t>(i)] = read_xreal(it.value());
        seen[static_cast<std::size_t>(i)] = true;
      }
      for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) bad("no value for \"" + u.label(static_cast<int>(i)) + "\"");
    }
    return MeasurableFn::finite_map(space, std::move(values));
  }
  if (kind == "step") {
    std::vector<Term> terms;
    for (const Json& t : field(j, "terms"))
      terms.push_back(Term{read_rational(field(t, "coef")), read_set(space, field(t, "support"))});
    Repr repr = Repr::Simple;
    if (j.contains("repr")) {
      std::string r = text_of(j["repr"], "repr");
      if (r == "disjoint") repr = Repr::Disjoint;
      else if (r == "canonical") repr = Repr::Canonical;
      else if (r != "simple") bad("unknown representation \"" + r + "\"");
    }
    return MeasurableFn::step(SimpleFn(space, std::move(terms), repr));
  }
  if (kind == "grid") return MeasurableFn::step(to_simple(read_grid(j)));
  bad("unknown function kind \"" + kind + "\"");
}

Json write_xreal(const XReal& x) { return x.to_string(); }

}  // namespace measkit
