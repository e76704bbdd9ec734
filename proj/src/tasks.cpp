#include "measkit/tasks.hpp"

#include <sstream>

#include "measkit/codec.hpp"
#include "measkit/suites.hpp"

namespace measkit {

namespace {

struct Context {
  const TaskOptions& options;
  std::ostringstream text;
  Json json;
  bool failed = false;

  std::string show(const XReal& x) const {
    if (options.decimal < 0 || !x.is_finite()) return x.to_string();
    return x.to_string() + " (" + to_decimal(x, options.decimal) + ")";
  }

  void add_case(const std::string& name, bool pass, const std::string& witness) {
    json["cases"].push_back(Json{{"name", name}, {"status", pass ? "pass" : "fail"}, {"witness", witness}});
    if (!pass) failed = true;
  }
};

std::string show_bound(const XReal& b) {
  std::string s = b.to_string();
  if (b.is_finite()) {
    int k = dyadic_exponent(b.value());
    if (k >= 0) s += " (2^-" + std::to_string(k) + ")";
  }
  return s;
}

int resolve_n_max(const TaskOptions& o, const Json& in) {
  int n = o.n_max ? *o.n_max : in.contains("n_max") ? in["n_max"].get<int>() : 20;
  if (n < 1) fail(ErrorCode::PreconditionFailed, "n_max must be at least 1");
  return n;
}

Rational resolve_tol(const TaskOptions& o, const Json& in) {
  if (o.tol) return *o.tol;
  if (in.contains("tol")) return read_rational(in["tol"]);
  return Rational(1, 65536);
}

const Json& require(const Json& in, const char* key) {
  if (!in.is_object() || !in.contains(key)) fail(ErrorCode::ParseError, std::string("input needs \"") + key + "\"");
  return in[key];
}

void integrate(Context& c, const Json& in) {
  Measure mu = read_measure(require(in, "measure"));
  MeasurableFn f = read_function(require(in, "fn"), mu.space());
  const int n_max = resolve_n_max(c.options, in);
  const Rational tol = resolve_tol(c.options, in);
  c.text << "function: " << f.describe() << "\n";
  c.text << "measure: " << mu.describe() << "\n";
  if (!f.nonneg()) {
    IntegralValue v = integral_signed(f, mu, n_max);
    c.text << "value: " << c.show(v.value) << "\n";
    c.text << "exact: " << (v.exact ? "yes" : "no") << "\n";
    if (!v.exact && v.bound) c.text << "bound: " << show_bound(*v.bound) << "\n";
    c.json["result"] = v.value.to_string();
    c.json["exact"] = v.exact;
    if (v.bound) c.json["bound"] = v.bound->to_string();
    return;
  }
  IntegralResult r = integral_mplus(f, mu, n_max, tol);
  c.text << "stage integrals:\n";
  Json stages = Json::array();
  for (const AdaptedStage& s : r.stages) {
    c.text << "  n=" << s.n << ": " << c.show(s.integral) << "\n";
    stages.push_back(Json{{"n", s.n}, {"integral", s.integral.to_string()}});
  }
  c.text << "value: " << c.show(r.value) << "\n";
  c.text << "exact: " << (r.exact ? "yes" : "no") << "\n";
  c.text << "stage " << n_max << ": " << c.show(r.stage_value) << "\n";
  if (r.bound) c.text << "bound: " << show_bound(*r.bound) << "\n";
  else c.text << "bound: none\n";
  c.text << "within tol " << to_string(tol) << ": " << (r.within_tol ? "yes" : "no") << "\n";
  c.json["result"] = r.value.to_string();
  c.json["exact"] = r.exact;
  c.json["stage_value"] = r.stage_value.to_string();
  c.json["bound"] = r.bound ? Json(r.bound->to_string()) : Json(nullptr);
  c.json["within_tol"] = r.within_tol;
  c.json["stages"] = stages;
}

SystemKind read_system_kind(const Json& in) {
  std::string name = in.contains("system") ? in["system"].get<std::string>() : "sigma-algebra";
  if (name == "pi-system") return SystemKind::PiSystem;
  if (name == "set-algebra") return SystemKind::SetAlgebra;
  if (name == "lambda-system") return SystemKind::LambdaSystem;
  if (name == "monotone-class") return SystemKind::MonotoneClass;
  if (name == "sigma-algebra") return SystemKind::SigmaAlgebra;
  fail(ErrorCode::ParseError, "unknown system \"" + name + "\"");
}

void sigma_gen(Context& c, const Json& in) {
  FiniteUniverse u = read_universe(require(in, "universe"));
  SubsetFamily g = read_family(u, require(in, "generators"));
  SystemKind kind = read_system_kind(in);
  SubsetFamily out = generate(kind, g);
  c.text << "universe: " << format_mask(u, u.full()) << "\n";
  c.text << "generators: " << format_family(g) << "\n";
  c.text << "generated " << system_kind_name(kind) << ": " << out.size() << " members\n";
  Json members = Json::array();
  for (Mask m : out.members()) {
    c.text << "  " << format_mask(u, m) << "\n";
    Json labels = Json::array();
    for (int i = 0; i < u.size(); ++i)
      if (m >> i & 1u) labels.push_back(u.label(i));
    members.push_back(labels);
  }
  c.json["result"] = members;
}

void measure_cmd(Context& c, const Json& in) {
  Measure mu = read_measure(require(in, "measure"));
  std::vector<MeasurableSet> sets;
  if (in.contains("set")) sets.push_back(read_set(mu.space(), in["set"]));
  if (in.contains("sets"))
    for (const Json& s : in["sets"]) sets.push_back(read_set(mu.space(), s));
  if (sets.empty()) sets.push_back(mu.space().full_set());
  c.text << "measure: " << mu.describe() << "\n";
  Json values = Json::array();
  for (const MeasurableSet& s : sets) {
    XReal v = measure(mu, s);
    c.text << "mu(" << format_set(mu.space(), s) << ") = " << c.show(v) << "\n";
    values.push_back(v.to_string());
  }
  MeasureFlags flags = classify(mu);
  c.text << "finite: " << (flags.finite ? "yes" : "no") << ", sigma-finite: " << (flags.sigma_finite ? "yes" : "no")
         << ", diffuse: " << (flags.diffuse ? "yes" : "no") << "\n";
  c.json["result"] = values.size() == 1 ? values[0] : values;
  c.json["flags"] = Json{{"finite", flags.finite}, {"sigma_finite", flags.sigma_finite}, {"diffuse", flags.diffuse}};
}

void tonelli_cmd(Context& c, const Json& in) {
  Measure mu1 = read_measure(require(in, "left"));
  Measure mu2 = read_measure(require(in, "right"));
  MeasurableSpace space = MeasurableSpace::product(mu1.space(), mu2.space());
  MeasurableFn f = read_function(require(in, "fn"), space);
  std::optional<MeasurableSet> subset;
  if (in.contains("subset")) subset = read_set(space, in["subset"]);
  auto run = [&](int axis) {
    return subset ? tonelli_over_subset(f, *subset, mu1, mu2, axis) : tonelli(f, mu1, mu2, axis);
  };
  TonelliResult a = run(1);
  TonelliResult b = run(2);
  c.text << "function: " << f.describe() << "\n";
  if (subset) c.text << "subset: " << format_set(space, *subset) << "\n";
  c.text << "direct: " << c.show(a.direct) << "\n";
  c.text << "iterated i=1: " << c.show(a.iterated) << "\n";
  c.text << "iterated i=2: " << c.show(b.iterated) << "\n";
  bool agree = a.direct == a.iterated && a.direct == b.iterated;
  c.text << "agree: " << (agree ? "yes" : "no") << "\n";
  c.add_case("iterated i=1", a.direct == a.iterated, a.iterated.to_string());
  c.add_case("iterated i=2", b.direct == b.iterated, b.iterated.to_string());
  c.json["result"] = a.direct.to_string();
}

void verify(Context& c) {
  std::vector<std::string> names;
  if (c.options.suite.empty()) names = suite_names();
  else names.push_back(c.options.suite);
  SuiteOptions so;
  so.size = c.options.size;
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const std::string& name : names) {
    VerificationReport r = run_suite(name, so);
    std::size_t count = r.instances ? r.instances : r.cases.size();
    total += count;
    c.text << "suite " << name;
    if (name == "dynkin" || name == "monotone-class") c.text << " (size " << so.size << ")";
    c.text << ": " << count << " cases\n";
    for (const CheckCase& k : r.cases) {
      c.text << (k.pass ? "  PASS " : "  FAIL ") << k.name;
      if (!k.detail.empty()) c.text << " [" << k.detail << "]";
      c.text << "\n";
      c.add_case(name + ": " + k.name, k.pass, k.detail);
      if (!k.pass) ++failures;
    }
  }
  if (failures == 0) c.text << "all " << total << " cases pass\n";
  else c.text << failures << " checks fail\n";
  c.json["result"] = failures == 0 ? "pass" : "fail";
}

}  // namespace

TaskOutput run_task(const std::string& command, const std::string& input, const TaskOptions& options) {
  Context c{options, {}, Json::object(), false};
  c.json["command"] = command;
  c.json["result"] = nullptr;
  c.json["cases"] = Json::array();
  TaskOutput out;
  try {
    c.text << command << "\n";
    if (command == "verify") {
      verify(c);
    } else {
      Json in = parse_document(input);
      try {
        if (command == "integrate") integrate(c, in);
        else if (command == "sigma-gen") sigma_gen(c, in);
        else if (command == "measure") measure_cmd(c, in);
        else if (command == "tonelli") tonelli_cmd(c, in);
        else fail(ErrorCode::ParseError, "unknown command \"" + command + "\"");
      } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed input: ") + e.what());
      }
    }
    out.exit_code = c.failed ? 1 : 0;
    if (c.failed) out.diagnostic = "verification failed";
  } catch (const Error& e) {
    out.exit_code = e.code() == ErrorCode::ParseError ? 2 : 3;
    out.diagnostic = e.what();
    c.json["error"] = Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
  }
  out.text = c.text.str();
  out.json = c.json.dump(2) + "\n";
  return out;
}

}  // namespace measkit
