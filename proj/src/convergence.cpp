#include "measkit/convergence.hpp"

#include <algorithm>

namespace measkit {

const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::BeppoLevi: return "Beppo Levi";
    case Theorem::Fatou: return "Fatou";
    case Theorem::Dominated: return "dominated convergence";
    case Theorem::ExtendedDominated: return "extended dominated convergence";
  }
  return "?";
}

namespace {

struct Runner {
  const Measure& mu;
  int levels;

  [[noreturn]] void hypothesis(const ConvergenceCase& c, const std::string& what, int n, const std::string& witness) {
    fail(ErrorCode::HypothesisFailed,
         "case '" + c.name + "': " + what + " fails at n=" + std::to_string(n) + (witness.empty() ? "" : ": " + witness));
  }

  XReal nonneg_integral(const MeasurableFn& f) { return integral_nonneg(f, mu, levels).value; }
  XReal signed_integral(const MeasurableFn& f) { return integral_signed(f, mu, levels).value; }
  XReal n1(const MeasurableFn& f) { return seminorm_n1(f, mu, levels).value; }

  void require_nonneg(const ConvergenceCase& c, const MeasurableFn& f, int n) {
    if (!f.nonneg()) hypothesis(c, "nonnegativity", n, f.describe());
  }

  void require_leq(const ConvergenceCase& c, const MeasurableFn& f, const MeasurableFn& g, int n,
                   const std::string& what) {
    std::string w;
    if (!pointwise_leq(f, g, &w)) hypothesis(c, what, n, w);
  }

  // N1(f - g) on a finite space, ignoring a negligible set where the
  // difference is undefined or infinite.
  XReal ae_distance(const MeasurableFn& f, const MeasurableFn& g) {
    Mask bad = 0;
    std::vector<XReal> d;
    for (std::size_t i = 0; i < f.values().size(); ++i) {
      const XReal& x = f.values()[i];
      const XReal& y = g.values()[i];
      if (x.is_finite() && y.is_finite()) {
        d.push_back(abs(x - y));
      } else {
        bad |= Mask{1} << i;
        d.emplace_back();
      }
    }
    if (!is_negligible(mu, bad)) return XReal::pos_inf();
    return n1(MeasurableFn::finite_map(f.space(), std::move(d)));
  }
};

std::string margin(const XReal& lhs, const char* rel, const XReal& rhs) {
  return lhs.to_string() + " " + rel + " " + rhs.to_string();
}

bool leq(const XReal& a, const XReal& b) { return !(b < a); }

void beppo_levi(Runner& run, const ConvergenceCase& c, int n_max, VerificationReport& report) {
  XReal limit = run.nonneg_integral(c.limit);
  std::vector<XReal> integrals;
  std::optional<MeasurableFn> prev;
  bool rate_ok = true;
  std::string rate_detail;
  for (int n = c.n0; n <= n_max; ++n) {
    MeasurableFn fn = c.f(n);
    run.require_nonneg(c, fn, n);
    if (prev) run.require_leq(c, *prev, fn, n, "monotonicity f_(n-1) <= f_n");
    run.require_leq(c, fn, c.limit, n, "declared limit above f_n");
    integrals.push_back(run.nonneg_integral(fn));
    if (c.rate && limit.is_finite()) {
      XReal gap = limit - integrals.back();
      if (gap.sign() < 0 || !leq(gap, c.rate(n))) {
        rate_ok = false;
        if (rate_detail.empty()) rate_detail = "n=" + std::to_string(n) + ": gap " + margin(gap, ">", c.rate(n));
      }
    }
    prev = std::move(fn);
  }
  bool monotone = std::is_sorted(integrals.begin(), integrals.end());
  report.add(c.name + ": stage integrals nondecreasing", monotone,
             "first " + integrals.front().to_string() + ", last " + integrals.back().to_string());
  if (c.rate) {
    if (rate_ok)
      rate_detail = "gap at n_max " + margin(limit - integrals.back(), "<=", c.rate(n_max));
    report.add(c.name + ": gap within declared rate", rate_ok, rate_detail);
  }
  report.add(c.name + ": limit of integrals", leq(integrals.back(), limit),
             margin(integrals.back(), "<=", limit));
}

void fatou(Runner& run, const ConvergenceCase& c, int n_max, VerificationReport& report) {
  std::vector<MeasurableFn> fs;
  std::vector<XReal> fi;
  for (int n = c.n0; n <= n_max; ++n) {
    fs.push_back(c.f(n));
    run.require_nonneg(c, fs.back(), n);
    fi.push_back(run.nonneg_integral(fs.back()));
  }
  bool truncated_ok = true;
  std::string detail;
  std::optional<MeasurableFn> prev;
  XReal last_tail;
  for (int n = c.n0; n <= n_max; ++n) {
    MeasurableFn g = c.tail_inf(n);
    const std::size_t at = static_cast<std::size_t>(n - c.n0);
    for (std::size_t k = at; k < fs.size(); ++k) run.require_leq(c, g, fs[k], n, "tail infimum below f_k");
    if (prev) run.require_leq(c, *prev, g, n, "tail infima nondecreasing");
    run.require_leq(c, g, c.limit, n, "tail infimum below the declared liminf");
    XReal gi = run.nonneg_integral(g);
    XReal tail_min = *std::min_element(fi.begin() + static_cast<std::ptrdiff_t>(at), fi.end());
    if (!leq(gi, tail_min)) {
      truncated_ok = false;
      if (detail.empty()) detail = "n=" + std::to_string(n) + ": " + margin(gi, ">", tail_min);
    }
    last_tail = gi;
    prev = std::move(g);
  }
  report.add(c.name + ": truncated Fatou inequality", truncated_ok,
             truncated_ok ? "tail integral at n_max " + last_tail.to_string() : detail);
  XReal liminf_fn = run.nonneg_integral(c.limit);
  report.add(c.name + ": tail integrals below the liminf integral", leq(last_tail, liminf_fn),
             margin(last_tail, "<=", liminf_fn));
  if (c.liminf_integral) {
    report.add(c.name + ": Fatou inequality", leq(liminf_fn, *c.liminf_integral),
               margin(liminf_fn, "<=", *c.liminf_integral));
    if (c.rate) {
      bool ok = fi.back().is_finite() && c.liminf_integral->is_finite() &&
                leq(abs(fi.back() - *c.liminf_integral), c.rate(n_max));
      report.add(c.name + ": declared liminf of integrals",
                 ok, "integral at n_max " + fi.back().to_string() + ", declared " + c.liminf_integral->to_string());
    }
  }
}

void dominated(Runner& run, const ConvergenceCase& c, int n_max, const Rational& tol, bool ae,
               VerificationReport& report) {
  if (!c.dominator) run.hypothesis(c, "a declared dominator", c.n0, "");
  const MeasurableFn& g = *c.dominator;
  if (!run.n1(g).is_finite()) run.hypothesis(c, "integrable dominator", c.n0, g.describe());
  auto dominated_by_g = [&](const MeasurableFn& f, int n) {
    if (!ae) {
      run.require_leq(c, abs(f), g, n, "domination |f_n| <= g");
      return;
    }
    Mask bad = 0;
    for (std::size_t i = 0; i < f.values().size(); ++i)
      if (g.values()[i] < abs(f.values()[i])) bad |= Mask{1} << i;
    if (!is_negligible(run.mu, bad))
      run.hypothesis(c, "domination |f_n| <= g almost everywhere", n,
                     "on " + format_mask(f.space().universe(), bad));
  };
  dominated_by_g(c.limit, c.n0);
  XReal limit = run.signed_integral(c.limit);
  bool rate_ok = true;
  bool gap_ok = true;
  std::string detail;
  XReal last_n1;
  XReal last_gap;
  for (int n = c.n0; n <= n_max; ++n) {
    MeasurableFn fn = c.f(n);
    dominated_by_g(fn, n);
    XReal d = ae ? run.ae_distance(fn, c.limit) : run.n1(linear_combination(1, fn, -1, c.limit));
    XReal gap = abs(run.signed_integral(fn) - limit);
    if (!leq(gap, d)) {
      gap_ok = false;
      if (detail.empty()) detail = "n=" + std::to_string(n) + ": " + margin(gap, ">", d);
    }
    if (c.rate && !leq(d, c.rate(n))) rate_ok = false;
    last_n1 = d;
    last_gap = gap;
  }
  report.add(c.name + ": integral gap below N1 distance", gap_ok,
             gap_ok ? margin(last_gap, "<=", last_n1) : detail);
  if (c.rate)
    report.add(c.name + ": N1 distance within declared rate", rate_ok, margin(last_n1, "<=", c.rate(n_max)));
  report.add(c.name + ": N1 distance within tolerance at n_max", leq(last_n1, XReal(tol)),
             margin(last_n1, "<=", XReal(tol)));
  report.add(c.name + ": integrals converge within tolerance", leq(last_gap, XReal(tol)),
             margin(last_gap, "<=", XReal(tol)));
}

}  // namespace

VerificationReport verify_convergence(Theorem theorem, const std::vector<ConvergenceCase>& battery,
                                      const Measure& mu, int n_max, const Rational& tol, int levels) {
  VerificationReport report;
  report.title = theorem_name(theorem);
  Runner run{mu, levels};
  for (const ConvergenceCase& c : battery) {
    if (c.n0 > n_max) fail(ErrorCode::PreconditionFailed, "case '" + c.name + "' starts after n_max");
    switch (theorem) {
      case Theorem::BeppoLevi: beppo_levi(run, c, n_max, report); break;
      case Theorem::Fatou:
        if (!c.tail_inf) run.hypothesis(c, "a declared tail infimum", c.n0, "");
        fatou(run, c, n_max, report);
        break;
      case Theorem::Dominated: dominated(run, c, n_max, tol, false, report); break;
      case Theorem::ExtendedDominated:
        if (c.limit.kind() != FnKind::FiniteMap)
          fail(ErrorCode::IncompatibleSpace, "extended dominated convergence is checked on finite spaces");
        dominated(run, c, n_max, tol, true, report);
        break;
    }
  }
  return report;
}

}  // namespace measkit
