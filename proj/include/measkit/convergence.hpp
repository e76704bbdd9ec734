#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "measkit/lebint.hpp"
#include "measkit/report.hpp"

namespace measkit {

enum class Theorem { BeppoLevi, Fatou, Dominated, ExtendedDominated };
const char* theorem_name(Theorem t);

using Family = std::function<MeasurableFn(int)>;
using Rate = std::function<XReal(int)>;

/// One sequence with its declared limit data. Limits are never inferred;
/// the verifier checks the declarations at truncations.
///
/// BeppoLevi: `limit` is the pointwise limit of the nondecreasing f_n and
/// `rate(n)` bounds the integral gap at n.
/// Fatou: `tail_inf(n)` is inf over k >= n of f_k, `limit` the pointwise
/// liminf and `liminf_integral` the liminf of the integrals; `rate(n)`
/// (optional) bounds |integral of f_n - liminf_integral|.
/// Dominated and ExtendedDominated: `dominator` bounds |f_n| (everywhere,
/// or almost everywhere on finite spaces) and `rate(n)` bounds N1(f_n - f).
struct ConvergenceCase {
  std::string name;
  Family f;
  MeasurableFn limit;
  std::optional<MeasurableFn> dominator;
  Family tail_inf;
  std::optional<XReal> liminf_integral;
  Rate rate;
  int n0 = 0;
};

// Checks the hypotheses and conclusion of the theorem on every case for
// indices n0..n_max. Violated hypotheses throw HypothesisFailed with the
// case name and a witness; failed conclusions are reported with margins.
// Integrals of piecewise linear functions without a closed form use
// `levels` adapted levels; `tol` is the target for the final margins.
VerificationReport verify_convergence(Theorem theorem, const std::vector<ConvergenceCase>& battery,
                                      const Measure& mu, int n_max, const Rational& tol, int levels = 20);

}  // namespace measkit
