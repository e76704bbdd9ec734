#pragma once

#include <string>
#include <vector>

#include "measkit/convergence.hpp"
#include "measkit/report.hpp"

namespace measkit {

/// Declared-limit batteries on the Lebesgue line (the extended dominated
/// battery lives on a three-point space with a null point).
std::vector<ConvergenceCase> beppo_levi_battery();
std::vector<ConvergenceCase> fatou_battery();
std::vector<ConvergenceCase> dominated_battery();
std::vector<ConvergenceCase> extended_dominated_battery();
Measure extended_dominated_measure();

struct SuiteOptions {
  int size = 3;  // universe size for the enumeration suites
};

const std::vector<std::string>& suite_names();
// Runs a named suite; PreconditionFailed for unknown names.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace measkit
