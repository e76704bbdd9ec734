#pragma once

#include <optional>
#include <string>

#include "measkit/xreal.hpp"

namespace measkit {

struct TaskOptions {
  // Unset values fall back to the input document, then to 20 and 2^-16.
  std::optional<int> n_max;
  std::optional<Rational> tol;
  int size = 3;
  int decimal = -1;  // digits of the approximate decimal, -1 for none
  std::string suite;  // verify: empty runs every suite
};

/// Outcome of one command: exit code 0 (ok), 1 (verification failure),
/// 2 (parse error) or 3 (precondition failure), the text report, the JSON
/// report and a diagnostic for failures.
struct TaskOutput {
  int exit_code = 0;
  std::string text;
  std::string json;
  std::string diagnostic;
};

// Commands: integrate, sigma-gen, measure, tonelli (JSON input), verify.
TaskOutput run_task(const std::string& command, const std::string& input, const TaskOptions& options);

}  // namespace measkit
