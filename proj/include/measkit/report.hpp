#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace measkit {

struct CheckCase {
  std::string name;
  bool pass = true;
  std::string detail;  // margin or witness
};

/// Outcome of a verification run: one entry per checked property or case.
struct VerificationReport {
  std::string title;
  std::vector<CheckCase> cases;
  std::size_t instances = 0;  // enumerated instances behind the cases, if counted

  void add(std::string name, bool pass, std::string detail = {}) {
    cases.push_back(CheckCase{std::move(name), pass, std::move(detail)});
  }
  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CheckCase& c) { return !c.pass; }));
  }
  bool ok() const { return failures() == 0; }
};

}  // namespace measkit
