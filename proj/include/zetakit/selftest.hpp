#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetakit {

struct CheckResult {
  std::string module;
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// One check per stated invariant of every module.
std::vector<CheckResult> run_selftest();

void print_selftest(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace zetakit
