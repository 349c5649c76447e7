#pragma once

#include <string>
#include <vector>

namespace cf::verify {

// identity sweeps runnable from the command line; each returns how many
// comparisons ran and how many disagreed
struct Options {
  int k_max = 3;
  int size_max = 7;
};

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace cf::verify
