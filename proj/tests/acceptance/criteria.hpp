#pragma once

#include <string>
#include <vector>

namespace catenoid::acceptance {

struct Options {
  double tol_scale = 1.0;  // multiplies every numerical threshold
  std::string filter;      // substring of the criterion name or tags; empty runs all
  int threads = 0;         // 0 picks the hardware concurrency
};

struct Outcome {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

std::vector<Outcome> run_acceptance(const Options& options = {});

// "PASS  3  name  detail" style line.
std::string format_outcome(const Outcome& o);

}  // namespace catenoid::acceptance
