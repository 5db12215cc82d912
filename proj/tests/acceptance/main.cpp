#include <cstdlib>
#include <iostream>
#include <string>

#include "criteria.hpp"

int main(int argc, char** argv) {
  catenoid::acceptance::Options opt;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--tol-scale") opt.tol_scale = std::atof(argv[i + 1]);
    if (key == "--filter") opt.filter = argv[i + 1];
  }
  const auto results = catenoid::acceptance::run_acceptance(opt);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << catenoid::acceptance::format_outcome(r) << "\n";
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 && !results.empty() ? 0 : 1;
}
