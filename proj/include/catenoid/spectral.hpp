#pragma once

#include <optional>
#include <vector>

#include "catenoid/family.hpp"

namespace catenoid {

// Radial Jacobi quadratic form  q(f) = int w (f'^2 - Q f^2)  against the
// mass  int w f^2,  Dirichlet at both ends, on a uniform grid of N points
// (endpoints included).
struct SLProblem {
  FamilySpec spec;
  double lo = 0.0;
  double hi = 0.0;
  int N = 0;
  std::vector<double> s;           // all N nodes
  std::vector<double> weight;      // at nodes
  std::vector<double> weight_mid;  // at the N-1 cell midpoints
  std::vector<double> potential;   // Q at nodes
  std::optional<double> truncation;  // S_max when an end was infinite
  double recovery_mismatch = 0.0;    // max disagreement of the two potential recoveries
};

struct SpectralResult {
  double lambda1 = 0.0;
  std::vector<double> s;
  std::vector<double> eigenvector;  // includes the zero boundary values
  int N = 0;
  std::optional<double> truncation;
};

// Cut-off used for an infinite end of the parameter domain.
double truncation_length(const FamilySpec& spec);

// Throws RecoveryMismatch, OutOfDomain, InvalidArgument.
SLProblem assemble(const FamilySpec& spec, double lo, double hi, int N = 4001);

SpectralResult lambda1(const SLProblem& problem);

// Number of negative Dirichlet eigenvalues.
int index_on_interval(const SLProblem& problem);

// |lambda1(S_max) - lambda1(2 S_max)| for intervals with an infinite end.
double truncation_sensitivity(const FamilySpec& spec, double lo, double hi, int N = 4001);

}  // namespace catenoid
