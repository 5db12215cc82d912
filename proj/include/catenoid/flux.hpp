#pragma once

#include <utility>
#include <vector>

#include "catenoid/family.hpp"

namespace catenoid {

struct FluxTrace {
  std::vector<std::pair<double, double>> samples;  // (s, first integral)
  double constant_estimate = 0.0;
  double max_rel_deviation = 0.0;
};

// First integral of the profile ODE evaluated along the ODE solution.
// Minimal families: psi^{n-1} phi^2 h' / |gamma'|. Catenoid cousins:
// cosh(2 rho)/2 - sinh(rho) cosh(rho) sin(theta), which equals exp(-2a)/2.
FluxTrace flux_constancy(const FamilySpec& spec, const std::vector<double>& grid);

// Axial Killing flux through the two boundary spheres of [lo, hi] (outward
// conormal) against n H times the integral of <K, N> over the domain.
struct FluxBalance {
  double boundary = 0.0;
  double interior = 0.0;
  double residual = 0.0;  // |boundary - interior|
};

FluxBalance boundary_flux_balance(const FamilySpec& spec, double lo, double hi);

// Volume of the unit (n-1)-sphere.
double sphere_volume(int n);

}  // namespace catenoid
