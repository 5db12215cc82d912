#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "catenoid/family.hpp"
#include "catenoid/numerics.hpp"

namespace catenoid {

namespace detail {
class Model;
}

struct ProfilePoint {
  double s = 0.0;
  double radius = 0.0;
  double height = 0.0;
  double d_radius = 0.0;
  double d_height = 0.0;
  double dd_radius = 0.0;
  double dd_height = 0.0;
};

// Generating curve of a rotation surface, in the meridian half-plane with
// metric d(radius)^2 + phi(radius)^2 d(height)^2. Immutable; copies share
// the underlying closed-form evaluator.
class Profile {
 public:
  explicit Profile(std::shared_ptr<const detail::Model> model);

  const FamilySpec& spec() const;
  double T() const;  // half-length of the parameter domain, possibly +inf
  ParamKind param_kind() const;
  double neck() const;

  ProfilePoint at(double s) const;
  double radius(double s) const { return at(s).radius; }
  double height(double s) const { return at(s).height; }
  double d_radius(double s) const { return at(s).d_radius; }
  double d_height(double s) const { return at(s).d_height; }

  double metric_factor(double radius) const;    // phi
  double rotation_factor(double radius) const;  // psi: parallels have radius psi

  const std::shared_ptr<const detail::Model>& model() const { return model_; }

 private:
  std::shared_ptr<const detail::Model> model_;
};

Profile build_profile(const FamilySpec& spec);

// Homothety of a Euclidean catenoid. Throws UnsupportedFamily otherwise.
Profile scale_profile(const Profile& p, double k);

struct OdeSample {
  double s = 0.0;
  double radius = 0.0;
  double height = 0.0;
  double d_radius = 0.0;
  double d_height = 0.0;
};

// Integrates the profile ODE from the neck and samples it on the grid.
// Negative grid points are obtained by the reflection symmetry.
std::vector<OdeSample> ode_profile(const FamilySpec& spec, const std::vector<double>& grid,
                                   double tol = 1e-13);

// Largest deviation between ODE and closed-form profiles (radius and height).
double profile_cross_check(const FamilySpec& spec, const std::vector<double>& grid);

// Ambient coordinates of the point at parameter s and rotation angle theta:
// Cartesian for R^{n+1}, Poincare ball times line for H^n x R, upper half
// space for H^3.
std::vector<double> embed(const Profile& p, double s, double theta);

struct Heights {
  double V = 0.0;
  std::optional<double> X;
};

// Limit height of the upper half profile, and for H^3 minimal catenoids the
// x-height exp(V). Throws UnsupportedFamily when the height is infinite.
Heights heights(const FamilySpec& spec, const Tolerances& tol = {});

struct Curvatures {
  double k_profile = 0.0;   // geodesic curvature of the profile curve
  double k_parallel = 0.0;  // curvature along the parallels, multiplicity n-1
  int n = 2;
  double norm2() const { return k_profile * k_profile + (n - 1) * k_parallel * k_parallel; }
  double mean() const { return (k_profile + (n - 1) * k_parallel) / n; }
};

Curvatures principal_curvatures(const Profile& p, double s);

// Default sample grid on [0, S]: S = 5 for infinite domains, 0.95 T otherwise.
std::vector<double> standard_grid(const FamilySpec& spec, int count = 51);

}  // namespace catenoid
