#pragma once

#include <memory>
#include <vector>

#include "catenoid/family.hpp"
#include "catenoid/jet.hpp"
#include "catenoid/numerics.hpp"

namespace catenoid {

namespace detail {
class Model;
}

// Vertical field v (normal component of the axial Killing field) and
// variation field e (normal component of d/da of the family).
//
// v and e follow the sign and scale printed for each family. normalized_e
// is rescaled so that e(0) = -1 in every family; zeros are unaffected.
class JacobiPair {
 public:
  explicit JacobiPair(std::shared_ptr<const detail::Model> model);

  const FamilySpec& spec() const;
  double T() const;

  double v(double s) const;
  double e(double s) const;
  double normalized_e(double s) const;

  // Value, first and second derivative in the native parameter.
  Jet v_jet(double s) const;
  Jet e_jet(double s) const;

  // Self-adjointing weight of the radial Jacobi operator.
  double weight(double s) const;

  double e_sign() const;    // printed e = e_sign * normalized e
  double v_scale() const;   // printed v = v_scale * unit-normal convention
  double v_limit() const;   // v at T-, +inf if unbounded
  double e_limit() const;   // normalized e at T-, +-inf when it diverges

  static constexpr bool v_is_odd = true;
  static constexpr bool e_is_even = true;

  const std::shared_ptr<const detail::Model>& model() const { return model_; }

 private:
  std::shared_ptr<const detail::Model> model_;
};

JacobiPair jacobi_pair(const FamilySpec& spec);

// w(s) = v(alpha) e(s) + e(alpha) v(s): the radial Jacobi field vanishing at -alpha.
class CombinedField {
 public:
  CombinedField(JacobiPair pair, double alpha);
  double alpha() const { return alpha_; }
  double operator()(double s) const;

 private:
  JacobiPair pair_;
  double alpha_;
  double v_alpha_;
  double e_alpha_;
};

// Throws OutOfDomain unless 0 < alpha < T.
CombinedField combined_field(const FamilySpec& spec, double alpha);

struct TailIntegral {
  FamilySpec spec;
  double value = 0.0;
  bool convergent = true;
};

// E(a) for H^2 x R, H^n x R and H^3 minimal catenoids; for catenoid cousins
// the corresponding integral diverges and convergent is false. Throws
// UnsupportedFamily for Euclidean catenoids.
TailIntegral tail_integral(const FamilySpec& spec, const Tolerances& tol = {});

struct WronskianTrace {
  double reference = 0.0;  // W at the first grid point
  double max_rel_deviation = 0.0;
};

// W(s) = weight(s) (v e' - e v') on the grid, printed conventions.
WronskianTrace wronskian_deviation(const FamilySpec& spec, const std::vector<double>& grid);

// Normal component of the central finite difference in a of the profile,
// compared with e. Returns max |fd - e| / max(1, |e|).
double variation_fd_check(const FamilySpec& spec, const std::vector<double>& grid, double delta_a);

}  // namespace catenoid
