#pragma once

#include <cmath>
#include <memory>

#include "catenoid/family.hpp"
#include "catenoid/jet.hpp"

namespace catenoid::detail {

// Tolerances for quadratures that sit inside closed-form evaluations.
inline constexpr double kInnerAbs = 1e-15;
inline constexpr double kInnerRel = 1e-13;

// Meridian metric d rho^2 + phi(rho)^2 dh^2; parallels have radius psi(rho).
enum class Meridian { Flat, HyperbolicSlice, H3 };

double phi(Meridian m, double rho);
double dphi(Meridian m, double rho);
double psi(Meridian m, double rho);
double dpsi(Meridian m, double rho);

// One family at one neck parameter. Jets are derivatives in the native
// parameter. The *_pos hooks are called with s >= 0; the public wrappers
// apply the reflection symmetry (radius, e, weight even; height, v odd).
//
// Conventions: v is the normal component of the axial Killing field and e
// the normal component of d/da of the profile, both for the unit normal
// (-phi h', rho' / phi) / |gamma'|. This makes e(0) = -1 everywhere.
class Model {
 public:
  explicit Model(const FamilySpec& spec) : spec_(spec) {}
  virtual ~Model() = default;

  const FamilySpec& spec() const { return spec_; }
  int n() const { return surface_dimension(spec_); }
  virtual Meridian meridian() const = 0;
  virtual double mean_curvature() const { return 0.0; }
  virtual ParamKind kind() const = 0;
  virtual double T() const = 0;

  virtual double v_limit() const = 0;
  // lim e / v at the end of the domain; +inf when e outgrows v.
  virtual double kappa() const = 0;
  // Printed e = e_sign * e; printed v = v_scale * v.
  virtual double e_sign() const = 0;
  virtual double v_scale() const { return 1.0; }

  void profile(double s, Jet& rho, Jet& h) const;
  Jet v(double s) const;
  Jet e(double s) const;
  Jet weight(double s) const;

 protected:
  virtual void profile_pos(double s, Jet& rho, Jet& h) const = 0;
  virtual Jet v_pos(double s) const = 0;
  virtual Jet e_pos(double s) const = 0;
  virtual Jet weight_pos(double s) const = 0;

 private:
  FamilySpec spec_;
};

using ModelPtr = std::shared_ptr<const Model>;

ModelPtr make_model(const FamilySpec& spec);

// Family-specific quantities that have no generic meaning.
double euclid_T(int n);                          // T_n, infinite for n = 2
double hn_tail(int n, double a);                 // E(a) for H^n x R
double h2_tail(double a);                        // E(a) for H^2 x R
double h2_height(double a);                      // V(a) for H^2 x R
double hn_height(int n, double a);               // T(a) for H^n x R
double h3_tail_integral(double a, double abs_tol, double rel_tol);
double h3_height_integral(double a, double abs_tol, double rel_tol);
double cousin_tail_probe(double a);              // throws Divergent

}  // namespace catenoid::detail
