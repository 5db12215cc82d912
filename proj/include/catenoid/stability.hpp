#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catenoid/family.hpp"
#include "catenoid/numerics.hpp"

namespace catenoid {

struct Certificate {
  std::string name;
  double value = 0.0;
  bool holds = false;
  std::string meaning;
};

struct StabilityReport {
  FamilySpec spec;
  int index = 1;
  std::optional<double> E_value;
  std::optional<double> z;    // half-width of the symmetric maximal stable domain
  std::optional<double> ell;  // threshold for the half-vertical domain
  bool lindelof = false;
  std::vector<std::string> notes;
  std::vector<Certificate> certificates;
};

struct DomainSpec {
  double lower = 0.0;
  double upper = 0.0;
  bool rotationally_symmetric = true;
};

std::optional<double> variation_zero(const FamilySpec& spec);
std::optional<double> half_vertical_threshold(const FamilySpec& spec);

// Positive zero of the Jacobi field vanishing at -alpha. Absent when the
// domain [-alpha, T) is already stable. Throws OutOfDomain.
std::optional<double> conjugate_point(const FamilySpec& spec, double alpha);

// Maximal stable domain [-alpha, beta(alpha)] (upper = T when beta is absent).
DomainSpec maximal_domain(const FamilySpec& spec, double alpha);

// alpha + beta - c(alpha)/c'(alpha) - c(beta)/c'(beta), Euclidean only.
double tangent_residual(const FamilySpec& spec, double alpha, double beta);

// Height over radius of the cone enveloping the Euclidean catenoids in R^{n+1}.
double envelope_cone(int n);

StabilityReport classify(const FamilySpec& spec, const Tolerances& tol = {});

// H^3 minimal catenoids.
double h3_tail(double a, const Tolerances& tol = {});           // E_0(a)
double h3_vertical_height(double a, const Tolerances& tol = {});  // V_0(a)
double h3_a1();  // cosh^2(2 a_1) = (11 + 8 sqrt 2) / 7
double h3_critical_neck(double lo = 0.3, double hi = 0.7);  // zero of E_0

struct Intersection {
  int count = 0;
  std::optional<double> radius;  // distance to the axis of the intersection circles
  std::optional<double> height;  // |height| of the two symmetric circles
};

// Meridian intersections of two H^3 minimal catenaries. Throws IdenticalCurves for a1 == a2.
Intersection intersect_catenaries(double a1, double a2);

// |(V_0(a+d) - V_0(a-d)) / 2d - sqrt(2) E_0(a)|
double vheight_consistency(double a, double delta);

double second_fundamental_norm(double a, double s);
double sup_second_fundamental_norm(double a);
bool mori_condition(double a);  // sup |A|^2 <= 9/4

// Integral of |A|^2 (|A|^2 - 6) over the whole catenoid.
double cd_functional(double a);
double cd_threshold(double lo = 0.45, double hi = 0.49);

}  // namespace catenoid
