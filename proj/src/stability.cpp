#include "catenoid/stability.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <sstream>

#include "catenoid/error.hpp"
#include "catenoid/jacobi.hpp"
#include "catenoid/profile.hpp"
#include "model.hpp"

namespace catenoid {

namespace {

constexpr double kRootTol = 1e-12;
constexpr double kArclengthCap = 150.0;  // cosh(2s) stays finite well past this

// Right end of the search range for sign changes in (0, T).
double search_end(const detail::Model& m) {
  const double T = m.T();
  return std::isinf(T) ? kArclengthCap : T * (1.0 - 1e-9);
}

// First positive zero of g on (0, end) with g(0+) < 0, scanning outward by doubling.
std::optional<double> first_crossing(const std::function<double(double)>& g, double end) {
  double prev = 0.0;
  double s = std::min(0.25, 0.5 * end);
  while (true) {
    if (g(s) > 0.0) return find_root(g, prev, s, kRootTol);
    if (s >= end) return std::nullopt;
    prev = s;
    s = std::min(2.0 * s, end);
  }
}

std::optional<double> zero_of_e(const detail::Model& m) {
  if (!(m.kappa() > 0.0)) return std::nullopt;
  return first_crossing([&m](double s) { return m.e(s).v; }, search_end(m));
}

}  // namespace

std::optional<double> variation_zero(const FamilySpec& spec) { return zero_of_e(*detail::make_model(spec)); }

std::optional<double> half_vertical_threshold(const FamilySpec& spec) {
  const auto m = detail::make_model(spec);
  const double k = m->kappa();
  if (!(k > 0.0) || std::isinf(k)) return std::nullopt;
  const auto z = zero_of_e(*m);
  if (!z) return std::nullopt;
  // y = e + kappa v is the Jacobi field that vanishes at the far end.
  return find_root([&](double s) { return m->e(s).v + k * m->v(s).v; }, 0.0, *z, kRootTol);
}

std::optional<double> conjugate_point(const FamilySpec& spec, double alpha) {
  const auto m = detail::make_model(spec);
  if (!(alpha > 0.0 && alpha < m->T())) throw Error(ErrorKind::OutOfDomain, "alpha must lie in (0, T)");
  const double va = m->v(alpha).v;
  const double ea = m->e(alpha).v;
  const double k = m->kappa();
  if (!std::isinf(k) && !(ea + k * va > 0.0)) return std::nullopt;
  return first_crossing([&](double s) { return va * m->e(s).v + ea * m->v(s).v; }, search_end(*m));
}

DomainSpec maximal_domain(const FamilySpec& spec, double alpha) {
  const auto beta = conjugate_point(spec, alpha);
  return {-alpha, beta ? *beta : build_profile(spec).T(), true};
}

double tangent_residual(const FamilySpec& spec, double alpha, double beta) {
  if (spec.family != Family::EuclidCatenoid) {
    throw Error(ErrorKind::UnsupportedFamily, "the tangent construction is specific to Euclidean catenoids");
  }
  const Profile p = build_profile(spec);
  const ProfilePoint qa = p.at(alpha);
  const ProfilePoint qb = p.at(beta);
  return alpha + beta - qa.radius / qa.d_radius - qb.radius / qb.d_radius;
}

double envelope_cone(int n) {
  const FamilySpec unit{Family::EuclidCatenoid, n, 1.0};
  const auto z = variation_zero(unit);
  if (!z) throw Error(ErrorKind::NoSignChange, "variation field has no zero");
  return *z / build_profile(unit).radius(*z);
}

double h3_tail(double a, const Tolerances& tol) {
  validate({Family::H3Minimal, 2, a});
  return detail::h3_tail_integral(a, tol.abs_tol, tol.rel_tol);
}

double h3_vertical_height(double a, const Tolerances& tol) {
  validate({Family::H3Minimal, 2, a});
  return detail::h3_height_integral(a, tol.abs_tol, tol.rel_tol);
}

double h3_a1() { return 0.5 * std::acosh(std::sqrt((11.0 + 8.0 * std::sqrt(2.0)) / 7.0)); }

double h3_critical_neck(double lo, double hi) {
  const Tolerances tight{1e-15, 1e-13, kRootTol};
  return find_root([&](double a) { return h3_tail(a, tight); }, lo, hi, kRootTol);
}

Intersection intersect_catenaries(double a1, double a2) {
  if (a1 == a2) throw Error(ErrorKind::IdenticalCurves, "the two catenaries coincide");
  if (a1 > a2) std::swap(a1, a2);
  const Tolerances tight{1e-15, 1e-13, kRootTol};
  Intersection out;
  if (!(h3_vertical_height(a2, tight) > h3_vertical_height(a1, tight))) return out;

  const Profile p1 = build_profile({Family::H3Minimal, 2, a1});
  const Profile p2 = build_profile({Family::H3Minimal, 2, a2});
  // Height of the upper half as a function of the distance y to the axis.
  auto lambda = [](const Profile& p, double y) {
    const double a = p.spec().a;
    const double ratio = std::cosh(2.0 * y) / std::cosh(2.0 * a);
    return p.height(ratio <= 1.0 ? 0.0 : 0.5 * std::acosh(ratio));
  };
  auto gap = [&](double y) { return lambda(p2, y) - lambda(p1, y); };
  double lo = a2;
  double step = 0.25;
  double hi = a2 + step;
  while (gap(hi) <= 0.0) {
    lo = hi;
    step *= 2.0;
    hi = a2 + step;
    if (step > kArclengthCap) throw Error(ErrorKind::NoSignChange, "intersection not found");
  }
  const double y = find_root(gap, lo, hi, kRootTol);
  out.count = 2;
  out.radius = y;
  out.height = lambda(p2, y);
  return out;
}

double vheight_consistency(double a, double delta) {
  const Tolerances tight{1e-15, 1e-13, kRootTol};
  const double fd = (h3_vertical_height(a + delta, tight) - h3_vertical_height(a - delta, tight)) / (2.0 * delta);
  return std::fabs(fd - std::sqrt(2.0) * h3_tail(a, tight));
}

double second_fundamental_norm(double a, double s) {
  return principal_curvatures(build_profile({Family::H3Minimal, 2, a}), s).norm2();
}

double sup_second_fundamental_norm(double a) {
  const Profile p = build_profile({Family::H3Minimal, 2, a});
  auto norm = [&p](double s) { return principal_curvatures(p, s).norm2(); };
  constexpr int kSamples = 200;
  constexpr double kRange = 10.0;
  int best = 0;
  double best_val = norm(0.0);
  for (int i = 1; i <= kSamples; ++i) {
    const double val = norm(kRange * i / kSamples);
    if (val > best_val) {
      best_val = val;
      best = i;
    }
  }
  const double lo = kRange * std::max(0, best - 1) / kSamples;
  const double hi = kRange * std::min(kSamples, best + 1) / kSamples;
  const auto r = boost::math::tools::brent_find_minima([&](double s) { return -norm(s); }, lo, hi, 40);
  return std::max(best_val, -r.second);
}

bool mori_condition(double a) { return sup_second_fundamental_norm(a) <= 9.0 / 4.0; }

double cd_functional(double a) {
  const Profile p = build_profile({Family::H3Minimal, 2, a});
  auto f = [&p](double s) {
    const double A2 = principal_curvatures(p, s).norm2();
    return A2 * (A2 - 6.0) * std::sinh(p.radius(s));
  };
  // Both halves of the catenoid and the full turn in theta.
  return 4.0 * M_PI * integrate(f, 0.0, kInf, 1e-12, 1e-11).value;
}

double cd_threshold(double lo, double hi) { return find_root(cd_functional, lo, hi, 1e-10); }

StabilityReport classify(const FamilySpec& spec, const Tolerances& tol) {
  const auto m = detail::make_model(spec);
  StabilityReport r;
  r.spec = spec;
  const double k = m->kappa();
  r.index = k > 0.0 ? 1 : 0;

  if (spec.family == Family::H2xR || spec.family == Family::HnxR || spec.family == Family::H3Minimal) {
    r.E_value = tail_integral(spec, tol).value;
  }
  r.z = zero_of_e(*m);
  r.ell = half_vertical_threshold(spec);
  r.lindelof = r.index == 1 && !r.ell;

  std::ostringstream note;
  if (r.index == 0) {
    note << "e keeps its sign on (0, T): the whole catenoid is weakly stable, so the half is not maximal";
  } else if (std::isinf(k)) {
    note << "e outgrows v at the end: every Jacobi field vanishing at -alpha has a positive zero";
  } else {
    note << "e/v tends to " << k << " at the end: stable domains extend below the neck";
  }
  r.notes.push_back(note.str());
  if (r.index == 1 && !r.z) r.notes.push_back("zero of e lies beyond the search range");

  if (spec.family == Family::H3Minimal) {
    const double a1 = h3_a1();
    r.certificates.push_back({"a >= a1", a1, spec.a >= a1,
                              "the integrand of E0 is non-positive, so the catenoid is stable"});
    const double sup = sup_second_fundamental_norm(spec.a);
    r.certificates.push_back({"sup |A|^2 <= 9/4", sup, sup <= 9.0 / 4.0, "Mori: sufficient for stability"});
    const double cd = cd_functional(spec.a);
    r.certificates.push_back({"int |A|^2 (|A|^2 - 6) > 0", cd, cd > 0.0,
                              "do Carmo-Dajczer: sufficient for instability"});
  }
  return r;
}

}  // namespace catenoid
