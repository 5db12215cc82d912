#include "catenoid/flux.hpp"

#include <algorithm>
#include <cmath>

#include "catenoid/error.hpp"
#include "catenoid/numerics.hpp"
#include "catenoid/profile.hpp"
#include "model.hpp"

namespace catenoid {

double sphere_volume(int n) { return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n); }

namespace {

// psi^{n-1} phi^2 h' / |gamma'|: the axial Killing field paired with the
// unit conormal, per unit volume of the boundary sphere's angular factor.
double killing_conormal(detail::Meridian m, int n, double rho, double d_rho, double d_h) {
  const double ph = detail::phi(m, rho);
  const double speed = std::hypot(d_rho, ph * d_h);
  return std::pow(detail::psi(m, rho), n - 1) * ph * ph * d_h / speed;
}

}  // namespace

FluxTrace flux_constancy(const FamilySpec& spec, const std::vector<double>& grid) {
  const auto model = detail::make_model(spec);
  const auto m = model->meridian();
  const int n = model->n();
  const double H = model->mean_curvature();
  FluxTrace trace;
  if (grid.empty()) return trace;
  const auto samples = ode_profile(spec, grid);
  for (const auto& o : samples) {
    double value = killing_conormal(m, n, o.radius, o.d_radius, o.d_height);
    if (H != 0.0) {
      // Only the mean-curvature-one cousins in H^3 carry a volume term.
      value = 0.5 * std::cosh(2.0 * o.radius) - value;
    }
    trace.samples.emplace_back(o.s, value);
  }
  const double ref = trace.samples.front().second;
  double sum = 0.0;
  for (const auto& [s, value] : trace.samples) {
    sum += value;
    trace.max_rel_deviation = std::max(trace.max_rel_deviation, std::fabs(value - ref) / std::fabs(ref));
  }
  trace.constant_estimate = sum / trace.samples.size();
  return trace;
}

FluxBalance boundary_flux_balance(const FamilySpec& spec, double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "domain needs lo < hi");
  const Profile p = build_profile(spec);
  if (!(std::fabs(lo) < p.T() && std::fabs(hi) < p.T())) {
    throw Error(ErrorKind::OutOfDomain, "flux domain must be compact inside (-T, T)");
  }
  const auto m = p.model()->meridian();
  const int n = p.model()->n();
  const double H = p.model()->mean_curvature();
  const double vol = sphere_volume(n);

  auto flux = [&](double s) {
    const ProfilePoint q = p.at(s);
    return vol * killing_conormal(m, n, q.radius, q.d_radius, q.d_height);
  };
  FluxBalance b;
  // Outward conormal is +tangent at hi and -tangent at lo.
  b.boundary = flux(hi) - flux(lo);
  if (H != 0.0) {
    // <K, N> dmu = phi rho' psi^{n-1} ds times the sphere volume.
    auto density = [&](double s) {
      const ProfilePoint q = p.at(s);
      return detail::phi(m, q.radius) * q.d_radius * std::pow(detail::psi(m, q.radius), n - 1);
    };
    b.interior = n * H * vol * integrate(density, lo, hi, 1e-13, 1e-12).value;
  }
  b.residual = std::fabs(b.boundary - b.interior);
  return b;
}

}  // namespace catenoid
