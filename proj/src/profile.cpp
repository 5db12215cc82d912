#include "catenoid/profile.hpp"

#include <algorithm>
#include <cmath>

#include "catenoid/error.hpp"
#include "model.hpp"

namespace catenoid {

using detail::Meridian;

Profile::Profile(std::shared_ptr<const detail::Model> model) : model_(std::move(model)) {}

const FamilySpec& Profile::spec() const { return model_->spec(); }
double Profile::T() const { return model_->T(); }
ParamKind Profile::param_kind() const { return model_->kind(); }
double Profile::neck() const { return at(0.0).radius; }

ProfilePoint Profile::at(double s) const {
  if (!(std::fabs(s) < T())) throw Error(ErrorKind::OutOfDomain, "parameter outside (-T, T)");
  Jet rho, h;
  model_->profile(s, rho, h);
  return {s, rho.v, h.v, rho.d1, h.d1, rho.d2, h.d2};
}

double Profile::metric_factor(double radius) const { return detail::phi(model_->meridian(), radius); }
double Profile::rotation_factor(double radius) const { return detail::psi(model_->meridian(), radius); }

Profile build_profile(const FamilySpec& spec) { return Profile(detail::make_model(spec)); }

Profile scale_profile(const Profile& p, double k) {
  if (p.spec().family != Family::EuclidCatenoid) {
    throw Error(ErrorKind::UnsupportedFamily, "only Euclidean catenoids are invariant under homotheties");
  }
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive");
  FamilySpec scaled = p.spec();
  scaled.a *= k;
  return build_profile(scaled);
}

std::vector<OdeSample> ode_profile(const FamilySpec& spec, const std::vector<double>& grid, double tol) {
  validate(spec);
  const auto model = detail::make_model(spec);
  const Meridian m = model->meridian();
  const int n = model->n();
  const double H = model->mean_curvature();
  const bool graph = model->kind() == ParamKind::Graph;

  std::vector<double> nodes;
  for (double s : grid) nodes.push_back(std::fabs(s));
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  Rhs rhs;
  State y0;
  if (graph) {
    // r'' = (n-1) (psi'/psi)(r) (1 + r'^2); the meridian factor is 1 here.
    rhs = [m, n](const State& y, State& dy, double) {
      dy[0] = y[1];
      dy[1] = (n - 1) * detail::dpsi(m, y[0]) / detail::psi(m, y[0]) * (1.0 + y[1] * y[1]);
    };
    y0 = {spec.a, 0.0};
  } else {
    // Unit speed with tangent angle theta against d/d(rho):
    // (psi^{n-1} phi sin theta)' = n H psi^{n-1} phi rho'.
    rhs = [m, n, H](const State& y, State& dy, double) {
      const double rho = y[0];
      const double th = y[2];
      const double ph = detail::phi(m, rho);
      const double ps = detail::psi(m, rho);
      const double w = std::pow(ps, n - 1) * ph;
      const double dw = (n - 1) * std::pow(ps, n - 2) * detail::dpsi(m, rho) * ph + std::pow(ps, n - 1) * detail::dphi(m, rho);
      dy[0] = std::cos(th);
      dy[1] = std::sin(th) / ph;
      dy[2] = (n * H * w - dw * std::sin(th)) / w;
    };
    y0 = {spec.a, 0.0, 0.5 * M_PI};
  }

  IvpTrajectory traj;
  if (!nodes.empty() && nodes.back() > 0.0) {
    IvpOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    opt.t_eval = nodes;
    traj = solve_ivp(rhs, 0.0, y0, nodes.back(), opt);
    if (traj.t.size() < nodes.size()) {
      throw Error(ErrorKind::OutOfDomain, "profile ODE left its domain before the last grid point");
    }
  } else {
    traj.t = {0.0};
    traj.y = {y0};
  }

  auto sample_at = [&](double s) {
    const std::size_t i = std::lower_bound(nodes.begin(), nodes.end(), std::fabs(s)) - nodes.begin();
    const State& y = traj.y[i];
    OdeSample out;
    out.s = s;
    if (graph) {
      out.radius = y[0];
      out.height = std::fabs(s);
      out.d_radius = y[1];
      out.d_height = 1.0;
    } else {
      out.radius = y[0];
      out.height = y[1];
      out.d_radius = std::cos(y[2]);
      out.d_height = std::sin(y[2]) / detail::phi(m, y[0]);
    }
    if (s < 0.0) {
      out.height = -out.height;
      out.d_radius = -out.d_radius;
    }
    return out;
  };
  std::vector<OdeSample> samples;
  samples.reserve(grid.size());
  for (double s : grid) samples.push_back(sample_at(s));
  return samples;
}

double profile_cross_check(const FamilySpec& spec, const std::vector<double>& grid) {
  const Profile p = build_profile(spec);
  const auto ode = ode_profile(spec, grid);
  double worst = 0.0;
  for (const auto& o : ode) {
    const ProfilePoint q = p.at(o.s);
    worst = std::max(worst, std::fabs(o.radius - q.radius) / std::max(1.0, std::fabs(q.radius)));
    worst = std::max(worst, std::fabs(o.height - q.height) / std::max(1.0, std::fabs(q.height)));
  }
  return worst;
}

std::vector<double> embed(const Profile& p, double s, double theta) {
  const ProfilePoint q = p.at(s);
  const FamilySpec& spec = p.spec();
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  switch (spec.family) {
    case Family::EuclidCatenoid: {
      std::vector<double> x(spec.n + 1, 0.0);
      x[0] = q.radius * c;
      x[1] = q.radius * sn;
      x[spec.n] = q.height;
      return x;
    }
    case Family::H2xR:
    case Family::HnxR: {
      // Poincare ball: a point at hyperbolic distance r sits at Euclidean radius tanh(r/2).
      const int n = surface_dimension(spec);
      std::vector<double> x(n + 1, 0.0);
      const double r = std::tanh(0.5 * q.radius);
      x[0] = r * c;
      x[1] = r * sn;
      x[n] = q.height;
      return x;
    }
    case Family::H3Minimal:
    case Family::H3Cousin: {
      // Fermi coordinates (distance u to the vertical geodesic, arclength v
      // along it) in the upper half space: (e^v tanh u, e^v / cosh u).
      const double ev = std::exp(q.height);
      const double horiz = ev * std::tanh(q.radius);
      return {horiz * c, horiz * sn, ev / std::cosh(q.radius)};
    }
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family");
}

Heights heights(const FamilySpec& spec, const Tolerances& tol) {
  validate(spec);
  Heights h;
  switch (spec.family) {
    case Family::EuclidCatenoid:
      if (spec.n == 2) throw Error(ErrorKind::UnsupportedFamily, "the catenoid in R^3 has infinite height");
      h.V = spec.a * detail::euclid_T(spec.n);
      return h;
    case Family::H2xR: h.V = detail::h2_height(spec.a); return h;
    case Family::HnxR: h.V = detail::hn_height(spec.n, spec.a); return h;
    case Family::H3Minimal:
      h.V = detail::h3_height_integral(spec.a, tol.abs_tol, tol.rel_tol);
      h.X = std::exp(h.V);
      return h;
    case Family::H3Cousin:
      throw Error(ErrorKind::UnsupportedFamily, "catenoid cousins have infinite height");
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family");
}

Curvatures principal_curvatures(const Profile& p, double s) {
  const ProfilePoint q = p.at(s);
  const Meridian m = p.model()->meridian();
  const double ph = detail::phi(m, q.radius);
  const double dph = detail::dphi(m, q.radius);
  const double speed2 = q.d_radius * q.d_radius + ph * ph * q.d_height * q.d_height;
  const double speed = std::sqrt(speed2);
  const double sin_t = ph * q.d_height / speed;
  const double d_phih = dph * q.d_radius * q.d_height + ph * q.dd_height;
  const double dtheta = (q.d_radius * d_phih - ph * q.d_height * q.dd_radius) / speed2;
  Curvatures k;
  k.n = surface_dimension(p.spec());
  k.k_profile = dtheta / speed + dph / ph * sin_t;
  k.k_parallel = detail::dpsi(m, q.radius) / detail::psi(m, q.radius) * sin_t;
  return k;
}

std::vector<double> standard_grid(const FamilySpec& spec, int count) {
  const Profile p = build_profile(spec);
  const double end = std::isinf(p.T()) ? 5.0 : 0.95 * p.T();
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) g[i] = end * i / (count - 1);
  return g;
}

}  // namespace catenoid
