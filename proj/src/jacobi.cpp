#include "catenoid/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "catenoid/error.hpp"
#include "catenoid/profile.hpp"
#include "model.hpp"

namespace catenoid {

JacobiPair::JacobiPair(std::shared_ptr<const detail::Model> model) : model_(std::move(model)) {}

const FamilySpec& JacobiPair::spec() const { return model_->spec(); }
double JacobiPair::T() const { return model_->T(); }
double JacobiPair::v(double s) const { return model_->v_scale() * model_->v(s).v; }
double JacobiPair::e(double s) const { return model_->e_sign() * model_->e(s).v; }
double JacobiPair::normalized_e(double s) const { return model_->e(s).v; }
Jet JacobiPair::v_jet(double s) const { return model_->v_scale() * model_->v(s); }
Jet JacobiPair::e_jet(double s) const { return model_->e_sign() * model_->e(s); }
double JacobiPair::weight(double s) const { return model_->weight(s).v; }
double JacobiPair::e_sign() const { return model_->e_sign(); }
double JacobiPair::v_scale() const { return model_->v_scale(); }
double JacobiPair::v_limit() const { return model_->v_scale() * model_->v_limit(); }

double JacobiPair::e_limit() const {
  const double k = model_->kappa();
  const double vl = model_->v_limit();
  if (std::isinf(vl)) return k > 0.0 ? kInf : -kInf;
  return k * vl;
}

JacobiPair jacobi_pair(const FamilySpec& spec) { return JacobiPair(detail::make_model(spec)); }

CombinedField::CombinedField(JacobiPair pair, double alpha)
    : pair_(std::move(pair)), alpha_(alpha), v_alpha_(pair_.v(alpha)), e_alpha_(pair_.e(alpha)) {}

double CombinedField::operator()(double s) const { return v_alpha_ * pair_.e(s) + e_alpha_ * pair_.v(s); }

CombinedField combined_field(const FamilySpec& spec, double alpha) {
  JacobiPair pair = jacobi_pair(spec);
  if (!(alpha > 0.0 && alpha < pair.T())) throw Error(ErrorKind::OutOfDomain, "alpha must lie in (0, T)");
  return CombinedField(std::move(pair), alpha);
}

TailIntegral tail_integral(const FamilySpec& spec, const Tolerances& tol) {
  validate(spec);
  TailIntegral t{spec, 0.0, true};
  switch (spec.family) {
    case Family::EuclidCatenoid:
      throw Error(ErrorKind::UnsupportedFamily, "Euclidean catenoids use T_n in place of a tail integral");
    case Family::H2xR: t.value = detail::h2_tail(spec.a); break;
    case Family::HnxR: t.value = detail::hn_tail(spec.n, spec.a); break;
    case Family::H3Minimal: t.value = detail::h3_tail_integral(spec.a, tol.abs_tol, tol.rel_tol); break;
    case Family::H3Cousin:
      try {
        t.value = detail::cousin_tail_probe(spec.a);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Divergent) throw;
        t.value = kInf;
        t.convergent = false;
      }
      break;
  }
  return t;
}

WronskianTrace wronskian_deviation(const FamilySpec& spec, const std::vector<double>& grid) {
  const JacobiPair pair = jacobi_pair(spec);
  WronskianTrace out;
  bool first = true;
  for (double s : grid) {
    if (!(std::fabs(s) < pair.T())) continue;
    const Jet v = pair.v_jet(s);
    const Jet e = pair.e_jet(s);
    const double w = pair.weight(s) * (v.v * e.d1 - e.v * v.d1);
    if (first) {
      out.reference = w;
      first = false;
      continue;
    }
    out.max_rel_deviation = std::max(out.max_rel_deviation, std::fabs(w - out.reference) / std::fabs(out.reference));
  }
  return out;
}

double variation_fd_check(const FamilySpec& spec, const std::vector<double>& grid, double delta_a) {
  if (!(delta_a > 0.0 && delta_a < spec.a)) throw Error(ErrorKind::InvalidArgument, "delta_a must lie in (0, a)");
  const Profile base = build_profile(spec);
  FamilySpec up = spec;
  FamilySpec down = spec;
  up.a += delta_a;
  down.a -= delta_a;
  const Profile p_up = build_profile(up);
  const Profile p_down = build_profile(down);
  const JacobiPair pair(base.model());
  double worst = 0.0;
  for (double s : grid) {
    const ProfilePoint q = base.at(s);
    const ProfilePoint u = p_up.at(s);
    const ProfilePoint d = p_down.at(s);
    const double rho_a = (u.radius - d.radius) / (2.0 * delta_a);
    const double h_a = (u.height - d.height) / (2.0 * delta_a);
    const double ph = base.metric_factor(q.radius);
    const double speed = std::hypot(q.d_radius, ph * q.d_height);
    const double fd = pair.e_sign() * ph * (h_a * q.d_radius - rho_a * q.d_height) / speed;
    const double e = pair.e(s);
    worst = std::max(worst, std::fabs(fd - e) / std::max(1.0, std::fabs(e)));
  }
  return worst;
}

}  // namespace catenoid
