#include "catenoid/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catenoid/error.hpp"
#include "catenoid/profile.hpp"
#include "model.hpp"

namespace catenoid {

namespace {

constexpr double kMismatchTol = 1e-6;
constexpr double kEigTol = 1e-10;

double find_cut(const std::function<double(double)>& below, double cap) {
  // Smallest s in (0, cap] where below(s) holds, assuming monotonicity.
  double hi = 0.5;
  while (!below(hi)) {
    hi *= 2.0;
    if (hi >= cap) return cap;
  }
  double lo = 0.0;
  for (int i = 0; i < 60 && hi - lo > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    (below(mid) ? hi : lo) = mid;
  }
  return hi;
}

double truncation_for(const detail::Model& m) {
  const double T = m.T();
  if (!std::isinf(T)) return T * (1.0 - 1e-6);
  constexpr double kCap = 40.0;
  if (m.spec().family == Family::H3Minimal) {
    const Profile p(detail::make_model(m.spec()));
    return find_cut([&p](double s) { return principal_curvatures(p, s).norm2() <= 1e-8; }, kCap);
  }
  const double vl = m.v_limit();
  return find_cut([&m, vl](double s) { return std::fabs(m.v(s).v - vl) <= 1e-8; }, kCap);
}

struct Tridiagonal {
  std::vector<double> d;    // diagonal
  std::vector<double> off;  // off-diagonal, size d.size() - 1
};

Tridiagonal symmetric_form(const SLProblem& p) {
  const int m = p.N - 2;
  const double h = (p.hi - p.lo) / (p.N - 1);
  Tridiagonal t;
  t.d.resize(m);
  t.off.resize(std::max(0, m - 1));
  for (int k = 0; k < m; ++k) {
    const int i = k + 1;
    const double mass = h * p.weight[i];
    const double stiff = (p.weight_mid[i - 1] + p.weight_mid[i]) / h - h * p.weight[i] * p.potential[i];
    t.d[k] = stiff / mass;
    if (k + 1 < m) {
      const double mass_next = h * p.weight[i + 1];
      t.off[k] = -p.weight_mid[i] / h / std::sqrt(mass * mass_next);
    }
  }
  return t;
}

// Number of eigenvalues strictly below x.
int sturm_count(const Tridiagonal& t, double x) {
  int count = 0;
  double q = 1.0;
  const double tiny = 1e-300;
  for (std::size_t k = 0; k < t.d.size(); ++k) {
    const double e2 = k == 0 ? 0.0 : t.off[k - 1] * t.off[k - 1];
    q = t.d[k] - x - (k == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

double smallest_eigenvalue(const Tridiagonal& t) {
  double lo = kInf;
  double hi = -kInf;
  for (std::size_t k = 0; k < t.d.size(); ++k) {
    double r = 0.0;
    if (k > 0) r += std::fabs(t.off[k - 1]);
    if (k + 1 < t.d.size()) r += std::fabs(t.off[k]);
    lo = std::min(lo, t.d[k] - r);
    hi = std::max(hi, t.d[k] + r);
  }
  while (hi - lo > kEigTol * std::max(1.0, std::min(std::fabs(lo), std::fabs(hi)))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (sturm_count(t, mid) >= 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> inverse_iteration(const Tridiagonal& t, double shift) {
  const std::size_t m = t.d.size();
  std::vector<double> y(m, 1.0), c(m), z(m);
  for (int it = 0; it < 4; ++it) {
    // Thomas algorithm on (A - shift I) z = y; positive definite for shift below lambda1.
    double denom = t.d[0] - shift;
    c[0] = m > 1 ? t.off[0] / denom : 0.0;
    z[0] = y[0] / denom;
    for (std::size_t k = 1; k < m; ++k) {
      denom = t.d[k] - shift - t.off[k - 1] * c[k - 1];
      c[k] = k + 1 < m ? t.off[k] / denom : 0.0;
      z[k] = (y[k] - t.off[k - 1] * z[k - 1]) / denom;
    }
    for (std::size_t k = m - 1; k-- > 0;) z[k] -= c[k] * z[k + 1];
    double norm = 0.0;
    for (double v : z) norm += v * v;
    norm = std::sqrt(norm);
    for (std::size_t k = 0; k < m; ++k) y[k] = z[k] / norm;
  }
  return y;
}

SLProblem assemble_on(const FamilySpec& spec, const detail::Model& model, double lo, double hi, int N,
                      std::optional<double> cut) {
  SLProblem p;
  p.spec = spec;
  p.lo = lo;
  p.hi = hi;
  p.N = N;
  p.truncation = cut;
  const double h = (hi - lo) / (N - 1);
  p.s.resize(N);
  p.weight.resize(N);
  p.weight_mid.resize(N - 1);
  p.potential.resize(N);
  for (int i = 0; i < N; ++i) p.s[i] = (i == N - 1) ? hi : lo + i * h;

  const bool printed = spec.family == Family::EuclidCatenoid && spec.n == 2;
  const double a = spec.a;
  const double scale = spec.family == Family::EuclidCatenoid ? a : 1.0;
  const double win_lo = 0.2 * scale;
  const double win_hi = 0.5 * scale;

  for (int i = 0; i < N - 1; ++i) p.weight_mid[i] = model.weight(lo + (i + 0.5) * h).v;
  for (int i = 0; i < N; ++i) {
    const double s = p.s[i];
    if (printed) {
      // Jacobi operator of the catenoid in R^3 in the conformal parameter.
      const double sech = 1.0 / std::cosh(s / a);
      p.weight[i] = a;
      p.potential[i] = 2.0 * sech * sech / (a * a);
      continue;
    }
    const Jet w = model.weight(s);
    p.weight[i] = w.v;
    const bool interior = i > 0 && i < N - 1;
    if (!interior) {
      p.potential[i] = 0.0;  // Dirichlet nodes never enter the form
      continue;
    }
    const Jet v = model.v(s);
    const Jet e = model.e(s);
    auto recover = [&w](const Jet& u) { return -(u.d2 + w.d1 / w.v * u.d1) / u.v; };
    const bool use_v = std::fabs(v.v) >= std::fabs(e.v);
    p.potential[i] = recover(use_v ? v : e);
    const double as = std::fabs(s);
    if (as >= win_lo && as <= win_hi && std::min(std::fabs(v.v), std::fabs(e.v)) > 1e-3) {
      const double qv = recover(v);
      const double qe = recover(e);
      const double mismatch = std::fabs(qv - qe) / std::max(1.0, std::fabs(p.potential[i]));
      p.recovery_mismatch = std::max(p.recovery_mismatch, mismatch);
    }
  }
  if (p.recovery_mismatch > kMismatchTol) {
    std::ostringstream msg;
    msg << "potentials recovered from v and e differ by " << p.recovery_mismatch << " for " << describe(spec);
    throw Error(ErrorKind::RecoveryMismatch, msg.str());
  }
  return p;
}

SLProblem assemble_with_cut(const FamilySpec& spec, double lo, double hi, int N, double cut_factor) {
  if (N < 3) throw Error(ErrorKind::InvalidArgument, "grid needs at least 3 points");
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval needs lo < hi");
  const auto model = detail::make_model(spec);
  const double T = model->T();
  std::optional<double> cut;
  if (std::isinf(lo) || std::isinf(hi)) {
    cut = cut_factor * truncation_for(*model);
    if (std::isinf(lo)) lo = -*cut;
    if (std::isinf(hi)) hi = *cut;
    if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "interval empty after truncation");
  }
  if (!(lo > -T && hi < T)) throw Error(ErrorKind::OutOfDomain, "interval must lie inside (-T, T)");
  return assemble_on(spec, *model, lo, hi, N, cut);
}

}  // namespace

double truncation_length(const FamilySpec& spec) { return truncation_for(*detail::make_model(spec)); }

SLProblem assemble(const FamilySpec& spec, double lo, double hi, int N) {
  return assemble_with_cut(spec, lo, hi, N, 1.0);
}

SpectralResult lambda1(const SLProblem& problem) {
  const Tridiagonal t = symmetric_form(problem);
  SpectralResult r;
  r.N = problem.N;
  r.truncation = problem.truncation;
  r.lambda1 = smallest_eigenvalue(t);
  const double shift = r.lambda1 - 1e-8 * std::max(1.0, std::fabs(r.lambda1));
  const std::vector<double> y = inverse_iteration(t, shift);
  const double h = (problem.hi - problem.lo) / (problem.N - 1);
  r.s = problem.s;
  r.eigenvector.assign(problem.N, 0.0);
  double peak = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double f = y[k] / std::sqrt(h * problem.weight[k + 1]);
    r.eigenvector[k + 1] = f;
    if (std::fabs(f) > std::fabs(peak)) peak = f;
  }
  for (double& f : r.eigenvector) f /= peak;
  return r;
}

int index_on_interval(const SLProblem& problem) { return sturm_count(symmetric_form(problem), 0.0); }

double truncation_sensitivity(const FamilySpec& spec, double lo, double hi, int N) {
  if (!std::isinf(lo) && !std::isinf(hi)) return 0.0;
  const double base = lambda1(assemble_with_cut(spec, lo, hi, N, 1.0)).lambda1;
  const double doubled = lambda1(assemble_with_cut(spec, lo, hi, 2 * N - 1, 2.0)).lambda1;
  return std::fabs(base - doubled);
}

}  // namespace catenoid
