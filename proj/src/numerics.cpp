#include "catenoid/numerics.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <queue>
#include <sstream>

namespace catenoid {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double value = 0.0;
  double error = 0.0;
  bool operator<(const Segment& other) const { return error < other.error; }
};

// One Gauss-Kronrod 10/21 panel. The error estimate follows the usual
// QUADPACK scaling so that smooth panels are not over-refined.
Segment gk21(const std::function<double(double)>& g, double lo, double hi, long& evals) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 21>;
  using G = boost::math::quadrature::gauss<double, 10>;
  const auto& xk = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();

  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = g(c);
  double kron = fc * wk[0];
  double gauss = 0.0;
  double resabs = std::fabs(kron);
  std::array<double, 21> fv{};
  fv[0] = fc;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double dx = h * xk[i];
    const double f1 = g(c - dx);
    const double f2 = g(c + dx);
    fv[2 * i - 1] = f1;
    fv[2 * i] = f2;
    kron += wk[i] * (f1 + f2);
    resabs += wk[i] * (std::fabs(f1) + std::fabs(f2));
    if (i % 2 == 1) gauss += wg[i / 2] * (f1 + f2);
  }
  evals += 21;
  const double mean = 0.5 * kron;
  double resasc = wk[0] * std::fabs(fc - mean);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    resasc += wk[i] * (std::fabs(fv[2 * i - 1] - mean) + std::fabs(fv[2 * i] - mean));
  }
  kron *= h;
  gauss *= h;
  resabs *= std::fabs(h);
  resasc *= std::fabs(h);

  double err = std::fabs(kron - gauss);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  err = std::max(err, 2.0 * kEps * resabs);
  if (!std::isfinite(kron) || !std::isfinite(err)) {
    std::ostringstream msg;
    msg << "non-finite integrand on [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::TolExceeded, msg.str());
  }
  return {lo, hi, kron, err};
}

Quadrature adaptive(const std::function<double(double)>& g, double lo, double hi, double abs_tol,
                    double rel_tol) {
  constexpr int kMaxSegments = 4000;
  Quadrature q;
  std::priority_queue<Segment> heap;
  Segment first = gk21(g, lo, hi, q.evaluations);
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int segments = 1;
  while (error > std::max(abs_tol, rel_tol * std::fabs(value))) {
    if (segments >= kMaxSegments) {
      std::ostringstream msg;
      msg << "quadrature budget exhausted on [" << lo << ", " << hi << "], error estimate " << error;
      throw Error(ErrorKind::TolExceeded, msg.str());
    }
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw Error(ErrorKind::TolExceeded, "quadrature segment cannot be subdivided further");
    }
    Segment left = gk21(g, worst.lo, mid, q.evaluations);
    Segment right = gk21(g, mid, worst.hi, q.evaluations);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
  }
  // Re-sum from the leaves so the result does not depend on update order.
  value = 0.0;
  error = 0.0;
  std::vector<Segment> leaves;
  while (!heap.empty()) {
    leaves.push_back(heap.top());
    heap.pop();
  }
  std::sort(leaves.begin(), leaves.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
  for (const auto& s : leaves) {
    value += s.value;
    error += s.error;
  }
  q.value = value;
  q.abs_error_estimate = error;
  return q;
}

void accumulate(Quadrature& total, const Quadrature& part) {
  total.value += part.value;
  total.abs_error_estimate += part.abs_error_estimate;
  total.evaluations += part.evaluations;
}

Quadrature integrate_finite(const Integrand& in, double lo, double hi, double abs_tol, double rel_tol) {
  if (in.singular_lo && in.singular_hi) {
    const double mid = 0.5 * (lo + hi);
    Integrand left = in;
    left.singular_hi = false;
    left.f_from_hi = nullptr;
    Integrand right = in;
    right.singular_lo = false;
    right.f_from_lo = nullptr;
    if (in.f_from_hi) right.f_from_hi = in.f_from_hi;
    Quadrature q = integrate_finite(left, lo, mid, 0.5 * abs_tol, rel_tol);
    accumulate(q, integrate_finite(right, mid, hi, 0.5 * abs_tol, rel_tol));
    return q;
  }
  if (in.singular_lo) {
    const auto& f = in.f;
    const auto& near = in.f_from_lo;
    auto g = [&](double u) {
      const double d = u * u;
      return 2.0 * u * (near ? near(d) : f(lo + d));
    };
    return adaptive(g, 0.0, std::sqrt(hi - lo), abs_tol, rel_tol);
  }
  if (in.singular_hi) {
    const auto& f = in.f;
    const auto& near = in.f_from_hi;
    auto g = [&](double u) {
      const double d = u * u;
      return 2.0 * u * (near ? near(d) : f(hi - d));
    };
    return adaptive(g, 0.0, std::sqrt(hi - lo), abs_tol, rel_tol);
  }
  return adaptive(in.f, lo, hi, abs_tol, rel_tol);
}

// [lo, inf): one finite panel, then doubling panels. Fast decay ends the
// loop directly; algebraic decay hands the remainder to u = X / w; panels
// that stop shrinking mean the integral diverges.
Quadrature integrate_to_infinity(const Integrand& in, double lo, double abs_tol, double rel_tol) {
  constexpr int kDivergenceWindow = 8;
  constexpr int kMaxDoublings = 64;
  double width = std::max(1.0, std::fabs(lo));
  double x = lo + width;
  Integrand head = in;
  head.singular_hi = false;
  head.f_from_hi = nullptr;
  Quadrature total = integrate_finite(head, lo, x, 0.25 * abs_tol, rel_tol);

  const auto& f = in.f;
  double prev = std::fabs(total.value);
  double ratio = 1.0;
  for (int k = 1; k <= kMaxDoublings; ++k) {
    Quadrature piece = adaptive(f, x, x + width, 0.25 * abs_tol, rel_tol);
    accumulate(total, piece);
    const double mag = std::fabs(piece.value);
    ratio = prev > 0.0 ? mag / prev : (mag == 0.0 ? 0.0 : 1.0);
    prev = mag;
    x += width;
    width *= 2.0;
    const double target = std::max(abs_tol, rel_tol * std::fabs(total.value));
    if (k >= 2 && ratio < 0.5 && mag <= 0.1 * target) {
      total.abs_error_estimate += mag * ratio / (1.0 - ratio);
      return total;
    }
    if (k >= kDivergenceWindow) {
      if (ratio > 0.9) {
        std::ostringstream msg;
        msg << "integral on [" << lo << ", inf) does not converge: doubling ratio " << ratio
            << " after " << k << " doublings";
        throw Error(ErrorKind::Divergent, msg.str());
      }
      const double X = x;
      auto mapped = [&f, X](double w) {
        if (w <= 0.0) return 0.0;
        return f(X / w) * X / (w * w);
      };
      accumulate(total, adaptive(mapped, 0.0, 1.0, 0.25 * abs_tol, rel_tol));
      return total;
    }
  }
  throw Error(ErrorKind::TolExceeded, "tail of infinite integral not resolved");
}

}  // namespace

Quadrature integrate(const Integrand& integrand, double lo, double hi, double abs_tol, double rel_tol) {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "integration requires lo < hi");
  if (std::isinf(hi)) return integrate_to_infinity(integrand, lo, abs_tol, rel_tol);
  return integrate_finite(integrand, lo, hi, abs_tol, rel_tol);
}

Quadrature integrate(const std::function<double(double)>& f, double lo, double hi, double abs_tol,
                     double rel_tol) {
  Integrand in;
  in.f = f;
  return integrate(in, lo, hi, abs_tol, rel_tol);
}

IvpTrajectory solve_ivp(const Rhs& rhs, double t0, const State& y0, double t_max,
                        const IvpOptions& options) {
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(options.abs_tol, options.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  auto system = [&rhs](const State& y, State& dydt, double t) { rhs(y, dydt, t); };

  auto norm_inf = [](const State& y) {
    double m = 0.0;
    for (double v : y) m = std::isfinite(v) ? std::max(m, std::fabs(v)) : kInf;
    return m;
  };

  IvpTrajectory out;
  State y = y0;
  double t = t0;
  double dt = std::min(options.initial_step, t_max - t0);
  std::size_t next = 0;
  const auto& te = options.t_eval;
  const bool record_all = te.empty();
  while (next < te.size() && te[next] <= t0) {
    out.t.push_back(t0);
    out.y.push_back(y0);
    ++next;
  }
  if (record_all) {
    out.t.push_back(t0);
    out.y.push_back(y0);
  }

  // Last two accepted states, for the blow-up extrapolation.
  double t_prev = t0;
  State y_prev = y0;

  auto estimate_blowup = [&](double t1, const State& y1, double t2, const State& y2) {
    std::size_t d = 0;
    for (std::size_t i = 1; i < y2.size(); ++i)
      if (std::fabs(y2[i]) > std::fabs(y2[d])) d = i;
    State f1(y1.size()), f2(y2.size());
    rhs(y1, f1, t1);
    rhs(y2, f2, t2);
    const double g1 = y1[d] / f1[d];
    const double g2 = y2[d] / f2[d];
    const double slope = (g2 - g1) / (t2 - t1);
    double T = t2 - g2 / slope;
    if (!std::isfinite(T) || slope >= 0.0 || T < t2) T = t2;
    return T;
  };

  while (t < t_max) {
    double target = t_max;
    if (!record_all && next < te.size()) target = std::min(target, te[next]);
    bool clipped = false;
    if (t + dt >= target) {
      dt = target - t;
      clipped = true;
    }
    const double t_before = t;
    const State y_before = y;
    auto res = stepper.try_step(system, y, t, dt);
    if (res == odeint::fail) {
      if (dt < 1e-14 * std::max(1.0, std::fabs(t))) {
        if (norm_inf(y) > std::sqrt(options.overflow_guard)) {
          out.blowup_time = estimate_blowup(t_prev, y_prev, t, y);
          return out;
        }
        throw Error(ErrorKind::StepUnderflow, "step size collapsed at t = " + std::to_string(t));
      }
      continue;
    }
    const double mag = norm_inf(y);
    if (mag > options.overflow_guard) {
      if (std::isfinite(mag)) {
        out.blowup_time = estimate_blowup(t_before, y_before, t, y);
      } else {
        out.blowup_time = estimate_blowup(t_prev, y_prev, t_before, y_before);
      }
      return out;
    }
    t_prev = t_before;
    y_prev = y_before;
    if (clipped) t = target;
    if (record_all) {
      out.t.push_back(t);
      out.y.push_back(y);
    } else {
      while (next < te.size() && te[next] <= t) {
        out.t.push_back(t);
        out.y.push_back(y);
        ++next;
      }
    }
  }
  return out;
}

double find_root(const std::function<double(double)>& g, double lo, double hi, double tol) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "find_root requires lo < hi");
  const double glo = g(lo);
  if (glo == 0.0) return lo;
  const double ghi = g(hi);
  if (ghi == 0.0) return hi;
  if (!(glo * ghi < 0.0)) {
    std::ostringstream msg;
    msg << "no sign change on [" << lo << ", " << hi << "]";
    throw Error(ErrorKind::NoSignChange, msg.str());
  }
  auto done = [tol](double x, double y) { return std::fabs(y - x) <= tol; };
  boost::uintmax_t max_iter = 400;
  auto bracket = boost::math::tools::toms748_solve(g, lo, hi, glo, ghi, done, max_iter);
  double a = bracket.first;
  double b = bracket.second;
  if (a == b) return a;
  double ga = g(a);
  while (std::fabs(b - a) > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double gm = g(m);
    if (gm == 0.0) return m;
    if ((gm < 0.0) == (ga < 0.0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

double bisect(const std::function<double(double)>& g, double lo, double hi, int iterations) {
  double glo = g(lo);
  if (glo * g(hi) > 0.0) throw Error(ErrorKind::NoSignChange, "bisection bracket has no sign change");
  for (int i = 0; i < iterations; ++i) {
    const double m = 0.5 * (lo + hi);
    const double gm = g(m);
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = m;
      glo = gm;
    } else {
      hi = m;
    }
  }
  return 0.5 * (lo + hi);
}

double invert_increasing(const std::function<double(double)>& F, const std::function<double(double)>& dF,
                         double target, double lo, double hi, double guess, double xtol) {
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double r = F(x) - target;
    if (r == 0.0) return x;
    if (r < 0.0) lo = x; else hi = x;
    const double d = dF(x);
    double step = (d > 0.0 && std::isfinite(d)) ? r / d : 0.0;
    double next = x - step;
    if (!(next > lo && next < hi) || step == 0.0) {
      next = 0.5 * (lo + hi);
      step = x - next;
    }
    if (std::fabs(step) <= xtol * std::max(1.0, std::fabs(x)) || hi - lo <= xtol * std::max(1.0, std::fabs(x))) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace catenoid
