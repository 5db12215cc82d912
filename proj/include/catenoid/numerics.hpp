#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "catenoid/error.hpp"

namespace catenoid {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Tolerances {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  double root_tol = 1e-12;
};

// An integrand on [lo, hi]. Endpoints flagged singular are assumed to carry
// an inverse square root singularity and are removed by x = end ± u^2 before
// subdivision. When the plain evaluator loses precision next to a singular
// endpoint (cancellation in x - end), an offset form taking the distance
// from that endpoint can be supplied.
struct Integrand {
  std::function<double(double)> f;
  bool singular_lo = false;
  bool singular_hi = false;
  std::function<double(double)> f_from_lo;  // f(lo + d), optional
  std::function<double(double)> f_from_hi;  // f(hi - d), optional
};

struct Quadrature {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// hi may be +infinity. Throws Divergent or TolExceeded.
Quadrature integrate(const Integrand& integrand, double lo, double hi, double abs_tol = 1e-12,
                     double rel_tol = 1e-10);

// Convenience overload for regular integrands.
Quadrature integrate(const std::function<double(double)>& f, double lo, double hi,
                     double abs_tol = 1e-12, double rel_tol = 1e-10);

using State = std::vector<double>;
using Rhs = std::function<void(const State& y, State& dydt, double t)>;

struct IvpTrajectory {
  std::vector<double> t;
  std::vector<State> y;
  std::optional<double> blowup_time;
};

struct IvpOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  double overflow_guard = 1e12;
  double initial_step = 1e-3;
  // Output nodes, increasing and inside [t0, t_max]. Empty means every
  // accepted step is recorded.
  std::vector<double> t_eval;
};

// Integrates forward from t0 to t_max with an adaptive embedded Runge-Kutta
// pair. Stops early, setting blowup_time, when the state leaves the overflow
// guard. Throws StepUnderflow.
IvpTrajectory solve_ivp(const Rhs& rhs, double t0, const State& y0, double t_max,
                        const IvpOptions& options = {});

// Bracketed root: requires a sign change on [lo, hi]. Returns a point whose
// bracket is no wider than tol. Throws NoSignChange.
double find_root(const std::function<double(double)>& g, double lo, double hi, double tol = 1e-12);

// Plain bisection, kept as an independent reference for find_root.
double bisect(const std::function<double(double)>& g, double lo, double hi, int iterations);

// Solves F(x) = target for increasing F with known derivative dF, starting
// from a bracket [lo, hi] with F(lo) <= target <= F(hi).
double invert_increasing(const std::function<double(double)>& F,
                         const std::function<double(double)>& dF, double target, double lo,
                         double hi, double guess, double xtol);

}  // namespace catenoid
