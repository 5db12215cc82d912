#pragma once

#include <cmath>

namespace catenoid {

// Truncated second-order Taylor jet: value and first two derivatives with
// respect to one independent variable. Closed-form fields are written as
// templates over the scalar type so that the same expression yields exact
// derivatives when instantiated with Jet.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;

  constexpr Jet() = default;
  constexpr Jet(double value) : v(value) {}  // NOLINT: constants promote implicitly
  constexpr Jet(double value, double first, double second) : v(value), d1(first), d2(second) {}

  static constexpr Jet variable(double x) { return {x, 1.0, 0.0}; }

  constexpr Jet operator-() const { return {-v, -d1, -d2}; }
  constexpr Jet& operator+=(const Jet& o) { v += o.v; d1 += o.d1; d2 += o.d2; return *this; }
  constexpr Jet& operator-=(const Jet& o) { v -= o.v; d1 -= o.d1; d2 -= o.d2; return *this; }
  constexpr Jet& operator*=(const Jet& o) {
    *this = Jet{v * o.v, d1 * o.v + v * o.d1, d2 * o.v + 2.0 * d1 * o.d1 + v * o.d2};
    return *this;
  }
  constexpr Jet& operator/=(const Jet& o) {
    const double q = v / o.v;
    const double q1 = (d1 - q * o.d1) / o.v;
    const double q2 = (d2 - 2.0 * q1 * o.d1 - q * o.d2) / o.v;
    *this = Jet{q, q1, q2};
    return *this;
  }
};

constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
constexpr Jet operator*(Jet a, const Jet& b) { return a *= b; }
constexpr Jet operator/(Jet a, const Jet& b) { return a /= b; }
constexpr Jet operator+(Jet a, double b) { return a += Jet(b); }
constexpr Jet operator+(double a, Jet b) { return b += Jet(a); }
constexpr Jet operator-(Jet a, double b) { return a -= Jet(b); }
constexpr Jet operator-(double a, const Jet& b) { return Jet(a) - b; }
constexpr Jet operator*(Jet a, double b) { return {a.v * b, a.d1 * b, a.d2 * b}; }
constexpr Jet operator*(double a, Jet b) { return b * a; }
constexpr Jet operator/(Jet a, double b) { return {a.v / b, a.d1 / b, a.d2 / b}; }
constexpr Jet operator/(double a, const Jet& b) { return Jet(a) / b; }

// Chain rule for a scalar function g with g(x.v)=g0, g'=g1, g''=g2.
constexpr Jet compose(const Jet& x, double g0, double g1, double g2) {
  return {g0, g1 * x.d1, g2 * x.d1 * x.d1 + g1 * x.d2};
}

// Bring the scalar overloads into scope so templated expressions resolve
// to them when instantiated with double.
using std::acosh;
using std::cosh;
using std::exp;
using std::log;
using std::pow;
using std::sinh;
using std::sqrt;
using std::tanh;

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.v; }

inline Jet sqrt(const Jet& x) {
  const double r = std::sqrt(x.v);
  return compose(x, r, 0.5 / r, -0.25 / (r * x.v));
}
inline Jet pow(const Jet& x, double p) {
  const double r = std::pow(x.v, p);
  return compose(x, r, p * r / x.v, p * (p - 1.0) * r / (x.v * x.v));
}
inline Jet exp(const Jet& x) {
  const double r = std::exp(x.v);
  return compose(x, r, r, r);
}
inline Jet log(const Jet& x) { return compose(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v)); }
inline Jet sinh(const Jet& x) {
  const double s = std::sinh(x.v);
  const double c = std::cosh(x.v);
  return compose(x, s, c, s);
}
inline Jet cosh(const Jet& x) {
  const double s = std::sinh(x.v);
  const double c = std::cosh(x.v);
  return compose(x, c, s, c);
}
inline Jet tanh(const Jet& x) {
  const double t = std::tanh(x.v);
  const double sech2 = 1.0 - t * t;
  return compose(x, t, sech2, -2.0 * t * sech2);
}
// acosh(x) for x > 1.
inline Jet acosh(const Jet& x) {
  const double w = std::sqrt(x.v * x.v - 1.0);
  return compose(x, std::acosh(x.v), 1.0 / w, -x.v / (w * w * w));
}

}  // namespace catenoid
