#include <algorithm>
#include <cmath>

#include "catenoid/error.hpp"
#include "catenoid/numerics.hpp"
#include "model.hpp"

namespace catenoid::detail {

double phi(Meridian m, double rho) { return m == Meridian::H3 ? std::cosh(rho) : 1.0; }
double dphi(Meridian m, double rho) { return m == Meridian::H3 ? std::sinh(rho) : 0.0; }
double psi(Meridian m, double rho) { return m == Meridian::Flat ? rho : std::sinh(rho); }
double dpsi(Meridian m, double rho) { return m == Meridian::Flat ? 1.0 : std::cosh(rho); }

void Model::profile(double s, Jet& rho, Jet& h) const {
  profile_pos(std::fabs(s), rho, h);
  if (s < 0.0) {
    rho.d1 = -rho.d1;
    h.v = -h.v;
    h.d2 = -h.d2;
  }
}

Jet Model::v(double s) const {
  Jet j = v_pos(std::fabs(s));
  if (s < 0.0) {
    j.v = -j.v;
    j.d2 = -j.d2;
  }
  return j;
}

Jet Model::e(double s) const {
  Jet j = e_pos(std::fabs(s));
  if (s < 0.0) j.d1 = -j.d1;
  return j;
}

Jet Model::weight(double s) const {
  Jet j = weight_pos(std::fabs(s));
  if (s < 0.0) j.d1 = -j.d1;
  return j;
}

namespace {

constexpr double kSqrt2 = 1.41421356237309504880;

// x^m - y^m from an accurate x - y.
double pow_difference(double x, double y, double x_minus_y, int m) {
  double sum = 0.0;
  double xk = 1.0;
  for (int k = 0; k < m; ++k) {
    sum += xk * std::pow(y, m - 1 - k);
    xk *= x;
  }
  return x_minus_y * sum;
}

double quad(const std::function<double(double)>& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  return integrate(f, lo, hi, kInnerAbs, kInnerRel).value;
}

double quad_singular(const std::function<double(double)>& f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  Integrand in;
  in.f = f;
  in.singular_lo = true;
  return integrate(in, lo, hi, kInnerAbs, kInnerRel).value;
}

// ---------------------------------------------------------------- R^{n+1}
// Profile a c(t/a) with c c'' = (n-1)(1 + c'^2), c(0) = 1. For n >= 3, c is
// the inverse of d_n(c) = int_1^c (u^{2n-2} - 1)^{-1/2} du.
class Euclid final : public Model {
 public:
  explicit Euclid(const FamilySpec& spec)
      : Model(spec), n_(spec.n), a_(spec.a), Tn_(euclid_T(spec.n)) {}

  Meridian meridian() const override { return Meridian::Flat; }
  ParamKind kind() const override { return ParamKind::Graph; }
  double T() const override { return a_ * Tn_; }
  double v_limit() const override { return 1.0; }
  double kappa() const override { return Tn_; }
  double e_sign() const override { return n_ == 2 ? -1.0 : 1.0; }

 protected:
  void profile_pos(double t, Jet& rho, Jet& h) const override {
    const C c = evaluate(t / a_);
    rho = Jet(a_ * c.c, c.c1, c.c2 / a_);
    h = Jet(t, 1.0, 0.0);
  }
  Jet v_pos(double t) const override {
    const C c = evaluate(t / a_);
    return c.prime_jet(a_) * pow(c.jet(a_), 1.0 - n_);
  }
  Jet e_pos(double t) const override {
    const C c = evaluate(t / a_);
    const Jet x(t / a_, 1.0 / a_, 0.0);
    const Jet cj = c.jet(a_);
    const Jet v = c.prime_jet(a_) * pow(cj, 1.0 - n_);
    return -pow(cj, 2.0 - n_) + x * v;
  }
  Jet weight_pos(double) const override { return Jet(std::pow(a_, n_ - 1)); }

 private:
  struct C {
    double c, c1, c2, c3;  // c and its x-derivatives
    Jet jet(double a) const { return {c, c1 / a, c2 / (a * a)}; }
    Jet prime_jet(double a) const { return {c1, c2 / a, c3 / (a * a)}; }
  };

  double kernel(double d) const {  // ((1+d)^{2n-2} - 1)^{-1/2}
    const double u = 1.0 + d;
    return 1.0 / std::sqrt(pow_difference(u * u, 1.0, d * (2.0 + d), n_ - 1));
  }
  double d_n(double delta) const {
    return quad_singular([this](double d) { return kernel(d); }, 0.0, delta);
  }
  // int_c^inf (u^{2n-2} - 1)^{-1/2} du after u = c / w.
  double tail(double c) const {
    const int m = 2 * n_ - 2;
    const double cm = std::pow(c, m);
    return quad([&](double w) { return c * std::pow(w, n_ - 3) / std::sqrt(cm - std::pow(w, m)); }, 0.0, 1.0);
  }

  C evaluate(double x) const {
    C r{};
    if (n_ == 2) {
      r.c = std::cosh(x);
      r.c1 = std::sinh(x);
      r.c2 = r.c;
      r.c3 = r.c1;
      return r;
    }
    if (x >= Tn_) throw Error(ErrorKind::OutOfDomain, "parameter beyond the end of the catenoid");
    double delta = 0.0;  // c - 1
    if (x > 0.0 && x < 0.5 * Tn_) {
      const double guess = std::cosh(std::sqrt(n_ - 1.0) * x) - 1.0;
      double hi = std::max(guess, 1e-8);
      while (d_n(hi) < x) hi *= 2.0;
      delta = invert_increasing([this](double d) { return d_n(d); }, [this](double d) { return kernel(d); },
                                x, 0.0, hi, std::min(guess, hi), 1e-15);
    } else if (x > 0.0) {
      const double rest = Tn_ - x;
      double guess = std::pow((n_ - 2.0) * rest, -1.0 / (n_ - 2.0));
      guess = std::max(guess, 1.01);
      double hi = guess;
      while (tail(hi) > rest) hi *= 2.0;
      const double c = invert_increasing(
          [this](double c) { return -tail(c); },
          [this](double c) { return 1.0 / std::sqrt(std::pow(c, 2 * n_ - 2) - 1.0); }, -rest, 1.0, hi,
          std::min(guess, 0.5 * (1.0 + hi)), 1e-15);
      delta = c - 1.0;
    }
    r.c = 1.0 + delta;
    const double g = pow_difference(r.c * r.c, 1.0, delta * (2.0 + delta), n_ - 1);  // c^{2n-2} - 1
    r.c1 = std::sqrt(g);
    r.c2 = (n_ - 1.0) * std::pow(r.c, 2 * n_ - 3);
    r.c3 = (n_ - 1.0) * (2 * n_ - 3.0) * std::pow(r.c, 2 * n_ - 4) * r.c1;
    return r;
  }

  int n_;
  double a_;
  double Tn_;
};

// ------------------------------------------------------------ H^2 x R
// cosh R = cosh a cosh s, Lambda' = sinh a / sqrt(D), D = cosh^2 a cosh^2 s - 1.
class H2xRModel final : public Model {
 public:
  explicit H2xRModel(const FamilySpec& spec)
      : Model(spec), a_(spec.a), ca_(std::cosh(spec.a)), sa_(std::sinh(spec.a)), E_(h2_tail(spec.a)) {}

  Meridian meridian() const override { return Meridian::HyperbolicSlice; }
  ParamKind kind() const override { return ParamKind::Arclength; }
  double T() const override { return kInf; }
  double v_limit() const override { return 1.0; }
  double kappa() const override { return E_; }
  double e_sign() const override { return -1.0; }

  template <class S>
  S D(const S& s) const {
    const S c = cosh(s);
    return ca_ * ca_ * c * c - 1.0;
  }
  template <class S>
  S B(const S& t) const {
    const S sh = sinh(t);
    return ca_ * sh * sh * pow(D(t), -1.5);
  }

 protected:
  void profile_pos(double s, Jet& rho, Jet& h) const override {
    const Jet sj = Jet::variable(s);
    rho = acosh(ca_ * cosh(sj));
    const Jet lam_s = sa_ / sqrt(D(sj));
    const double lam = sa_ * quad([this](double t) { return 1.0 / std::sqrt(D(t)); }, 0.0, s);
    h = Jet(lam, lam_s.v, lam_s.d1);
  }
  Jet v_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    return ca_ * sinh(sj) / sqrt(D(sj));
  }
  Jet e_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    const Jet Dj = D(sj);
    const Jet v = ca_ * sinh(sj) / sqrt(Dj);
    const Jet b = B(sj);
    const double ib = quad([this](double t) { return B(t); }, 0.0, s);
    return -(sa_ * sa_) * cosh(sj) / Dj + v * Jet(ib, b.v, b.d1);
  }
  Jet weight_pos(double s) const override { return sqrt(D(Jet::variable(s))); }

 private:
  double a_, ca_, sa_, E_;
};

// ------------------------------------------------------------ H^n x R
// Graph over the height t; f is the inverse of
// lambda(rho) = sinh^{n-1} a int_a^rho (sinh^{2n-2} u - sinh^{2n-2} a)^{-1/2} du.
class HnxRModel final : public Model {
 public:
  explicit HnxRModel(const FamilySpec& spec)
      : Model(spec),
        n_(spec.n),
        a_(spec.a),
        sa_(std::sinh(spec.a)),
        ca_(std::cosh(spec.a)),
        lead_(std::pow(sa_, n_ - 1)),
        T_(hn_height(spec.n, spec.a)),
        E_(hn_tail(spec.n, spec.a)) {}

  Meridian meridian() const override { return Meridian::HyperbolicSlice; }
  ParamKind kind() const override { return ParamKind::Graph; }
  double T() const override { return T_; }
  double v_limit() const override { return 1.0; }
  double kappa() const override { return E_; }
  double e_sign() const override { return 1.0; }

 protected:
  void profile_pos(double t, Jet& rho, Jet& h) const override {
    const F f = evaluate(t);
    rho = Jet(f.f, f.ft, f.ftt);
    h = Jet(t, 1.0, 0.0);
  }
  Jet v_pos(double t) const override {
    const F f = evaluate(t);
    return v_of(f);
  }
  Jet e_pos(double t) const override {
    const F f = evaluate(t);
    const Jet fj(f.f, f.ft, f.ftt);
    const Jet v = v_of(f);
    const Jet e0 = ca_ / cosh(fj) * pow(sa_ / sinh(fj), n_ - 2.0);
    const Jet di = ca_ / (sa_ * cosh(fj) * cosh(fj));
    return -e0 + v * Jet(f.I, di.v, di.d1);
  }
  Jet weight_pos(double) const override { return Jet(lead_); }

 private:
  struct F {
    double delta, f, ft, ftt, fttt, I;
  };

  Jet v_of(const F& f) const {
    const Jet fj(f.f, f.ft, f.ftt);
    const Jet ftj(f.ft, f.ftt, f.fttt);
    return ftj * lead_ * pow(sinh(fj), 1.0 - n_);
  }

  double kernel(double d) const {
    const double S = std::sinh(a_ + d);
    const double gap = pow_difference(S * S, sa_ * sa_, std::sinh(d) * std::sinh(2.0 * a_ + d), n_ - 1);
    return 1.0 / std::sqrt(gap);
  }
  double lambda(double delta) const {
    return lead_ * quad_singular([this](double d) { return kernel(d); }, 0.0, delta);
  }
  double tail(double delta) const {
    return lead_ * integrate([this](double d) { return kernel(d); }, delta, kInf, kInnerAbs, kInnerRel).value;
  }
  // cosh a int_1^W (w^{2n-2} - 1)^{-1/2} (sinh^2 a w^2 + 1)^{-3/2} dw, over u = w - 1.
  double itilde(double upper) const {
    return ca_ * quad_singular([this](double u) { return tilde_kernel(u); }, 0.0, upper);
  }

 public:
  double tilde_kernel(double u) const {
    const double w = 1.0 + u;
    const double g = pow_difference(w * w, 1.0, u * (2.0 + u), n_ - 1);
    return std::pow(sa_ * sa_ * w * w + 1.0, -1.5) / std::sqrt(g);
  }

 private:
  F evaluate(double t) const {
    if (t >= T_) throw Error(ErrorKind::OutOfDomain, "height beyond the end of the catenoid");
    double delta = 0.0;
    if (t > 0.0 && t < 0.5 * T_) {
      const double curv = (n_ - 1.0) * ca_ / sa_;
      const double guess = std::max(0.5 * curv * t * t, 1e-12);
      double hi = std::max(guess, 1e-6);
      while (lambda(hi) < t) hi *= 2.0;
      delta = invert_increasing([this](double d) { return lambda(d); },
                                [this](double d) { return lead_ * kernel(d); }, t, 0.0, hi,
                                std::min(guess, hi), 1e-15);
    } else if (t > 0.0) {
      const double rest = T_ - t;
      const double m = n_ - 1.0;
      double rho = -std::log(m * rest / std::pow(2.0 * sa_, m)) / m;
      double guess = std::max(rho - a_, 1e-3);
      double hi = guess;
      while (tail(hi) > rest) hi *= 2.0;
      guess = std::min(guess, hi);
      if (guess >= hi) guess = 0.75 * hi;
      delta = invert_increasing([this](double d) { return -tail(d); },
                                [this](double d) { return lead_ * kernel(d); }, -rest, 0.0, hi, guess,
                                1e-15);
    }
    F r{};
    r.delta = delta;
    r.f = a_ + delta;
    const double S = std::sinh(r.f);
    const double gap = pow_difference(S * S, sa_ * sa_, std::sinh(delta) * std::sinh(2.0 * a_ + delta), n_ - 1);
    r.ft = std::sqrt(gap) / std::pow(sa_, n_ - 1);
    const double coth = std::cosh(r.f) / S;
    const double q = 1.0 + r.ft * r.ft;
    r.ftt = (n_ - 1.0) * coth * q;
    r.fttt = (n_ - 1.0) * (-r.ft * q / (S * S) + coth * 2.0 * r.ft * r.ftt);
    // W - 1 = (sinh f - sinh a) / sinh a
    const double w_minus_1 = 2.0 * std::cosh(a_ + 0.5 * delta) * std::sinh(0.5 * delta) / sa_;
    r.I = itilde(w_minus_1);
    return r;
  }

  int n_;
  double a_, sa_, ca_, lead_, T_, E_;
};

// ------------------------------------------------------------ H^3 minimal
// cosh 2y = cosh 2a cosh 2s, Lambda' = sqrt 2 J_0.
class H3MinModel final : public Model {
 public:
  explicit H3MinModel(const FamilySpec& spec)
      : Model(spec),
        A_(std::cosh(2.0 * spec.a)),
        sh2a_(std::sinh(2.0 * spec.a)),
        E0_(h3_tail_integral(spec.a, kInnerAbs, kInnerRel)) {}

  Meridian meridian() const override { return Meridian::H3; }
  ParamKind kind() const override { return ParamKind::Arclength; }
  double T() const override { return kInf; }
  double v_limit() const override { return kInf; }
  double kappa() const override { return kSqrt2 * E0_; }
  double e_sign() const override { return -1.0; }
  double v_scale() const override { return kSqrt2; }

  template <class S>
  S J0(const S& t) const {
    const S C = A_ * cosh(2.0 * t);
    return sh2a_ / ((C + 1.0) * sqrt(C - 1.0));
  }
  // a-derivative of J_0, written as n(A, T) / d(A, T) with T = cosh 2t.
  template <class S>
  S I0(const S& t) const {
    const S T = cosh(2.0 * t);
    const double A = A_;
    const S num = A * (3.0 - A * A) * T * T + (A * A - 1.0) * T - 2.0 * A;
    const S AT = A * T;
    const S den = (AT + 1.0) * (AT + 1.0) * pow(AT - 1.0, 1.5);
    return num / den;
  }

 protected:
  void profile_pos(double s, Jet& rho, Jet& h) const override {
    const Jet sj = Jet::variable(s);
    rho = 0.5 * acosh(A_ * cosh(2.0 * sj));
    const Jet j = J0(sj);
    const double lam = kSqrt2 * quad([this](double t) { return J0(t); }, 0.0, s);
    h = Jet(lam, kSqrt2 * j.v, kSqrt2 * j.d1);
  }
  Jet v_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    return A_ * sinh(2.0 * sj) / (kSqrt2 * sqrt(A_ * cosh(2.0 * sj) - 1.0));
  }
  Jet e_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    const Jet c2s = cosh(2.0 * sj);
    const Jet C = A_ * c2s;
    const Jet f0 = sh2a_ * sh2a_ * c2s / (C * C - 1.0);
    const Jet v = A_ * sinh(2.0 * sj) / (kSqrt2 * sqrt(C - 1.0));
    const Jet i0 = I0(sj);
    const double integral = quad([this](double t) { return I0(t); }, 0.0, s);
    return -f0 + kSqrt2 * v * Jet(integral, i0.v, i0.d1);
  }
  Jet weight_pos(double s) const override {
    return sqrt((A_ * cosh(2.0 * Jet::variable(s)) - 1.0) * 0.5);
  }

 private:
  double A_, sh2a_, E0_;
};

// ------------------------------------------------------------ cousins
// cosh 2y = 2 exp(-2a) s^2 + cosh 2a; embedded branch a > 0.
class CousinModel final : public Model {
 public:
  explicit CousinModel(const FamilySpec& spec)
      : Model(spec),
        a_(spec.a),
        ea_(std::exp(spec.a)),
        ch_(std::cosh(spec.a)),
        sh_(std::sinh(spec.a)) {}

  Meridian meridian() const override { return Meridian::H3; }
  double mean_curvature() const override { return 1.0; }
  ParamKind kind() const override { return ParamKind::Arclength; }
  double T() const override { return kInf; }
  double v_limit() const override { return 1.0 / ea_; }
  double kappa() const override { return kInf; }
  double e_sign() const override { return 1.0; }

  template <class S>
  S A2(const S& t) const { return t * t + ea_ * ea_ * ch_ * ch_; }
  template <class S>
  S A3(const S& t) const { return t * t + ea_ * ea_ * sh_ * sh_; }
  template <class S>
  S lam_s(const S& t) const {
    const double e3 = ea_ * ea_ * ea_;
    return (2.0 * ea_ * t * t + e3 * std::sinh(2.0 * a_)) / (2.0 * A2(t) * sqrt(A3(t)));
  }
  // B - C, the integrand paired with v in e.
  template <class S>
  S BC(const S& t) const {
    const double e3 = ea_ * ea_ * ea_;
    const S a2 = A2(t);
    const S a3 = A3(t);
    const S ra3 = sqrt(a3);
    const S A1 = 2.0 * ea_ * t * t + e3 * std::sinh(2.0 * a_);
    const double B2 = 2.0 * e3 * ch_;
    const double B3 = 2.0 * e3 * sh_;
    const S B = (2.0 * ea_ * t * t + e3 * (3.0 * std::sinh(2.0 * a_) + 2.0 * std::cosh(2.0 * a_))) / (2.0 * a2 * ra3);
    const S C = A1 * B2 / (2.0 * a2 * a2 * ra3) + A1 * B3 / (4.0 * a2 * a3 * ra3);
    return B - C;
  }

 protected:
  void profile_pos(double s, Jet& rho, Jet& h) const override {
    const Jet sj = Jet::variable(s);
    rho = 0.5 * acosh(2.0 * sj * sj / (ea_ * ea_) + std::cosh(2.0 * a_));
    const Jet l = lam_s(sj);
    const double lam = quad([this](double t) { return lam_s(t); }, 0.0, s);
    h = Jet(lam, l.v, l.d1);
  }
  Jet v_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    return sj / (ea_ * sqrt(A3(sj)));
  }
  Jet e_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    const double e4 = std::pow(ea_, 4);
    const Jet P = (e4 * sh_ * sh_ * ch_ * ch_ - sj * sj * sj * sj) / (A2(sj) * A3(sj));
    const Jet v = sj / (ea_ * sqrt(A3(sj)));
    const Jet bc = BC(sj);
    const double integral = quad([this](double t) { return BC(t); }, 0.0, s);
    return -P + v * Jet(integral, bc.v, bc.d1);
  }
  Jet weight_pos(double s) const override {
    const Jet sj = Jet::variable(s);
    return sinh(0.5 * acosh(2.0 * sj * sj / (ea_ * ea_) + std::cosh(2.0 * a_)));
  }

 private:
  double a_, ea_, ch_, sh_;
};

}  // namespace

double euclid_T(int n) {
  if (n == 2) return kInf;
  Integrand in;
  const int m = 2 * n - 2;
  in.f = [m](double u) { return 1.0 / std::sqrt(std::pow(u, m) - 1.0); };
  in.singular_lo = true;
  in.f_from_lo = [n](double d) {
    const double u = 1.0 + d;
    return 1.0 / std::sqrt(pow_difference(u * u, 1.0, d * (2.0 + d), n - 1));
  };
  return integrate(in, 1.0, kInf, kInnerAbs, kInnerRel).value;
}

double h2_tail(double a) {
  const double ca = std::cosh(a);
  auto B = [ca](double t) {
    const double sh = std::sinh(t);
    const double c = std::cosh(t);
    return ca * sh * sh * std::pow(ca * ca * c * c - 1.0, -1.5);
  };
  return integrate(B, 0.0, kInf, kInnerAbs, kInnerRel).value;
}

double h2_height(double a) {
  const double ca = std::cosh(a);
  auto f = [ca](double t) {
    const double c = std::cosh(t);
    return 1.0 / std::sqrt(ca * ca * c * c - 1.0);
  };
  return std::sinh(a) * integrate(f, 0.0, kInf, kInnerAbs, kInnerRel).value;
}

double hn_height(int n, double a) {
  const double sa = std::sinh(a);
  Integrand in;
  in.f = [n, a, sa](double d) {
    const double S = std::sinh(a + d);
    return 1.0 / std::sqrt(pow_difference(S * S, sa * sa, std::sinh(d) * std::sinh(2.0 * a + d), n - 1));
  };
  in.singular_lo = true;
  return std::pow(sa, n - 1) * integrate(in, 0.0, kInf, kInnerAbs, kInnerRel).value;
}

double hn_tail(int n, double a) {
  const double sa = std::sinh(a);
  Integrand in;
  in.f = [n, sa](double u) {
    const double w = 1.0 + u;
    const double g = pow_difference(w * w, 1.0, u * (2.0 + u), n - 1);
    return std::pow(sa * sa * w * w + 1.0, -1.5) / std::sqrt(g);
  };
  in.singular_lo = true;
  return std::cosh(a) * integrate(in, 0.0, kInf, kInnerAbs, kInnerRel).value;
}

double h3_tail_integral(double a, double abs_tol, double rel_tol) {
  const double A = std::cosh(2.0 * a);
  auto I0 = [A](double t) {
    const double T = std::cosh(2.0 * t);
    const double num = A * (3.0 - A * A) * T * T + (A * A - 1.0) * T - 2.0 * A;
    const double AT = A * T;
    return num / ((AT + 1.0) * (AT + 1.0) * std::pow(AT - 1.0, 1.5));
  };
  return integrate(I0, 0.0, kInf, abs_tol, rel_tol).value;
}

double h3_height_integral(double a, double abs_tol, double rel_tol) {
  const double A = std::cosh(2.0 * a);
  const double sh2a = std::sinh(2.0 * a);
  auto J0 = [A, sh2a](double t) {
    const double C = A * std::cosh(2.0 * t);
    return sh2a / ((C + 1.0) * std::sqrt(C - 1.0));
  };
  return kSqrt2 * integrate(J0, 0.0, kInf, abs_tol, rel_tol).value;
}

double cousin_tail_probe(double a) {
  // The integrand B paired with v in e; it decays like 1/t.
  const double ea = std::exp(a);
  const double e3 = ea * ea * ea;
  const double ch = std::cosh(a);
  const double sh = std::sinh(a);
  auto B = [=](double t) {
    const double a2 = t * t + ea * ea * ch * ch;
    const double a3 = t * t + ea * ea * sh * sh;
    return (2.0 * ea * t * t + e3 * (3.0 * std::sinh(2.0 * a) + 2.0 * std::cosh(2.0 * a))) / (2.0 * a2 * std::sqrt(a3));
  };
  return integrate(B, 0.0, kInf, kInnerAbs, kInnerRel).value;
}

ModelPtr make_model(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::EuclidCatenoid: return std::make_shared<Euclid>(spec);
    case Family::H2xR: return std::make_shared<H2xRModel>(spec);
    case Family::HnxR: return std::make_shared<HnxRModel>(spec);
    case Family::H3Minimal: return std::make_shared<H3MinModel>(spec);
    case Family::H3Cousin: return std::make_shared<CousinModel>(spec);
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family");
}

}  // namespace catenoid::detail
