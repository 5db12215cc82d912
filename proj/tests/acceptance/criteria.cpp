#include "criteria.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "catenoid/error.hpp"
#include "catenoid/flux.hpp"
#include "catenoid/jacobi.hpp"
#include "catenoid/numerics.hpp"
#include "catenoid/profile.hpp"
#include "catenoid/report_io.hpp"
#include "catenoid/spectral.hpp"
#include "catenoid/stability.hpp"

namespace catenoid::acceptance {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  // Records a measured quantity against a bound.
  void at_most(const std::string& what, double value, double bound) {
    const bool ok = value <= bound;
    pass = pass && ok;
    note(what + "=" + format_real(value) + (ok ? "<=" : ">") + format_real(bound));
  }
  void require(const std::string& what, bool ok) {
    pass = pass && ok;
    if (!ok) note(what + " failed");
  }
  void note(const std::string& text) { detail << (detail.tellp() > 0 ? "; " : "") << text; }
};

struct Criterion {
  int id;
  std::string name;
  std::string tags;
  std::function<void(Check&, double)> run;
};

constexpr int kGrid = 4001;

std::string label(const FamilySpec& s) { return describe(s); }

std::vector<FamilySpec> lindelof_grid() {
  std::vector<FamilySpec> out;
  for (double a : {0.2, 0.5, 1.0}) {
    for (int n : {2, 3, 4, 5}) out.push_back({Family::EuclidCatenoid, n, a});
    out.push_back({Family::H2xR, 2, a});
    out.push_back({Family::HnxR, 2, a});
    out.push_back({Family::HnxR, 3, a});
    out.push_back({Family::H3Minimal, 2, a});
    out.push_back({Family::H3Cousin, 2, a});
  }
  return out;
}

std::vector<FamilySpec> standard_families() {
  return {{Family::EuclidCatenoid, 2, 1.0}, {Family::EuclidCatenoid, 3, 1.0}, {Family::EuclidCatenoid, 4, 1.0},
          {Family::EuclidCatenoid, 5, 1.0}, {Family::H2xR, 2, 1.0},           {Family::HnxR, 2, 0.5},
          {Family::HnxR, 3, 0.5},           {Family::H3Minimal, 2, 0.2},      {Family::H3Minimal, 2, 1.0},
          {Family::H3Cousin, 2, 0.5}};
}

double lambda_on(const FamilySpec& spec, double lo, double hi) {
  return lambda1(assemble(spec, lo, hi, kGrid)).lambda1;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> c;

  c.push_back({1, "xi0 root against bisection", "euclid numerics", [](Check& k, double sc) {
                 auto g = [](double t) { return 1.0 - t * std::tanh(t); };
                 const double r = find_root(g, 0.5, 2.0);
                 k.note("xi0=" + format_real(r));
                 k.at_most("|root-bisect|", std::fabs(r - bisect(g, 0.5, 2.0, 60)), 1e-10 * sc);
               }});

  c.push_back({2, "T3 quadrature and T2 divergence", "euclid numerics", [](Check& k, double sc) {
                 Integrand in;
                 in.f = [](double u) { return 1.0 / std::sqrt(u * u * u * u - 1.0); };
                 in.singular_lo = true;
                 in.f_from_lo = [](double d) { return 1.0 / std::sqrt(d * (4.0 + d * (6.0 + d * (4.0 + d)))); };
                 const double T3 = integrate(in, 1.0, kInf, 1e-13, 1e-12).value;
                 const double beta = std::tgamma(0.25) * std::tgamma(0.5) / (4.0 * std::tgamma(0.75));
                 k.at_most("|T3-Beta|", std::fabs(T3 - beta), 1e-8 * sc);
                 Integrand flat;
                 flat.f = [](double u) { return 1.0 / std::sqrt(u * u - 1.0); };
                 flat.singular_lo = true;
                 flat.f_from_lo = [](double d) { return 1.0 / std::sqrt(d * (2.0 + d)); };
                 bool divergent = false;
                 try {
                   integrate(flat, 1.0, kInf);
                 } catch (const Error& e) {
                   divergent = e.kind() == ErrorKind::Divergent;
                 }
                 k.require("T2 divergent", divergent);
               }});

  c.push_back({3, "a0 root of E0", "h3 stability", [](Check& k, double sc) {
                 const double a0 = h3_critical_neck();
                 k.note("a0=" + format_real(a0));
                 k.require("a0 in [0.49,0.50]", a0 >= 0.49 && a0 <= 0.50);
                 k.at_most("|a0-0.4955|", std::fabs(a0 - 0.4955), 2e-3 * sc);
               }});

  c.push_back({4, "a1 and sign of E0 beyond it", "h3 stability", [](Check& k, double sc) {
                 const double a1 = h3_a1();
                 k.at_most("|a1-0.5915|", std::fabs(a1 - 0.5915), 1e-3 * sc);
                 double worst = -kInf;
                 for (int i = 0; i < 50; ++i) worst = std::max(worst, h3_tail(a1 + (3.0 - a1) * i / 49.0));
                 k.note("max E0=" + format_real(worst));
                 k.require("E0<0 on grid", worst < 0.0);
               }});

  c.push_back({5, "do Carmo-Dajczer sign change", "h3 stability", [](Check& k, double sc) {
                 const double w = 0.02 * sc;
                 const double lo = cd_functional(0.4668 - w);
                 const double hi = cd_functional(0.4668 + w);
                 k.note("cd(lo)=" + format_real(lo) + " cd(hi)=" + format_real(hi));
                 k.require("sign change", lo > 0.0 && hi < 0.0);
               }});

  c.push_back({6, "Mori threshold", "h3 stability", [](Check& k, double) {
                 const double s18 = sup_second_fundamental_norm(1.80);
                 const double s17 = sup_second_fundamental_norm(1.70);
                 k.note("sup|A|^2(1.8)=" + format_real(s18) + " sup|A|^2(1.7)=" + format_real(s17));
                 k.require("holds at 1.80", mori_condition(1.80));
                 k.require("fails at 1.70", !mori_condition(1.70));
               }});

  c.push_back({7, "Lindelof table", "euclid h2xr hnxr h3 cousin stability", [](Check& k, double) {
                 int wrong = 0;
                 for (const auto& spec : lindelof_grid()) {
                   const bool expected = (spec.family == Family::EuclidCatenoid && spec.n == 2) ||
                                         spec.family == Family::H3Cousin;
                   if (classify(spec).lindelof != expected) {
                     ++wrong;
                     k.note("wrong verdict for " + label(spec));
                   }
                 }
                 k.require("all verdicts", wrong == 0);
                 k.note(std::to_string(lindelof_grid().size()) + " cases");
               }});

  c.push_back({8, "ordering 0 < ell < z", "euclid h2xr hnxr h3 stability", [](Check& k, double) {
                 int tested = 0;
                 for (const auto& spec : lindelof_grid()) {
                   const StabilityReport r = classify(spec);
                   if (!r.ell || !r.z) continue;
                   ++tested;
                   if (!(*r.ell > 0.0 && *r.ell < *r.z)) k.require("ordering for " + label(spec), false);
                 }
                 k.note(std::to_string(tested) + " pairs with both");
                 k.require("some pairs", tested > 0);
               }});

  c.push_back({9, "spectral cross-validation", "euclid h2xr hnxr h3 cousin spectral", [](Check& k, double sc) {
                 const FamilySpec grid[] = {{Family::EuclidCatenoid, 2, 1.0}, {Family::EuclidCatenoid, 3, 1.0},
                                            {Family::H2xR, 2, 1.0},           {Family::HnxR, 3, 0.5},
                                            {Family::H3Minimal, 2, 0.2},      {Family::H3Cousin, 2, 0.5}};
                 double worst_mid = 0.0;
                 for (const auto& spec : grid) {
                   const double z = *variation_zero(spec);
                   const double T = build_profile(spec).T();
                   const double inner = lambda_on(spec, -0.95 * z, 0.95 * z);
                   const double at_z = lambda_on(spec, -z, z);
                   // 1.1 z may leave (-T, T) for graphs of finite height.
                   const double wide = std::min(1.1 * z, 0.5 * (z + T));
                   const double outer = lambda_on(spec, -wide, wide);
                   worst_mid = std::max(worst_mid, std::fabs(at_z));
                   if (!(inner > 0.0)) k.require("lambda1 inside for " + label(spec), false);
                   if (!(outer < 0.0)) k.require("lambda1 outside for " + label(spec), false);
                   const double n1 = lambda_on(spec, -0.5 * z, 0.6 * z);
                   const double n2 = lambda_on(spec, -0.7 * z, 0.8 * z);
                   if (!(n1 > n2 && n2 > at_z)) k.require("monotone for " + label(spec), false);
                 }
                 k.at_most("max|lambda1[-z,z]|", worst_mid, 1e-3 * sc);
               }});

  c.push_back({10, "Wronskian constancy", "euclid h2xr hnxr h3 cousin jacobi", [](Check& k, double sc) {
                 double worst = 0.0;
                 for (const auto& spec : standard_families()) {
                   worst = std::max(worst, wronskian_deviation(spec, standard_grid(spec)).max_rel_deviation);
                 }
                 k.at_most("max rel dev", worst, 1e-6 * sc);
                 const double ref = wronskian_deviation({Family::EuclidCatenoid, 2, 1.0}, standard_grid({})).reference;
                 k.at_most("|W_R3+1|", std::fabs(ref + 1.0), 1e-10 * sc);
               }});

  c.push_back({11, "tangent construction", "euclid stability", [](Check& k, double sc) {
                 double res = 0.0;
                 double inv = 0.0;
                 int cases = 0;
                 for (int n : {2, 3, 4}) {
                   const FamilySpec spec{Family::EuclidCatenoid, n, 1.0};
                   const double T = build_profile(spec).T();
                   for (double alpha : {0.8, 1.5, 2.5}) {
                     if (alpha >= T) continue;
                     const auto beta = conjugate_point(spec, alpha);
                     if (!beta) continue;
                     ++cases;
                     res = std::max(res, std::fabs(tangent_residual(spec, alpha, *beta)));
                     const auto back = conjugate_point(spec, *beta);
                     inv = std::max(inv, back ? std::fabs(*back - alpha) : kInf);
                   }
                 }
                 k.note(std::to_string(cases) + " cases");
                 k.at_most("max residual", res, 1e-8 * sc);
                 k.at_most("max |beta(beta)-alpha|", inv, 1e-8 * sc);
               }});

  c.push_back({12, "profile cross-check and flux constancy", "euclid h2xr hnxr h3 cousin profiles flux",
               [](Check& k, double sc) {
                 double cross = 0.0;
                 double flux = 0.0;
                 for (const auto& spec : standard_families()) {
                   const auto grid = standard_grid(spec);
                   cross = std::max(cross, profile_cross_check(spec, grid));
                   flux = std::max(flux, flux_constancy(spec, grid).max_rel_deviation);
                 }
                 k.at_most("ODE vs closed form", cross, 1e-8 * sc);
                 k.at_most("flux deviation", flux, 1e-8 * sc);
               }});

  c.push_back({13, "cousin variation field", "cousin jacobi", [](Check& k, double sc) {
                 std::vector<double> grid;
                 for (int i = 0; i <= 98; ++i) grid.push_back(0.1 + 0.05 * i);
                 double worst = 0.0;
                 for (double a : {0.3, 0.7, 1.2}) {
                   worst = std::max(worst, variation_fd_check({Family::H3Cousin, 2, a}, grid, 1e-5));
                 }
                 k.at_most("max rel dev", worst, 1e-4 * sc);
               }});

  c.push_back({14, "V0' = sqrt(2) E0", "h3 stability", [](Check& k, double sc) {
                 double worst = 0.0;
                 for (double a : {0.3, 0.5, 1.0}) worst = std::max(worst, vheight_consistency(a, 1e-4));
                 k.at_most("max |fd-sqrt2 E0|", worst, 1e-6 * sc);
               }});

  c.push_back({15, "catenary intersections", "h3 stability", [](Check& k, double) {
                 const int near = intersect_catenaries(0.2, 0.3).count;
                 const int far = intersect_catenaries(1.0, 1.5).count;
                 k.note("(0.2,0.3)->" + std::to_string(near) + " (1.0,1.5)->" + std::to_string(far));
                 k.require("counts", near == 2 && far == 0);
               }});

  c.push_back({16, "flux boundary balance", "euclid h3 cousin flux", [](Check& k, double sc) {
                 const double minimal = std::max({
                     boundary_flux_balance({Family::EuclidCatenoid, 2, 1.0}, -1.0, 2.0).residual,
                     boundary_flux_balance({Family::EuclidCatenoid, 3, 1.0}, -0.2, 0.9).residual,
                     boundary_flux_balance({Family::H3Minimal, 2, 0.3}, -0.5, 3.0).residual,
                 });
                 k.at_most("minimal residual", minimal, 1e-8 * sc);
                 k.at_most("cousin residual", boundary_flux_balance({Family::H3Cousin, 2, 0.6}, -1.0, 2.5).residual,
                           1e-6 * sc);
               }});

  return c;
}

bool selected(const Criterion& c, const std::string& filter) {
  if (filter.empty()) return true;
  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
    return s;
  };
  const std::string f = lower(filter);
  return lower(c.name).find(f) != std::string::npos || lower(c.tags).find(f) != std::string::npos ||
         std::to_string(c.id) == f;
}

}  // namespace

std::vector<Outcome> run_acceptance(const Options& options) {
  std::vector<Criterion> chosen;
  for (auto& c : criteria()) {
    if (selected(c, options.filter)) chosen.push_back(std::move(c));
  }
  std::vector<Outcome> out(chosen.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < chosen.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      Check k;
      try {
        chosen[i].run(k, options.tol_scale);
      } catch (const std::exception& e) {
        k.pass = false;
        k.note(std::string("error: ") + e.what());
      }
      out[i] = {chosen[i].id, chosen[i].name, k.pass, k.detail.str(),
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
    }
  };
  unsigned threads = options.threads > 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, chosen.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

std::string format_outcome(const Outcome& o) {
  std::ostringstream s;
  s << (o.pass ? "PASS" : "FAIL") << "  " << o.id << "  " << o.name << "  [" << o.detail << "]";
  return s.str();
}

}  // namespace catenoid::acceptance
