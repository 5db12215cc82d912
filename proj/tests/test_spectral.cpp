#include <cmath>

#include "catenoid/error.hpp"
#include "catenoid/profile.hpp"
#include "catenoid/spectral.hpp"
#include "catenoid/stability.hpp"
#include "doctest.h"

using namespace catenoid;

namespace {

constexpr double kXi0 = 1.19967864025773;

bool throws_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

double first_eigenvalue(const FamilySpec& spec, double lo, double hi, int N = 4001) {
  return lambda1(assemble(spec, lo, hi, N)).lambda1;
}

}  // namespace

TEST_CASE("catenoid in R^3: stability of symmetric domains") {
  const FamilySpec r3{Family::EuclidCatenoid, 2, 1.0};
  CHECK(std::fabs(first_eigenvalue(r3, -kXi0, kXi0)) <= 1e-3);
  CHECK(first_eigenvalue(r3, -kXi0 / 2, kXi0 / 2) > 0.0);
  CHECK(first_eigenvalue(r3, -2 * kXi0, 2 * kXi0) < 0.0);

  const SLProblem p = assemble(r3, -1.0, 1.0, 11);
  for (int i = 0; i < p.N; ++i) {
    CHECK(p.potential[i] == doctest::Approx(2.0 / std::pow(std::cosh(p.s[i]), 2)).epsilon(1e-14));
  }
}

TEST_CASE("recovered potential matches the geometry") {
  // Q = |A|^2 + Ric(N, N): Ric = -2 in H^3 and -(dh/ds)^2 in H^2 x R.
  for (const FamilySpec spec : {FamilySpec{Family::H3Minimal, 2, 0.5}, FamilySpec{Family::H3Cousin, 2, 0.7},
                                FamilySpec{Family::H2xR, 2, 1.0}}) {
    CAPTURE(describe(spec));
    const Profile prof = build_profile(spec);
    const SLProblem p = assemble(spec, -2.0, 2.0, 41);
    for (int i = 1; i + 1 < p.N; ++i) {
      const double s = p.s[i];
      const double ric = spec.family == Family::H2xR ? -std::pow(prof.at(s).d_height, 2) : -2.0;
      const double expected = principal_curvatures(prof, s).norm2() + ric;
      CHECK(std::fabs(p.potential[i] - expected) <= 1e-7 * std::max(1.0, std::fabs(expected)));
    }
  }
}

TEST_CASE("eigenvalues decrease under inclusion") {
  const FamilySpec spec{Family::H2xR, 2, 1.0};
  const double l1 = first_eigenvalue(spec, -0.5, 0.5, 2001);
  const double l2 = first_eigenvalue(spec, -1.0, 1.2, 2001);
  const double l3 = first_eigenvalue(spec, -1.5, 2.0, 2001);
  CHECK(l1 > l2);
  CHECK(l2 > l3);
}

TEST_CASE("first eigenvector has one sign") {
  const SpectralResult r = lambda1(assemble({Family::H3Minimal, 2, 0.2}, -0.3, 0.4, 1001));
  CHECK(r.eigenvector.front() == 0.0);
  CHECK(r.eigenvector.back() == 0.0);
  for (std::size_t i = 1; i + 1 < r.eigenvector.size(); ++i) CHECK(r.eigenvector[i] > 0.0);
}

TEST_CASE("index on intervals") {
  const FamilySpec spec{Family::H3Minimal, 2, 0.2};
  const double z = *variation_zero(spec);
  CHECK(index_on_interval(assemble(spec, -0.9 * z, 0.9 * z)) == 0);
  CHECK(index_on_interval(assemble(spec, -kInf, kInf)) == 1);
  CHECK(index_on_interval(assemble({Family::H3Minimal, 2, 1.0}, -kInf, kInf)) == 0);
  CHECK(truncation_sensitivity(spec, -kInf, kInf) <= 1e-4);
  CHECK(truncation_sensitivity(spec, -1.0, 1.0) == 0.0);
  const SLProblem full = assemble(spec, -kInf, kInf, 201);
  REQUIRE(full.truncation.has_value());
  CHECK(full.hi == doctest::Approx(*full.truncation));
}

TEST_CASE("assembly input checks") {
  const FamilySpec r3{Family::EuclidCatenoid, 2, 1.0};
  CHECK(assemble(r3, -1.0, 1.0, 3).N == 3);
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { assemble(r3, -1.0, 1.0, 2); }));
  CHECK(throws_kind(ErrorKind::InvalidArgument, [&] { assemble(r3, 1.0, -1.0, 11); }));
  CHECK(throws_kind(ErrorKind::OutOfDomain, [] { assemble({Family::EuclidCatenoid, 3, 1.0}, -2.0, 2.0, 11); }));
  CHECK(assemble({Family::H2xR, 2, 1.0}, -1.0, 1.0, 101).recovery_mismatch <= 1e-6);
}
