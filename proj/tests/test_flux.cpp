#include <cmath>

#include "catenoid/error.hpp"
#include "catenoid/flux.hpp"
#include "catenoid/profile.hpp"
#include "doctest.h"

using namespace catenoid;

TEST_CASE("sphere volumes") {
  CHECK(sphere_volume(2) == doctest::Approx(2.0 * M_PI));
  CHECK(sphere_volume(3) == doctest::Approx(4.0 * M_PI));
  CHECK(sphere_volume(4) == doctest::Approx(2.0 * M_PI * M_PI));
}

TEST_CASE("first integrals are constant along the profiles") {
  const FamilySpec families[] = {{Family::EuclidCatenoid, 2, 1.0}, {Family::EuclidCatenoid, 4, 0.8},
                                 {Family::H2xR, 2, 0.7},           {Family::HnxR, 3, 0.5},
                                 {Family::H3Minimal, 2, 0.4},      {Family::H3Cousin, 2, 0.9}};
  for (const auto& spec : families) {
    CAPTURE(describe(spec));
    CHECK(flux_constancy(spec, standard_grid(spec)).max_rel_deviation <= 1e-8);
  }
  CHECK(flux_constancy({Family::EuclidCatenoid, 2, 1.0}, standard_grid({})).constant_estimate ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(flux_constancy({Family::HnxR, 3, 0.5}, {0.0, 0.2}).constant_estimate ==
        doctest::Approx(std::pow(std::sinh(0.5), 2)).epsilon(1e-10));
  const double a = 0.9;
  CHECK(flux_constancy({Family::H3Cousin, 2, a}, {0.0, 1.0, 4.0}).constant_estimate ==
        doctest::Approx(0.5 * std::exp(-2.0 * a)).epsilon(1e-10));
  CHECK(flux_constancy({Family::H2xR, 2, 1.0}, {}).samples.empty());
}

TEST_CASE("boundary flux balance") {
  CHECK(boundary_flux_balance({Family::EuclidCatenoid, 2, 1.0}, -1.0, 2.0).residual <= 1e-10);
  CHECK(boundary_flux_balance({Family::EuclidCatenoid, 3, 1.0}, -0.2, 0.9).residual <= 1e-8);
  CHECK(boundary_flux_balance({Family::H3Minimal, 2, 0.3}, -0.5, 3.0).residual <= 1e-8);

  // Cousin: the interior term is 4 pi int cosh(rho) sinh(rho) rho' ds.
  const FamilySpec cousin{Family::H3Cousin, 2, 0.6};
  const Profile p = build_profile(cousin);
  const FluxBalance b = boundary_flux_balance(cousin, -1.0, 2.5);
  const double closed = M_PI * (std::cosh(2.0 * p.radius(2.5)) - std::cosh(2.0 * p.radius(-1.0)));
  CHECK(b.interior == doctest::Approx(closed).epsilon(1e-10));
  CHECK(b.residual <= 1e-6);

  bool out_of_domain = false;
  try {
    boundary_flux_balance({Family::EuclidCatenoid, 3, 1.0}, -0.2, 2.0);
  } catch (const Error& e) {
    out_of_domain = e.kind() == ErrorKind::OutOfDomain;
  }
  CHECK(out_of_domain);
}
