#pragma once

#include <string>
#include <string_view>

namespace catenoid {

enum class Family {
  EuclidCatenoid,  // minimal catenoid in R^{n+1}
  H2xR,            // minimal catenoid in H^2 x R
  HnxR,            // minimal catenoid in H^n x R
  H3Minimal,       // minimal catenoid in H^3
  H3Cousin,        // embedded mean-curvature-one catenoid cousin in H^3
};

// Which family, the surface dimension n where the family has one, and the
// neck parameter a (distance from the profile to the rotation axis).
struct FamilySpec {
  Family family = Family::EuclidCatenoid;
  int n = 2;
  double a = 1.0;
};

enum class ParamKind { Arclength, Graph };

// Throws InvalidArgument for a <= 0, n < 2, or a non-finite a.
void validate(const FamilySpec& spec);

// Effective surface dimension: n for the Euclidean and H^n x R families, 2 otherwise.
int surface_dimension(const FamilySpec& spec);

std::string_view family_name(Family family);
Family parse_family(std::string_view name);
std::string describe(const FamilySpec& spec);

}  // namespace catenoid
