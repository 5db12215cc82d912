#include "catenoid/family.hpp"

#include <cmath>
#include <sstream>

#include "catenoid/error.hpp"

namespace catenoid {

void validate(const FamilySpec& spec) {
  if (!std::isfinite(spec.a) || spec.a <= 0.0) {
    std::ostringstream msg;
    msg << "neck parameter must be positive and finite, got " << spec.a;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  if ((spec.family == Family::EuclidCatenoid || spec.family == Family::HnxR) && spec.n < 2) {
    throw Error(ErrorKind::InvalidArgument, "dimension n must be at least 2");
  }
  if (spec.n > 64) throw Error(ErrorKind::InvalidArgument, "dimension n is unreasonably large");
}

int surface_dimension(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::EuclidCatenoid:
    case Family::HnxR: return spec.n;
    default: return 2;
  }
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::EuclidCatenoid: return "euclid";
    case Family::H2xR: return "h2xr";
    case Family::HnxR: return "hnxr";
    case Family::H3Minimal: return "h3min";
    case Family::H3Cousin: return "cousin";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "euclid" || name == "rn") return Family::EuclidCatenoid;
  if (name == "h2xr") return Family::H2xR;
  if (name == "hnxr") return Family::HnxR;
  if (name == "h3min" || name == "h3") return Family::H3Minimal;
  if (name == "cousin" || name == "h3cousin") return Family::H3Cousin;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(name) +
                                              "' (expected euclid, h2xr, hnxr, h3min, cousin)");
}

std::string describe(const FamilySpec& spec) {
  std::ostringstream out;
  out << family_name(spec.family);
  if (spec.family == Family::EuclidCatenoid || spec.family == Family::HnxR) out << "(n=" << spec.n << ")";
  out << " a=" << spec.a;
  return out.str();
}

}  // namespace catenoid
