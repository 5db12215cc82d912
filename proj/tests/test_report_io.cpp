#include <string>

#include "catenoid/report_io.hpp"
#include "doctest.h"

using namespace catenoid;

TEST_CASE("number formatting") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_real(1e-20) == "1e-20");
  CHECK(format_real(kInf) == "inf");
  CHECK(format_real(-kInf) == "-inf");
  CHECK(format_real(NAN) == "nan");
}

TEST_CASE("FNV-1a reference vectors") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(hash_hex(0x1ULL) == "0000000000000001");
}

TEST_CASE("CSV and JSON tables") {
  const Table t{{"a", "E0"}, {{0.1, 1.5}, {0.2, -kInf}}};
  CHECK(to_csv(t, "abc") == "a,E0\n# config_hash=abc\n0.1,1.5\n0.2,-inf\n");
  const auto j = to_json(t);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["E0"].get<double>() == 1.5);
  CHECK(j[1]["E0"].get<std::string>() == "-inf");
}

TEST_CASE("stability report JSON") {
  StabilityReport r;
  r.spec = {Family::H3Cousin, 2, 1.0};
  r.index = 1;
  r.z = 2.0;
  r.lindelof = true;
  r.certificates.push_back({"c", 1.0, true, "m"});
  const auto j = to_json(r);
  CHECK(j["family"] == "cousin");
  CHECK(j["lindelof"] == true);
  CHECK(j["ell"].is_null());
  CHECK(j["z"] == 2.0);
  CHECK(j["certificates"][0]["holds"] == true);
}
