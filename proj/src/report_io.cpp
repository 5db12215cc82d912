#include "catenoid/report_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace catenoid {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  auto res = std::to_chars(buf, buf + sizeof buf, h, 16);
  std::string s(buf, res.ptr);
  return std::string(16 - s.size(), '0') + s;
}

std::string to_csv(const Table& table, std::string_view config_hash) {
  std::ostringstream out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << "\n# config_hash=" << config_hash << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_real(row[i]);
    out << "\n";
  }
  return out.str();
}

namespace {

// JSON has no infinities; they are written as strings.
nlohmann::json real(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

template <class T>
nlohmann::json optional_real(const std::optional<T>& x) {
  return x ? real(*x) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) obj[table.columns[i]] = real(row[i]);
    rows.push_back(obj);
  }
  return rows;
}

nlohmann::json to_json(const StabilityReport& r) {
  nlohmann::json j;
  j["family"] = std::string(family_name(r.spec.family));
  j["n"] = surface_dimension(r.spec);
  j["a"] = r.spec.a;
  j["index"] = r.index;
  j["E"] = optional_real(r.E_value);
  j["z"] = optional_real(r.z);
  j["ell"] = optional_real(r.ell);
  j["lindelof"] = r.lindelof;
  nlohmann::json certs = nlohmann::json::array();
  for (const auto& c : r.certificates) {
    certs.push_back({{"name", c.name}, {"value", real(c.value)}, {"holds", c.holds}, {"meaning", c.meaning}});
  }
  j["certificates"] = certs;
  j["notes"] = r.notes;
  return j;
}

}  // namespace catenoid
