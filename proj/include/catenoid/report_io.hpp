#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catenoid/stability.hpp"
#include "json.hpp"

namespace catenoid {

// 15 significant digits, '.' as decimal separator regardless of locale.
std::string format_real(double x);

std::uint64_t fnv1a64(std::string_view data);
std::string hash_hex(std::uint64_t h);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header row, then a "# config_hash=..." comment line, then the rows.
std::string to_csv(const Table& table, std::string_view config_hash);

nlohmann::json to_json(const Table& table);
nlohmann::json to_json(const StabilityReport& report);

}  // namespace catenoid
