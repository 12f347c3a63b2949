#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/interval.hpp"

namespace ndagg::app {

// Up to five decimals, trailing zeros trimmed: 0.45788, 0.3059, 1.
std::string formatNumber(double v);
std::string formatTuple(const NDimInterval& x);
std::string formatTuple(const std::vector<double>& x);

// Fixed-width text table; the first row is the header.
std::string renderTable(const std::vector<std::vector<std::string>>& rows);

// Table views of the JSON documents the CLI emits.
std::string rankTable(const nlohmann::json& rank_response);
std::string collectiveTable(const nlohmann::json& collective_response);
std::string reportsTable(const nlohmann::json& reports);

}  // namespace ndagg::app
