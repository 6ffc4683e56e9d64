#pragma once

#include <string>

#include "json.hpp"
#include "rlpc/codec.hpp"
#include "rlpc/few_lengths.hpp"
#include "rlpc/reserved_dp.hpp"

namespace rlpc {

// `digits` significant digits, printf "%.*g" style.
std::string format_real(double value, int digits = 6);

nlohmann::json to_json(const Codebook& cb);
nlohmann::json to_json(const Solution& s);
nlohmann::json to_json(const GSearchReport& report);
nlohmann::json to_json(const ThroughputReport& report);

// Inverse of to_json(Codebook); throws ParseError.
Codebook codebook_from_json(const nlohmann::json& doc);

// One "m,upsilon,eta,L,pred_upsilon" row per finite cell of every level whose
// costs were retained. The root row has an empty predecessor.
std::string grid_csv(const CostGrid& grid);

// Human-readable grids for every partial level: rows eta = 0..floor(n/2),
// columns upsilon = 0..n-2, finite cells as "cost (pred)".
std::string render_grids(const CostGrid& grid, const LengthSet& ls, int decimals = 3);

std::string render_solution(const Solution& s, const Pmf& pmf, int digits = 6);
std::string render_g_report(const GSearchReport& report, int digits = 6);

}  // namespace rlpc
