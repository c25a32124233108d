#pragma once

#include <json.hpp>

#include <string>

#include "ecc/theorems.hpp"

namespace ecc::report {

// JSON schema:
// { graph_id, n, m, class: {is_clique_tree, in_ct, diameter, radius, center},
//   char_poly: [decimal strings, lowest degree first], inertia_exact: [p, m, z],
//   spectrum: [floats, 12 significant digits], symmetric, flags: [...],
//   checks: [{id, applicable, passed, witness}] }

nlohmann::json to_json(const TheoremReport& r);
TheoremReport from_json(const nlohmann::json& j);

/// Rounds to 12 significant digits.
double round12(double x);

std::string csv_header();
std::string to_csv_row(const TheoremReport& r);

/// Plain-text summary; the polynomial appears in factored form when it
/// matches a stored golden factorisation.
std::string to_text(const TheoremReport& r);

}  // namespace ecc::report
