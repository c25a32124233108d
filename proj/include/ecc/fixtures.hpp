#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ecc/exact.hpp"
#include "ecc/graph.hpp"
#include "ecc/int_matrix.hpp"

namespace ecc {

using FixtureValue = std::variant<Graph, IntSymMatrix>;

struct FixtureInfo {
  std::string_view name;
  std::string_view file;         // under fixtures/
  std::string_view description;
};

/// Figure labels v_i are stored as vertex i - 1 in every fixture.
const std::vector<FixtureInfo>& fixture_catalog();

/// G_fig1, G1, G2, G3, H1_matrix, H2_matrix, triangle_pendants.
/// Throws UnknownFixture.
FixtureValue fixture(std::string_view name);

/// 0-based vertex for figure label v_i.
constexpr Vertex v(unsigned i) { return i - 1; }

struct GoldenFactorization {
  std::string_view fixture;
  std::string_view text;      // factored form
  IntPolynomial expanded;     // sign-normalised expansion
};

const std::vector<GoldenFactorization>& golden_factorizations();

/// Factored text whose expansion equals p up to sign, if one is stored.
std::optional<std::string> golden_factored_form(const IntPolynomial& p);

}  // namespace ecc
