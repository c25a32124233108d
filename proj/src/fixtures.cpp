#include "ecc/fixtures.hpp"

#include <string>

#include "ecc/error.hpp"

namespace ecc {

namespace {

void clique(std::vector<Edge>& edges, std::initializer_list<unsigned> labels) {
  std::vector<unsigned> l(labels);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) edges.emplace_back(v(l[i]), v(l[j]));
}

// Seven blocks around the centre v6, diameter 4.
Graph g_fig1() {
  std::vector<Edge> e;
  clique(e, {1, 2, 3, 4, 5});
  clique(e, {5, 6});
  clique(e, {6, 7, 8});
  clique(e, {6, 9, 10});
  clique(e, {6, 11});
  clique(e, {11, 12});
  clique(e, {11, 13, 14, 15});
  return Graph::build(15, e);
}

std::vector<Edge> g1_edges() {
  std::vector<Edge> e;
  clique(e, {1, 2});
  clique(e, {2, 3, 4});
  clique(e, {2, 5, 6});
  clique(e, {2, 7});
  clique(e, {7, 11});
  clique(e, {7, 8, 9, 10});
  return e;
}

Graph g1() { return Graph::build(11, g1_edges()); }

// G1 plus v2v11: the central block becomes the triangle {v2, v7, v11}.
Graph g2() {
  auto e = g1_edges();
  clique(e, {2, 11});
  return Graph::build(11, e);
}

Graph triangle_pendants() {
  return build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

IntSymMatrix h1_matrix() {
  return IntSymMatrix::from_rows({
      {0, 0, 3, 0, 2, 2, 3, 3, 3},
      {0, 0, 3, 0, 2, 2, 3, 3, 3},
      {3, 3, 0, 2, 0, 2, 3, 3, 3},
      {0, 0, 2, 0, 0, 0, 2, 2, 2},
      {2, 2, 0, 0, 0, 0, 2, 2, 2},
      {2, 2, 2, 0, 0, 0, 0, 0, 0},
      {3, 3, 3, 2, 2, 0, 0, 0, 0},
      {3, 3, 3, 2, 2, 0, 0, 0, 0},
      {3, 3, 3, 2, 2, 0, 0, 0, 0},
  });
}

IntSymMatrix h2_matrix() {
  return IntSymMatrix::from_rows({
      {0, 0, 3, 0, 2, 3, 3, 2, 2},
      {0, 0, 3, 0, 2, 3, 3, 2, 2},
      {3, 3, 0, 2, 0, 3, 3, 2, 2},
      {0, 0, 2, 0, 0, 2, 2, 0, 0},
      {2, 2, 0, 0, 0, 2, 2, 0, 0},
      {3, 3, 3, 2, 2, 0, 3, 0, 2},
      {3, 3, 3, 2, 2, 3, 0, 2, 0},
      {2, 2, 2, 0, 0, 0, 2, 0, 0},
      {2, 2, 2, 0, 0, 2, 0, 0, 0},
  });
}

IntPolynomial x_pow(std::size_t k) { return IntPolynomial::monomial(k); }

}  // namespace

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog{
      {"G_fig1", "g_fig1.edges", "clique tree on 15 vertices, 7 blocks, centre v6, diameter 4; labels v_i -> i-1"},
      {"G1", "g1.edges", "clique tree on 11 vertices, 6 blocks, central block {v2,v7}, diameter 3; labels v_i -> i-1"},
      {"G2", "g2.edges", "G1 plus the edge v2v11, central block {v2,v7,v11}; labels v_i -> i-1"},
      {"G3", "g3.edges", "same graph as G_fig1; labels v_i -> i-1"},
      {"H1_matrix", "h1.matrix", "eccentricity matrix of a 9-vertex clique tree with a block holding three cut-vertices"},
      {"H2_matrix", "h2.matrix", "eccentricity matrix of a 9-vertex clique tree with a block holding four cut-vertices"},
      {"triangle_pendants", "triangle_pendants.edges", "triangle with one pendant edge per vertex"},
  };
  return catalog;
}

FixtureValue fixture(std::string_view name) {
  if (name == "G_fig1" || name == "G3") return g_fig1();
  if (name == "G1") return g1();
  if (name == "G2") return g2();
  if (name == "H1_matrix") return h1_matrix();
  if (name == "H2_matrix") return h2_matrix();
  if (name == "triangle_pendants") return triangle_pendants();
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

const std::vector<GoldenFactorization>& golden_factorizations() {
  static const std::vector<GoldenFactorization> golden = [] {
    std::vector<GoldenFactorization> out;
    out.push_back({"G1", "x^7 (x^4 - 216 x^2 + 320)", x_pow(7) * IntPolynomial{320, 0, -216, 0, 1}});
    out.push_back({"G2", "x^7 (x^4 - 199 x^2 - 360 x + 720)", x_pow(7) * IntPolynomial{720, -360, -199, 0, 1}});
    out.push_back({"G3", "x^11 (x - 2) (x + 18) (x^2 - 16 x - 356)",
                   x_pow(11) * IntPolynomial{-2, 1} * IntPolynomial{18, 1} * IntPolynomial{-356, -16, 1}});
    out.push_back({"H1_matrix", "-x^3 (-1536 + 1728 x + 528 x^2 - 588 x^3 - 147 x^4 + x^6)",
                   (-(x_pow(3) * IntPolynomial{-1536, 1728, 528, -588, -147, 0, 1})).sign_normalized()});
    out.push_back({"H2_matrix", "-(-1 + x)^2 x (4 + x)^2 (288 - 144 x - 106 x^2 - 6 x^3 + x^4)",
                   (-(IntPolynomial{-1, 1} * IntPolynomial{-1, 1} * x_pow(1) * IntPolynomial{4, 1} *
                      IntPolynomial{4, 1} * IntPolynomial{288, -144, -106, -6, 1}))
                       .sign_normalized()});
    return out;
  }();
  return golden;
}

std::optional<std::string> golden_factored_form(const IntPolynomial& p) {
  const auto target = p.sign_normalized();
  for (const auto& g : golden_factorizations())
    if (g.expanded == target) return std::string(g.text);
  return std::nullopt;
}

}  // namespace ecc
