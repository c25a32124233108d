#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecc/blocks.hpp"
#include "ecc/distance.hpp"
#include "ecc/ecc_matrix.hpp"
#include "ecc/exact.hpp"
#include "ecc/graph.hpp"
#include "ecc/spectra.hpp"

namespace ecc {

struct Tolerances {
  JacobiOptions jacobi{};
  /// Zero tolerance for numeric inertia; <= 0 selects default_zero_tol().
  double zero_tol = 0.0;
};

/// Everything the checks need, computed once per graph.
struct GraphAnalysis {
  Graph graph;
  DistanceMatrix dist;
  EccentricityProfile profile;
  BlockDecomposition dec;
  ClassReport cls;
  IntSymMatrix ecc;
  IntPolynomial poly;
  InertiaTriple inertia;
  Spectrum spectrum;
  double norm = 0.0;
  double zero_tol = 0.0;
  std::optional<AssociatedTree> tree;  // present iff in CT
};

/// Throws GraphDisconnected.
GraphAnalysis analyze_graph(const Graph& g, const Tolerances& tol = {});

struct CheckRecord {
  std::string id;
  bool applicable = false;
  std::optional<bool> passed;   // set iff applicable
  std::optional<std::string> witness;  // diagnostics, or the failed precondition

  static CheckRecord skipped(std::string id, std::string reason);
  static CheckRecord result(std::string id, bool ok, std::optional<std::string> witness = {});
  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

// Individual checks. Each throws NotInCT (or the listed error) when its
// precondition fails; verify_all() turns those into skipped records.

/// Centre structure: all of V for K_n, the tree centre for even diameter,
/// the central block for odd diameter.
CheckRecord check_center(const GraphAnalysis& a);

/// Inertia formulas: (1, n-1, 0) complete, (2, 2, n-4) odd, (l, l, n-2l)
/// even >= 4, rank t+1 and one positive eigenvalue for clique stars.
CheckRecord check_inertia(const GraphAnalysis& a);

/// Symmetric spectrum iff odd diameter and |C(G)| = 2, with the coefficient
/// witnesses that rule symmetry out in the other cases.
CheckRecord check_symmetry(const GraphAnalysis& a);

/// The eccentricity matrix is irreducible. Requires n > 1.
CheckRecord check_irreducibility(const GraphAnalysis& a);

/// Associated-tree properties, noncut-vertex eccentricities and interlacing.
/// Throws NotInCT, DiameterTooSmall.
CheckRecord check_structure(const GraphAnalysis& a);

/// Partition block pattern and the invertible principal witness matrix.
/// Throws NotInCT, DiameterTooSmall.
CheckRecord check_partition(const GraphAnalysis& a);

/// Exactly five distinct eigenvalues for odd diameter, |B_C| = 2, n >= 5.
CheckRecord check_five_eigenvalues(const GraphAnalysis& a);

/// Numeric inertia agrees with the exact one.
CheckRecord check_inertia_agreement(const GraphAnalysis& a);

/// 4x4 principal witness with rows (0, 2k+1, 0, k+1), (2k+1, 0, k+1, 0),
/// (0, k+1, 0, 0), (k+1, 0, 0, 0). Throws KOutOfRange for k < 1.
IntSymMatrix witness_matrix_a(std::int64_t k);

/// Closed-form spectrum of witness_matrix_a(k), with q = sqrt(5 + 12k + 8k^2).
Spectrum witness_matrix_a_spectrum(std::int64_t k);

/// [[2k(J-I), (2k-1)(J-I)], [(2k-1)(J-I), O]] of order 2n.
/// Throws ParameterOutOfRange unless n >= 1 and k >= 1.
IntSymMatrix lemma31_matrix(std::int64_t n, std::int64_t k);

struct TheoremReport {
  std::string graph_id;
  std::size_t n = 0;
  std::optional<std::size_t> m;  // unknown for matrix inputs
  std::optional<bool> is_clique_tree;
  std::optional<bool> in_ct;
  std::uint32_t diameter = 0;
  std::uint32_t radius = 0;
  VertexSet center;
  IntPolynomial char_poly;
  InertiaTriple inertia_exact;
  std::vector<double> spectrum;
  bool symmetric = false;
  std::vector<CheckRecord> checks;
  std::vector<std::string> flags;

  std::size_t applicable() const;
  std::size_t failures() const;
  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Runs every check in a fixed order, recording inapplicable ones.
TheoremReport verify_all(const Graph& g, const std::string& graph_id, const Tolerances& tol = {});
TheoremReport verify_analysis(const GraphAnalysis& a, const std::string& graph_id);

/// For bare eccentricity matrices (no graph): exact and numeric spectra,
/// inertia agreement, and whether the inertia fits the pattern the class
/// would predict for the diameter read off the matrix. A deviation is
/// recorded as the flag "outside_ct_inertia_pattern".
TheoremReport verify_matrix(const IntSymMatrix& a, const std::string& graph_id, const Tolerances& tol = {});

/// Runs verify_all over many graphs in parallel; output order follows input.
std::vector<TheoremReport> verify_corpus(const std::vector<std::pair<std::string, Graph>>& graphs,
                                         const Tolerances& tol = {});

}  // namespace ecc
