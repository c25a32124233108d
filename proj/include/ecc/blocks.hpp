#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ecc/distance.hpp"
#include "ecc/graph.hpp"

namespace ecc {

/// Classification by number of cut-vertices in the block: 1, 2, 0 or >= 3.
enum class BlockKind { Leaf, Bridge, Sole, Other };

struct BlockDecomposition {
  std::vector<VertexSet> blocks;       // sorted, lexicographic order
  std::vector<std::size_t> block_edges;  // edges of G inside each block
  std::vector<BlockKind> kind;
  VertexSet cut_vertices;
  std::vector<std::vector<std::size_t>> vertex_blocks;  // blocks containing each vertex

  bool is_cut(Vertex v) const;
  std::size_t count(BlockKind k) const;
  /// Cut-vertices of block b.
  VertexSet cuts_of(std::size_t b) const;
  bool is_complete(std::size_t b) const;
  /// Index of the unique block containing both u and v (u != v), if any.
  std::optional<std::size_t> block_with(Vertex u, Vertex v) const;
};

/// Biconnected components by an iterative lowpoint DFS.
BlockDecomposition decompose(const Graph& g);

enum class Parity { Even, Odd };

struct ClassReport {
  bool is_clique_tree = false;
  bool in_ct = false;       // clique tree with <= 2 cut-vertices per block
  bool in_ct_ge2 = false;   // ... and diameter >= 2
  Parity diameter_parity = Parity::Even;
  std::uint32_t diameter = 0;
  std::size_t num_blocks = 0;
};

/// Clique tree with at most two cut-vertices per block; no diameter check.
bool in_ct(const BlockDecomposition& dec);

/// Block-completeness test. For n <= 12 the diamond-free chordal
/// characterisation is evaluated as well and a disagreement throws
/// std::logic_error.
ClassReport classify(const Graph& g, const BlockDecomposition& dec, const EccentricityProfile& profile);
ClassReport classify(const Graph& g);

/// Independent recogniser: chordal and no induced K4 minus an edge.
/// O(n^4); intended for small graphs.
bool is_diamond_free_chordal(const Graph& g);

struct AssociatedTree {
  VertexSet vertex_subset;   // tree vertex i is vertex_subset[i] in G
  VertexSet leaf_representatives;  // minimal-label noncut vertex per leaf-block
  Graph tree;
};

/// Induced subgraph on the cut-vertices plus the minimal-label noncut vertex
/// of every leaf-block; K2 on {0, 1} for a complete graph. Throws NotInCT.
AssociatedTree associated_tree(const Graph& g, const BlockDecomposition& dec);

/// Neighbours of the unique centre lying on some diametral path.
/// Throws OddDiameter or MultipleCenters.
VertexSet diametrally_distinguished(const Graph& g, const DistanceMatrix& d,
                                    const EccentricityProfile& profile);

/// Block containing both centres of the associated tree. Throws NotInCT,
/// EvenDiameter.
VertexSet central_block(const Graph& g, const BlockDecomposition& dec,
                        const EccentricityProfile& profile);

/// Odd diameter 2k+1. Removing the central block's edges leaves components
/// T1 (containing z1) and T2 (containing z2); W1/W2 are the vertices of T1
/// at distance k / below k from z1, W3/W4 likewise for T2 and z2, and W5 is
/// the rest of the central block.
struct OddPartition {
  std::array<VertexSet, 5> w;
  std::uint32_t k = 0;
  Vertex z1 = 0;
  Vertex z2 = 0;
  VertexSet central_block;
};

/// Throws NotInCT, EvenDiameter, DiameterTooSmall (complete graphs).
OddPartition odd_partition(const Graph& g, const BlockDecomposition& dec, const DistanceMatrix& d,
                           const EccentricityProfile& profile);

/// Even diameter 2k, k >= 2, centre z, distinguished neighbours w_1..w_l.
/// parts[i] (i < l) are the far vertices of T_i, parts[l + i] the rest of
/// T_i, parts[2l] everything else.
struct EvenPartition {
  std::vector<VertexSet> parts;
  std::size_t l = 0;
  std::uint32_t k = 0;
  Vertex center = 0;
  VertexSet distinguished;
};

/// Throws NotInCT, OddDiameter, DiameterTooSmall.
EvenPartition even_partition(const Graph& g, const BlockDecomposition& dec, const DistanceMatrix& d,
                             const EccentricityProfile& profile);

}  // namespace ecc
