#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "ecc/graph.hpp"

namespace ecc {

/// SplitMix64 (Steele, Lea, Flood): state += 0x9E3779B97F4A7C15, then the
/// output is mixed with shifts 30/27/31 and multipliers 0xBF58476D1CE4E5B9,
/// 0x94D049BB133111EB. Reproducible in any language from the seed alone.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi] by rejection (no modulo bias).
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

private:
  std::uint64_t state_;
};

enum class Shape { TreeRandom, Path, Star };

struct GeneratorSpec {
  std::uint64_t seed = 0;
  std::pair<std::size_t, std::size_t> n_blocks{2, 8};    // inclusive
  std::pair<std::size_t, std::size_t> block_size{2, 4};  // inclusive, >= 2
  Shape shape = Shape::TreeRandom;
};

Graph complete_graph(std::size_t n);

/// Cliques of the given sizes chained at fresh cut-vertices. Needs >= 2
/// sizes, each >= 2; throws ParameterOutOfRange otherwise.
Graph clique_path(std::span<const std::size_t> sizes);

/// Cliques of the given sizes sharing vertex 0. Same preconditions.
Graph clique_star(std::span<const std::size_t> sizes);

/// A skeleton tree on t + 1 nodes (Pruefer sequence, path or star) whose
/// edges are each blown up into a clique of random size; labels are then
/// shuffled. Every block holds exactly two skeleton nodes, so the result
/// is a clique tree with at most two cut-vertices per block.
Graph random_ct_clique_tree(const GeneratorSpec& spec);

/// Spec used for the verification corpus: shape and ranges derived from
/// the seed.
GeneratorSpec corpus_spec(std::uint64_t seed);

/// corpus_spec(seed) graph, re-drawn from derived seeds until its order
/// lies in [min_order, max_order].
Graph corpus_instance(std::uint64_t seed, std::size_t min_order = 5, std::size_t max_order = 40);

}  // namespace ecc
