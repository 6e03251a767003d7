#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

/// Largest live vertex count the brute-force oracle accepts.
inline constexpr std::size_t kOracleVertexLimit = 25;

/// Smallest S of live vertices outside `forbidden` with G - S a forest,
/// searching subsets by increasing size then lexicographic order. Returns
/// nullopt when `forbidden` itself contains a cycle.
/// Throws std::invalid_argument above kOracleVertexLimit live vertices.
std::optional<std::vector<Vertex>> brute_force_min_fvs(const Graph& g,
                                                       std::span<const Vertex> forbidden = {});

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister. Unlike
/// std::uniform_int_distribution the sequence is the same on every
/// standard library.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound);

/// G(n, m): m distinct edges sampled uniformly without replacement.
/// Throws std::invalid_argument if m exceeds n(n-1)/2.
Graph gen_random_graph(Vertex n, std::size_t m, std::uint64_t seed);

struct PlantedInstance {
  Graph graph;
  int budget;
  /// The k planted vertices; removing them leaves a tree.
  std::vector<Vertex> planted;
};

/// Random tree on n - k vertices plus k vertices each joined to three to
/// five distinct tree vertices (fewer if the tree is smaller), with labels
/// shuffled. Throws std::invalid_argument if k < 0 or k >= n.
PlantedInstance gen_planted(Vertex n, int k, std::uint64_t seed);

}  // namespace fvs
