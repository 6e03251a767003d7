#include "fvs/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace fvs {

namespace {

// Forest test that does not share code with the graph module.
bool forest_without(const std::vector<Edge>& edges, const std::vector<char>& removed, std::size_t slots,
                    std::vector<Vertex>& root) {
  root.resize(slots);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : edges) {
    if (removed[static_cast<std::size_t>(e.u)] || removed[static_cast<std::size_t>(e.v)]) continue;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    root[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Vertex>> brute_force_min_fvs(const Graph& g, std::span<const Vertex> forbidden) {
  if (g.vertex_count() > kOracleVertexLimit) {
    throw std::invalid_argument("oracle limited to " + std::to_string(kOracleVertexLimit) + " vertices, got " +
                                std::to_string(g.vertex_count()));
  }
  const auto slots = static_cast<std::size_t>(g.max_label()) + 1;
  std::vector<char> is_forbidden(slots, 0);
  for (Vertex v : forbidden) {
    if (v > 0 && static_cast<std::size_t>(v) < slots) is_forbidden[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<Vertex> candidates;
  for (Vertex v : g.vertices()) {
    if (!is_forbidden[static_cast<std::size_t>(v)]) candidates.push_back(v);
  }

  const std::vector<Edge> edges = g.edges();
  std::vector<char> removed(slots, 0);
  std::vector<Vertex> scratch;
  const std::size_t c = candidates.size();

  for (std::size_t size = 0; size <= c; ++size) {
    // Lexicographic combinations of candidate positions.
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      for (std::size_t i : pick) removed[static_cast<std::size_t>(candidates[i])] = 1;
      const bool ok = forest_without(edges, removed, slots, scratch);
      for (std::size_t i : pick) removed[static_cast<std::size_t>(candidates[i])] = 0;
      if (ok) {
        std::vector<Vertex> out;
        out.reserve(size);
        for (std::size_t i : pick) out.push_back(candidates[i]);
        return out;
      }
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == c - size + (pos - 1)) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t j = pos; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("draw_below with zero bound");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - (kMax % bound + 1) % bound;  // accept x <= limit
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

Graph gen_random_graph(Vertex n, std::size_t m, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  const auto nn = static_cast<std::uint64_t>(n);
  const std::uint64_t pairs = nn * (nn > 0 ? nn - 1 : 0) / 2;
  if (m > pairs) {
    throw std::invalid_argument("cannot place " + std::to_string(m) + " edges on " + std::to_string(n) +
                                " vertices");
  }
  std::vector<Edge> all;
  all.reserve(pairs);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) all.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + draw_below(rng, all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(m);
  std::sort(all.begin(), all.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return Graph::build(n, all);
}

PlantedInstance gen_planted(Vertex n, int k, std::uint64_t seed) {
  if (k < 0 || k >= n) {
    throw std::invalid_argument("planted instance needs 0 <= k < n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  std::mt19937_64 rng(seed);
  const Vertex tree_size = n - k;

  // Labels are assigned through a random permutation so the planted set is
  // not recognisable by position.
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 1);
  for (std::size_t i = label.size(); i > 1; --i) {
    std::swap(label[i - 1], label[draw_below(rng, i)]);
  }
  auto L = [&](Vertex internal) { return label[static_cast<std::size_t>(internal)]; };

  std::vector<Edge> edges;
  for (Vertex v = 1; v < tree_size; ++v) {
    const auto parent = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(v)));
    edges.push_back({L(parent), L(v)});
  }

  PlantedInstance out{{}, k, {}};
  std::vector<Vertex> pool(static_cast<std::size_t>(tree_size));
  for (Vertex p = tree_size; p < n; ++p) {
    const auto wanted = static_cast<std::size_t>(3 + draw_below(rng, 3));
    const std::size_t degree = std::min(wanted, pool.size());
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < degree; ++i) {
      std::swap(pool[i], pool[i + draw_below(rng, pool.size() - i)]);
      edges.push_back({L(p), L(pool[i])});
    }
    out.planted.push_back(L(p));
  }
  std::sort(out.planted.begin(), out.planted.end());
  out.graph = Graph::build(n, edges);
  return out;
}

}  // namespace fvs
