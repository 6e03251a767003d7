#include "fvs/graph.hpp"

#include <algorithm>
#include <string>

namespace fvs {

namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::build(Vertex vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) {
    throw std::invalid_argument("negative vertex count");
  }
  const auto slots = static_cast<std::size_t>(vertex_count) + 1;
  Graph g;
  g.adjacency_.resize(slots);
  g.degree_.assign(slots, 0);
  g.alive_.assign(slots, 1);
  g.alive_[0] = 0;
  g.live_vertices_ = static_cast<std::size_t>(vertex_count);
  g.next_.resize(slots);
  g.prev_.resize(slots);
  for (std::size_t v = 0; v < slots; ++v) {
    g.next_[v] = static_cast<Vertex>((v + 1) % slots);
    g.prev_[v] = static_cast<Vertex>((v + slots - 1) % slots);
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count) {
      throw GraphInputError("edge " + pair_text(e) + " has an endpoint outside 1.." +
                                std::to_string(vertex_count),
                            i);
    }
    if (e.u == e.v) {
      throw GraphInputError("edge " + pair_text(e) + " is a self-loop", i);
    }
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }

  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
  }
  for (std::size_t v = 1; v < slots; ++v) {
    const auto& list = g.adjacency_[v];
    const auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      // Report the second occurrence in input order.
      const Edge probe{static_cast<Vertex>(v), *dup};
      std::size_t seen = 0;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if ((e.u == probe.u && e.v == probe.v) || (e.u == probe.v && e.v == probe.u)) {
          if (++seen == 2) {
            throw GraphInputError("edge " + pair_text(e) + " is a duplicate", i);
          }
        }
      }
    }
    g.degree_[v] = static_cast<int>(list.size());
  }
  g.live_edges_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require_live(u);
  require_live(v);
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_vertices_);
  for (Vertex v : live_vertices()) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(live_edges_);
  for (Vertex lu : live_vertices()) {
    const auto u = static_cast<std::size_t>(lu);
    for (Vertex w : adjacency_[u]) {
      if (static_cast<std::size_t>(w) > u && alive_[static_cast<std::size_t>(w)]) {
        out.push_back({static_cast<Vertex>(u), w});
      }
    }
  }
  return out;
}

void Graph::delete_vertex(Vertex v, UndoJournal& journal) {
  require_live(v);
  const auto slot = static_cast<std::size_t>(v);
  UndoJournal::Record record{v, {}};
  record.neighbors.reserve(static_cast<std::size_t>(degree_[slot]));
  for (Vertex w : adjacency_[slot]) {
    const auto ws = static_cast<std::size_t>(w);
    if (alive_[ws]) {
      record.neighbors.push_back(w);
      --degree_[ws];
    }
  }
  live_edges_ -= record.neighbors.size();
  --live_vertices_;
  degree_[slot] = 0;
  alive_[slot] = 0;
  next_[static_cast<std::size_t>(prev_[slot])] = next_[slot];
  prev_[static_cast<std::size_t>(next_[slot])] = prev_[slot];
  journal.records_.push_back(std::move(record));
}

void Graph::restore_last(UndoJournal& journal) {
  if (journal.empty()) {
    throw ContractViolation("restore_last on an empty undo journal");
  }
  UndoJournal::Record& record = journal.records_.back();
  const auto slot = static_cast<std::size_t>(record.vertex);
  if (slot >= alive_.size() || alive_[slot]) {
    throw ContractViolation("undo journal does not match graph at vertex " +
                            std::to_string(record.vertex));
  }
  for (Vertex w : record.neighbors) {
    ++degree_[static_cast<std::size_t>(w)];
  }
  degree_[slot] = static_cast<int>(record.neighbors.size());
  alive_[slot] = 1;
  // LIFO restore: the old neighbors in the live list are exactly as we left them.
  next_[static_cast<std::size_t>(prev_[slot])] = record.vertex;
  prev_[static_cast<std::size_t>(next_[slot])] = record.vertex;
  live_edges_ += record.neighbors.size();
  ++live_vertices_;
  journal.records_.pop_back();
}

void Graph::rollback(UndoJournal& journal, std::size_t journal_size) {
  if (journal_size > journal.size()) {
    throw ContractViolation("rollback target is ahead of the undo journal");
  }
  while (journal.size() > journal_size) {
    restore_last(journal);
  }
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         a.vertices() == b.vertices() && a.edges() == b.edges();
}

std::size_t component_count(const Graph& g) {
  const auto slots = static_cast<std::size_t>(g.max_label()) + 1;
  std::vector<char> seen(slots, 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex root : g.live_vertices()) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    ++components;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::optional<Cycle> find_cycle(const Graph& g) {
  struct Frame {
    Vertex vertex;
    std::size_t next;  // position in the full adjacency list
  };

  const auto slots = static_cast<std::size_t>(g.max_label()) + 1;
  std::vector<char> seen(slots, 0);
  std::vector<Vertex> parent(slots, 0);
  std::vector<Frame> stack;

  for (Vertex root : g.live_vertices()) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const Vertex u = top.vertex;
      const auto& adjacency = g.adjacency_[static_cast<std::size_t>(u)];
      if (top.next == adjacency.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = adjacency[top.next++];
      if (!g.alive_[static_cast<std::size_t>(w)] || w == parent[static_cast<std::size_t>(u)]) continue;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = u;
        stack.push_back({w, 0});
        continue;
      }
      // Back edge u-w: w is an ancestor of u on the DFS stack.
      Cycle cycle;
      for (Vertex x = u; x != w; x = parent[static_cast<std::size_t>(x)]) {
        cycle.vertices.push_back(x);
      }
      cycle.vertices.push_back(w);
      std::reverse(cycle.vertices.begin(), cycle.vertices.end());
      return cycle;
    }
  }
  return std::nullopt;
}

std::int64_t cycle_rank(const Graph& g) {
  return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) +
         static_cast<std::int64_t>(component_count(g));
}

bool is_forest(const Graph& g) { return cycle_rank(g) == 0; }

bool check_degree_sum_identity(const Graph& g) {
  if (g.vertex_count() < 2 || g.edge_count() + 1 != g.vertex_count() || component_count(g) != 1) {
    throw std::invalid_argument("degree-sum identity needs a single tree with at least 2 vertices");
  }
  std::int64_t excess = 0;
  std::int64_t leaves = 0;
  for (Vertex v : g.live_vertices()) {
    const int d = g.degree(v);
    if (d >= 3) excess += d - 2;
    if (d == 1) ++leaves;
  }
  return excess == leaves - 2;
}

}  // namespace fvs
