#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvs {

/// External vertex label. Labels are positive; a graph built with `n`
/// vertices uses labels 1..n.
using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown when an internal precondition is broken. Signals a bug or
/// corrupted state, never bad user input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown by `Graph::build` on malformed edge lists.
class GraphInputError : public std::invalid_argument {
 public:
  GraphInputError(const std::string& what, std::size_t edge_index)
      : std::invalid_argument(what), edge_index_(edge_index) {}

  /// Zero-based position of the offending pair in the input list.
  std::size_t edge_index() const noexcept { return edge_index_; }

 private:
  std::size_t edge_index_;
};

/// A simple cycle: consecutive vertices (cyclically) are adjacent.
struct Cycle {
  std::vector<Vertex> vertices;
};

class Graph;

/// Forward range over live vertices in ascending order. Invalidated by any
/// deletion or restore.
class LiveVertexRange {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    Vertex operator*() const { return current_; }
    iterator& operator++() {
      current_ = (*next_)[static_cast<std::size_t>(current_)];
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.current_ == b.current_; }

   private:
    friend class LiveVertexRange;
    iterator(const std::vector<Vertex>* next, Vertex current) : next_(next), current_(current) {}
    const std::vector<Vertex>* next_ = nullptr;
    Vertex current_ = 0;
  };

  iterator begin() const { return {next_, next_->empty() ? 0 : (*next_)[0]}; }
  iterator end() const { return {next_, 0}; }

 private:
  friend class Graph;
  explicit LiveVertexRange(const std::vector<Vertex>* next) : next_(next) {}
  const std::vector<Vertex>* next_;
};

/// LIFO log of vertex deletions. Only `Graph` writes to it.
class UndoJournal {
 public:
  struct Record {
    Vertex vertex;
    std::vector<Vertex> neighbors;  // live neighbors at deletion time
  };

  bool empty() const noexcept { return records_.empty(); }
  std::size_t size() const noexcept { return records_.size(); }
  const Record& back() const { return records_.back(); }

 private:
  friend class Graph;
  std::vector<Record> records_;
};

/// Simple undirected graph with reversible vertex deletion.
///
/// The full adjacency of the graph as built is kept in sorted per-vertex
/// lists; deletion only flips a liveness flag, adjusts degree counters and
/// unlinks the vertex from a circular list of live labels. Restores are
/// LIFO, so relinking needs no search: neighbor and vertex iteration stay in
/// ascending label order and a deletion is undone in O(deg).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on labels 1..vertex_count. Rejects self-loops,
  /// duplicate pairs (either orientation) and out-of-range endpoints.
  static Graph build(Vertex vertex_count, std::span<const Edge> edges);

  /// Largest label this graph can hold (live or not).
  Vertex max_label() const noexcept {
    return alive_.empty() ? 0 : static_cast<Vertex>(alive_.size()) - 1;
  }

  std::size_t vertex_count() const noexcept { return live_vertices_; }
  std::size_t edge_count() const noexcept { return live_edges_; }
  bool empty() const noexcept { return live_vertices_ == 0; }

  bool contains(Vertex v) const noexcept {
    return v > 0 && v <= max_label() && alive_[static_cast<std::size_t>(v)];
  }

  int degree(Vertex v) const {
    require_live(v);
    return degree_[static_cast<std::size_t>(v)];
  }

  /// Live neighbors of `v` in ascending order.
  auto neighbors(Vertex v) const {
    require_live(v);
    return adjacency_[static_cast<std::size_t>(v)] |
           std::views::filter([this](Vertex w) { return alive_[static_cast<std::size_t>(w)] != 0; });
  }

  bool adjacent(Vertex u, Vertex v) const;

  /// Live vertices in ascending order.
  std::vector<Vertex> vertices() const;
  LiveVertexRange live_vertices() const noexcept { return LiveVertexRange(&next_); }

  /// Live edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  void delete_vertex(Vertex v, UndoJournal& journal);
  void restore_last(UndoJournal& journal);

  /// Restores deletions until the journal is back to `journal_size` records.
  void rollback(UndoJournal& journal, std::size_t journal_size);

  /// Equality as labeled graphs: same live vertices and same live edges.
  friend bool operator==(const Graph& a, const Graph& b);

  friend std::optional<Cycle> find_cycle(const Graph& g);

 private:
  void require_live(Vertex v) const {
    if (!contains(v)) {
      throw ContractViolation("vertex " + std::to_string(v) + " is not live");
    }
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<int> degree_;
  std::vector<char> alive_;
  // Circular doubly linked list of live labels; slot 0 is the sentinel.
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
  std::size_t live_vertices_ = 0;
  std::size_t live_edges_ = 0;
};

std::size_t component_count(const Graph& g);

/// Depth-first search from the smallest live label, neighbors in ascending
/// order; returns the first cycle closed by a back edge.
std::optional<Cycle> find_cycle(const Graph& g);

bool is_forest(const Graph& g);

/// m - n + c: the number of vertices any feedback vertex set must contain
/// when every vertex on a cycle has degree two.
std::int64_t cycle_rank(const Graph& g);

/// For a tree on >= 2 vertices, checks that the excess degree of the
/// branching vertices equals the number of leaves minus two.
/// Throws std::invalid_argument if `g` is not such a tree.
bool check_degree_sum_identity(const Graph& g);

}  // namespace fvs
