#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fvs/graph.hpp"

namespace fvs {

/// Why a vertex left the graph.
enum class DeletionKind {
  kStrip,   // degree <= 1, never part of a solution
  kForced,  // two neighbors in one undeletable tree
  kPivot,   // branch that puts the pivot into the solution
  kCycle,   // degree-two base case
};

/// Sees every deletion made through an ExtendedInstance, just before the
/// graph changes.
class DeletionObserver {
 public:
  virtual ~DeletionObserver() = default;
  virtual void before_delete(const Graph& g, Vertex v, DeletionKind kind) = 0;
};

/// A graph, a remaining deletion budget and a set of undeletable vertices.
///
/// Undeletable membership is a per-label flag; a deleted vertex is not in
/// the set while it is dead and rejoins it when a rollback revives it.
class ExtendedInstance {
 public:
  /// Throws std::invalid_argument if an undeletable vertex is not live or
  /// the undeletable set contains a cycle.
  ExtendedInstance(Graph graph, int budget, std::span<const Vertex> undeletable = {});

  ExtendedInstance(const ExtendedInstance&) = delete;
  ExtendedInstance& operator=(const ExtendedInstance&) = delete;
  ExtendedInstance(ExtendedInstance&&) = default;
  ExtendedInstance& operator=(ExtendedInstance&&) = default;

  const Graph& graph() const noexcept { return graph_; }

  int budget() const noexcept { return budget_; }
  void set_budget(int budget) noexcept { budget_ = budget; }

  bool undeletable(Vertex v) const noexcept {
    return graph_.contains(v) && in_f_[static_cast<std::size_t>(v)] != 0;
  }
  void mark_undeletable(Vertex v);
  void unmark_undeletable(Vertex v);
  std::vector<Vertex> undeletable_vertices() const;
  bool undeletable_set_is_forest() const;

  void delete_vertex(Vertex v, DeletionKind kind);

  std::size_t checkpoint() const noexcept { return journal_.size(); }
  void rollback(std::size_t checkpoint) { graph_.rollback(journal_, checkpoint); }

  /// Non-owning; pass nullptr to detach.
  void set_observer(DeletionObserver* observer) noexcept { observer_ = observer; }

 private:
  Graph graph_;
  UndoJournal journal_;
  int budget_;
  std::vector<char> in_f_;
  DeletionObserver* observer_ = nullptr;
};

}  // namespace fvs
