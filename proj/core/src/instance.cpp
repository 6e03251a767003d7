#include "fvs/instance.hpp"

#include <string>

namespace fvs {

ExtendedInstance::ExtendedInstance(Graph graph, int budget, std::span<const Vertex> undeletable)
    : graph_(std::move(graph)),
      budget_(budget),
      in_f_(static_cast<std::size_t>(graph_.max_label()) + 1, 0) {
  for (Vertex v : undeletable) {
    if (!graph_.contains(v)) {
      throw std::invalid_argument("undeletable vertex " + std::to_string(v) + " is not in the graph");
    }
    in_f_[static_cast<std::size_t>(v)] = 1;
  }
  if (!undeletable_set_is_forest()) {
    throw std::invalid_argument("undeletable vertices induce a cycle");
  }
}

void ExtendedInstance::mark_undeletable(Vertex v) {
  if (!graph_.contains(v)) {
    throw ContractViolation("cannot mark dead vertex " + std::to_string(v) + " undeletable");
  }
  in_f_[static_cast<std::size_t>(v)] = 1;
}

void ExtendedInstance::unmark_undeletable(Vertex v) {
  if (v < 1 || v > graph_.max_label()) {
    throw ContractViolation("vertex " + std::to_string(v) + " out of range");
  }
  in_f_[static_cast<std::size_t>(v)] = 0;
}

std::vector<Vertex> ExtendedInstance::undeletable_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v : graph_.live_vertices()) {
    if (in_f_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool ExtendedInstance::undeletable_set_is_forest() const {
  // Union-find over edges inside the set; any edge joining one tree closes a cycle.
  std::vector<Vertex> root(in_f_.size());
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<Vertex>(i);
  auto find = [&](Vertex x) {
    while (root[static_cast<std::size_t>(x)] != x) {
      root[static_cast<std::size_t>(x)] = root[static_cast<std::size_t>(root[static_cast<std::size_t>(x)])];
      x = root[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : graph_.edges()) {
    if (!in_f_[static_cast<std::size_t>(e.u)] || !in_f_[static_cast<std::size_t>(e.v)]) continue;
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a == b) return false;
    root[static_cast<std::size_t>(a)] = b;
  }
  return true;
}

void ExtendedInstance::delete_vertex(Vertex v, DeletionKind kind) {
  if (kind != DeletionKind::kStrip && undeletable(v)) {
    throw ContractViolation("vertex " + std::to_string(v) + " is undeletable");
  }
  if (observer_ != nullptr) observer_->before_delete(graph_, v, kind);
  graph_.delete_vertex(v, journal_);
}

}  // namespace fvs
