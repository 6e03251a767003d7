#include "fvs/reductions.hpp"

#include <functional>
#include <queue>

namespace fvs {

std::vector<Vertex> strip_low_degree(ExtendedInstance& inst) {
  const Graph& g = inst.graph();
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> candidates;
  for (Vertex v : g.live_vertices()) {
    if (g.degree(v) <= 1) candidates.push(v);
  }

  std::vector<Vertex> removed;
  std::vector<Vertex> touched;
  while (!candidates.empty()) {
    const Vertex v = candidates.top();
    candidates.pop();
    // A vertex may be queued twice; skip stale entries.
    if (!g.contains(v) || g.degree(v) > 1) continue;
    touched.clear();
    for (Vertex w : g.neighbors(v)) touched.push_back(w);
    inst.delete_vertex(v, DeletionKind::kStrip);
    removed.push_back(v);
    for (Vertex w : touched) {
      if (g.degree(w) <= 1) candidates.push(w);
    }
  }
  return removed;
}

std::optional<Vertex> find_forced_vertex(const ExtendedInstance& inst) {
  const Graph& g = inst.graph();
  const auto slots = static_cast<std::size_t>(g.max_label()) + 1;

  // Label the trees of G[F]; 0 means "not undeletable".
  std::vector<int> tree(slots, 0);
  std::vector<Vertex> stack;
  int trees = 0;
  for (Vertex root : g.live_vertices()) {
    if (!inst.undeletable(root) || tree[static_cast<std::size_t>(root)] != 0) continue;
    ++trees;
    tree[static_cast<std::size_t>(root)] = trees;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (inst.undeletable(w) && tree[static_cast<std::size_t>(w)] == 0) {
          tree[static_cast<std::size_t>(w)] = trees;
          stack.push_back(w);
        }
      }
    }
  }
  if (trees == 0) return std::nullopt;

  std::vector<Vertex> last_seen_by(static_cast<std::size_t>(trees) + 1, 0);
  for (Vertex v : g.live_vertices()) {
    if (inst.undeletable(v)) continue;
    for (Vertex w : g.neighbors(v)) {
      const int t = tree[static_cast<std::size_t>(w)];
      if (t == 0) continue;
      if (last_seen_by[static_cast<std::size_t>(t)] == v) return v;
      last_seen_by[static_cast<std::size_t>(t)] = v;
    }
  }
  return std::nullopt;
}

ReductionOutcome reduce_to_fixpoint(ExtendedInstance& inst) {
  ReductionOutcome outcome;
  if (inst.budget() < 0) {
    outcome.status = ReductionStatus::kBudgetExhausted;
    return outcome;
  }
  for (;;) {
    const auto stripped = strip_low_degree(inst);
    outcome.stripped.insert(outcome.stripped.end(), stripped.begin(), stripped.end());
    if (inst.graph().empty()) {
      outcome.status = ReductionStatus::kSolvedEmpty;
      return outcome;
    }
    const auto forced = find_forced_vertex(inst);
    if (!forced) {
      outcome.status = ReductionStatus::kReduced;
      return outcome;
    }
    inst.delete_vertex(*forced, DeletionKind::kForced);
    inst.set_budget(inst.budget() - 1);
    outcome.forced_deletions.push_back(*forced);
    if (inst.budget() < 0) {
      outcome.status = ReductionStatus::kBudgetExhausted;
      return outcome;
    }
  }
}

}  // namespace fvs
