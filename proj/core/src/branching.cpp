#include "fvs/branching.hpp"

#include <algorithm>
#include <string>

#include "fvs/base_solver.hpp"
#include "fvs/reductions.hpp"

namespace fvs {

Solution Solution::found(std::vector<Vertex> vertices) {
  Solution s;
  s.found_ = true;
  std::sort(vertices.begin(), vertices.end());
  s.vertices_ = std::move(vertices);
  return s;
}

Vertex select_pivot(const ExtendedInstance& inst) {
  const Graph& g = inst.graph();
  Vertex best = 0;
  int best_degree = -1;
  for (Vertex v : g.live_vertices()) {
    if (inst.undeletable(v)) continue;
    const int d = g.degree(v);
    if (d > best_degree) {
      best = v;
      best_degree = d;
    }
  }
  if (best == 0) {
    throw ContractViolation("no deletable vertex to branch on");
  }
  return best;
}

namespace {

class Search {
 public:
  Search(ExtendedInstance& inst, const SolveOptions& options, SearchStats& stats, AuditLog* audit)
      : inst_(inst),
        options_(options),
        stats_(stats),
        root_budget_(inst.budget()) {
    if (audit != nullptr) {
      *audit = AuditLog{};
      recorder_.emplace(*audit, inst.graph().max_label());
      inst_.set_observer(&*recorder_);
    }
  }

  ~Search() { inst_.set_observer(nullptr); }

  Search(const Search&) = delete;
  Search& operator=(const Search&) = delete;

  Solution run() {
    const std::vector<int>* no_parent = nullptr;
    if (visit(1, 0, no_parent)) return Solution::found(path_);
    return Solution::no();
  }

 private:
  std::vector<int> degree_snapshot() const {
    const Graph& g = inst_.graph();
    std::vector<int> degrees(static_cast<std::size_t>(g.max_label()) + 1, -1);
    for (Vertex v : g.live_vertices()) degrees[static_cast<std::size_t>(v)] = g.degree(v);
    return degrees;
  }

  void note_failure(std::string what) {
    if (recorder_) recorder_->log().invariant_failures.push_back(std::move(what));
  }

  void check_node_entry(const std::vector<int>* parent_degrees, const std::vector<int>& degrees) {
    if (parent_degrees == nullptr) return;
    for (std::size_t v = 1; v < degrees.size(); ++v) {
      if (degrees[v] < 0) continue;
      if ((*parent_degrees)[v] < 0) {
        note_failure("vertex " + std::to_string(v) + " reappeared below its parent node");
      } else if (degrees[v] > (*parent_degrees)[v]) {
        note_failure("degree of vertex " + std::to_string(v) + " increased from " +
                     std::to_string((*parent_degrees)[v]) + " to " + std::to_string(degrees[v]));
      }
    }
  }

  void check_branch_point() {
    const Graph& g = inst_.graph();
    for (Vertex v : g.live_vertices()) {
      if (g.degree(v) < 2) {
        note_failure("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                     " at a branch point");
      }
    }
    if (!inst_.undeletable_set_is_forest()) {
      note_failure("undeletable set contains a cycle at a branch point");
    }
  }

  /// Re-runs a successful degree-two leaf with stripping after each deletion
  /// so the audit sees the graph emptied and every decrement attributed to
  /// the cycle vertex that caused it.
  void replay_degree_two_leaf(std::size_t checkpoint, const AuditRecorder::Mark& mark,
                              const std::vector<Vertex>& removed) {
    inst_.rollback(checkpoint);
    recorder_->rollback(mark);
    for (Vertex x : removed) {
      inst_.delete_vertex(x, DeletionKind::kCycle);
      strip_low_degree(inst_);
    }
    if (!inst_.graph().empty()) {
      note_failure("graph not empty after replaying the degree-two leaf");
      return;
    }
    recorder_->log().complete = true;
  }

  bool visit(int depth, int exclusions, const std::vector<int>* parent_degrees) {
    ++stats_.nodes_visited;
    stats_.max_path_length = std::max(stats_.max_path_length, depth);

    const std::size_t checkpoint = inst_.checkpoint();
    const int budget = inst_.budget();
    const std::size_t path_size = path_.size();
    const auto audit_mark = recorder_ ? recorder_->mark() : AuditRecorder::Mark{};

    std::vector<int> degrees;
    if (recorder_) {
      degrees = degree_snapshot();
      check_node_entry(parent_degrees, degrees);
    }

    bool found = false;
    const ReductionOutcome outcome = reduce_to_fixpoint(inst_);
    path_.insert(path_.end(), outcome.forced_deletions.begin(), outcome.forced_deletions.end());

    switch (outcome.status) {
      case ReductionStatus::kBudgetExhausted:
        break;
      case ReductionStatus::kSolvedEmpty:
        found = true;
        if (recorder_) recorder_->log().complete = true;
        break;
      case ReductionStatus::kReduced: {
        const Vertex pivot = select_pivot(inst_);
        const int pivot_degree = inst_.graph().degree(pivot);
        if (pivot_degree == 2) {
          const std::size_t leaf_checkpoint = inst_.checkpoint();
          const auto leaf_mark = recorder_ ? recorder_->mark() : AuditRecorder::Mark{};
          const std::vector<Vertex> removed = solve_degree_two(inst_);
          if (static_cast<std::int64_t>(removed.size()) <= inst_.budget()) {
            found = true;
            path_.insert(path_.end(), removed.begin(), removed.end());
            if (recorder_) replay_degree_two_leaf(leaf_checkpoint, leaf_mark, removed);
          }
          break;
        }

        if (recorder_) check_branch_point();

        // Include the pivot. A zero budget would fail at the child's entry.
        if (inst_.budget() >= 1) {
          const std::size_t branch_checkpoint = inst_.checkpoint();
          const int branch_budget = inst_.budget();
          const auto branch_mark = recorder_ ? recorder_->mark() : AuditRecorder::Mark{};
          inst_.delete_vertex(pivot, DeletionKind::kPivot);
          inst_.set_budget(branch_budget - 1);
          path_.push_back(pivot);
          found = visit(depth + 1, exclusions, recorder_ ? &degrees : nullptr);
          if (!found) {
            path_.pop_back();
            inst_.rollback(branch_checkpoint);
            inst_.set_budget(branch_budget);
            if (recorder_) recorder_->rollback(branch_mark);
          }
        }

        // Exclude the pivot.
        if (!found) {
          if (options_.cutoffs_enabled &&
              static_cast<std::int64_t>(exclusions) + 1 > 3 * static_cast<std::int64_t>(root_budget_)) {
            ++stats_.cutoff_hits;
          } else {
            inst_.mark_undeletable(pivot);
            if (recorder_) recorder_->record_exclusion(pivot, pivot_degree);
            found = visit(depth + 1, exclusions + 1, recorder_ ? &degrees : nullptr);
            inst_.unmark_undeletable(pivot);
          }
        }
        break;
      }
    }

    if (found && !stats_.f_prime_on_success) stats_.f_prime_on_success = exclusions;

    inst_.rollback(checkpoint);
    inst_.set_budget(budget);
    if (!found) {
      path_.resize(path_size);
      if (recorder_) recorder_->rollback(audit_mark);
    }
    return found;
  }

  ExtendedInstance& inst_;
  const SolveOptions& options_;
  SearchStats& stats_;
  const int root_budget_;
  std::optional<AuditRecorder> recorder_;
  std::vector<Vertex> path_;
};

}  // namespace

Solution solve(ExtendedInstance& inst, const SolveOptions& options, SearchStats& stats, AuditLog* audit) {
  Search search(inst, options, stats, audit);
  return search.run();
}

std::vector<Vertex> minimum_fvs(const Graph& g) {
  const auto limit = static_cast<int>(g.vertex_count());
  for (int k = 0; k <= limit; ++k) {
    ExtendedInstance inst(g, k);
    SearchStats stats;
    const Solution s = solve(inst, SolveOptions{}, stats);
    if (s) return s.vertices();
  }
  // Unreachable: deleting every vertex always leaves a forest.
  throw ContractViolation("no feedback vertex set found within |V| deletions");
}

}  // namespace fvs
