#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fvs/audit.hpp"
#include "fvs/instance.hpp"

namespace fvs {

/// Result of a decision search: a feedback vertex set or "no".
class Solution {
 public:
  static Solution found(std::vector<Vertex> vertices);
  static Solution no() { return Solution(); }

  bool is_found() const noexcept { return found_; }
  explicit operator bool() const noexcept { return found_; }

  /// Ascending labels; empty for "no".
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

 private:
  Solution() = default;
  bool found_ = false;
  std::vector<Vertex> vertices_;
};

struct SearchStats {
  std::uint64_t nodes_visited = 0;
  /// Search-tree nodes on the longest root-to-node path (root alone is 1).
  int max_path_length = 0;
  std::uint64_t cutoff_hits = 0;
  /// Exclusions on the path that produced the solution.
  std::optional<int> f_prime_on_success;
};

struct SolveOptions {
  /// Abandon a path once it would exclude more than three vertices per unit
  /// of the root budget.
  bool cutoffs_enabled = true;
};

/// Deletable vertex of maximum degree, smallest label on ties.
/// Throws ContractViolation if every live vertex is undeletable.
Vertex select_pivot(const ExtendedInstance& inst);

/// Decides whether `inst` has a feedback vertex set of at most
/// inst.budget() vertices avoiding its undeletable set.
///
/// Reduces, then either solves the degree-two case directly or branches on
/// the pivot: put it in the solution first, exclude it only if that fails.
/// The instance is restored to its entry state before returning. When
/// `audit` is given, the degree bookkeeping for the successful path is
/// written there.
Solution solve(ExtendedInstance& inst, const SolveOptions& options, SearchStats& stats,
               AuditLog* audit = nullptr);

/// Smallest feedback vertex set, by trying budgets 0, 1, 2, ...
std::vector<Vertex> minimum_fvs(const Graph& g);

}  // namespace fvs
