#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fvs/instance.hpp"

namespace fvs {

/// A vertex put into the solution along the recorded path.
struct RemovalEntry {
  Vertex vertex;
  int d_star;  // degree when deleted
  DeletionKind kind;
};

/// A vertex moved into the undeletable set by the exclude branch.
struct ExclusionEntry {
  Vertex vertex;
  int d_star;  // degree when excluded
};

/// One unit drop of an excluded vertex's degree while it was still above two.
struct EffectiveDecrement {
  Vertex vertex;
  /// Index into AuditLog::removals of the most recent removal when the drop
  /// happened, or -1 if there was none.
  std::ptrdiff_t interval;
};

/// Degree bookkeeping for the successful root-to-leaf path of one search.
///
/// Entries from abandoned branches are discarded on backtrack, so after a
/// search that found a solution the log describes exactly that path. A
/// successful degree-two leaf is replayed one cycle vertex at a time with
/// low-degree stripping in between, so every vertex ends up deleted and
/// `complete` is set.
struct AuditLog {
  std::vector<RemovalEntry> removals;
  std::vector<ExclusionEntry> exclusions;
  std::vector<EffectiveDecrement> decrements;
  /// Search-wide invariant failures (degree increase, low degree at a branch
  /// point, cyclic undeletable set). Not scoped to the path.
  std::vector<std::string> invariant_failures;
  bool complete = false;

  /// u -> number of effective decrements of u attributed to removal `index`.
  std::map<Vertex, int> decrements_after(std::size_t index) const;
};

struct AuditViolation {
  std::string rule;
  std::string detail;
};

namespace audit_rule {
/// Effective decrements attributed to one removal exceed its degree.
inline constexpr const char* kDecrementBudget = "decrement-budget";
/// A removal charged decrements to an excluded vertex of smaller degree.
inline constexpr const char* kDegreeOrder = "degree-order";
/// An excluded vertex's decrements do not sum to its degree minus two.
inline constexpr const char* kDecrementTotal = "decrement-total";
/// A decrement happened before any removal on the path.
inline constexpr const char* kUnattributed = "unattributed-decrement";
/// More than three exclusions per removal.
inline constexpr const char* kExclusionBound = "exclusion-bound";
inline constexpr const char* kSearchInvariant = "search-invariant";
}  // namespace audit_rule

/// Empty iff every check passes. The per-vertex totals are only checked on
/// complete logs.
std::vector<AuditViolation> verify_audit(const AuditLog& log);

/// Feeds an AuditLog from deletion events; used by the search driver.
class AuditRecorder final : public DeletionObserver {
 public:
  struct Mark {
    std::size_t removals;
    std::size_t exclusions;
    std::size_t decrements;
  };

  AuditRecorder(AuditLog& log, Vertex max_label);

  void before_delete(const Graph& g, Vertex v, DeletionKind kind) override;
  void record_exclusion(Vertex v, int degree);

  Mark mark() const;
  void rollback(const Mark& mark);

  AuditLog& log() noexcept { return log_; }

 private:
  AuditLog& log_;
  std::vector<char> excluded_;
};

}  // namespace fvs
