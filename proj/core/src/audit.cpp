#include "fvs/audit.hpp"

#include <string>

namespace fvs {

std::map<Vertex, int> AuditLog::decrements_after(std::size_t index) const {
  std::map<Vertex, int> out;
  for (const auto& d : decrements) {
    if (d.interval == static_cast<std::ptrdiff_t>(index)) ++out[d.vertex];
  }
  return out;
}

std::vector<AuditViolation> verify_audit(const AuditLog& log) {
  std::vector<AuditViolation> violations;

  for (const auto& failure : log.invariant_failures) {
    violations.push_back({audit_rule::kSearchInvariant, failure});
  }

  std::map<Vertex, int> exclusion_degree;
  for (const auto& e : log.exclusions) exclusion_degree[e.vertex] = e.d_star;

  // Group once: interval -> (vertex -> count), vertex -> total.
  std::vector<std::map<Vertex, int>> per_interval(log.removals.size());
  std::map<Vertex, int> per_vertex;
  for (const auto& d : log.decrements) {
    if (d.interval < 0 || static_cast<std::size_t>(d.interval) >= log.removals.size()) {
      violations.push_back({audit_rule::kUnattributed,
                            "vertex " + std::to_string(d.vertex) + " lost degree outside any removal interval"});
      continue;
    }
    ++per_interval[static_cast<std::size_t>(d.interval)][d.vertex];
    ++per_vertex[d.vertex];
  }

  for (std::size_t i = 0; i < log.removals.size(); ++i) {
    const RemovalEntry& x = log.removals[i];
    int total = 0;
    for (const auto& [u, count] : per_interval[i]) {
      total += count;
      const auto it = exclusion_degree.find(u);
      if (it == exclusion_degree.end()) {
        violations.push_back({audit_rule::kDegreeOrder, "vertex " + std::to_string(u) +
                                                            " has decrements but was never excluded"});
      } else if (count > 0 && it->second < x.d_star) {
        violations.push_back({audit_rule::kDegreeOrder,
                              "removal #" + std::to_string(i + 1) + " (vertex " + std::to_string(x.vertex) +
                                  ", degree " + std::to_string(x.d_star) + ") charged excluded vertex " +
                                  std::to_string(u) + " of degree " + std::to_string(it->second)});
      }
    }
    if (total > x.d_star) {
      violations.push_back({audit_rule::kDecrementBudget,
                            "removal #" + std::to_string(i + 1) + " (vertex " + std::to_string(x.vertex) +
                                ") incurred " + std::to_string(total) + " effective decrements, degree " +
                                std::to_string(x.d_star)});
    }
  }

  if (log.complete) {
    for (const auto& e : log.exclusions) {
      const auto it = per_vertex.find(e.vertex);
      const int got = it == per_vertex.end() ? 0 : it->second;
      if (got != e.d_star - 2) {
        violations.push_back({audit_rule::kDecrementTotal,
                              "excluded vertex " + std::to_string(e.vertex) + " has " + std::to_string(got) +
                                  " effective decrements, expected " + std::to_string(e.d_star - 2)});
      }
    }
  }

  if (log.exclusions.size() > 3 * log.removals.size()) {
    violations.push_back({audit_rule::kExclusionBound,
                          std::to_string(log.exclusions.size()) + " exclusions for " +
                              std::to_string(log.removals.size()) + " removals"});
  }
  return violations;
}

AuditRecorder::AuditRecorder(AuditLog& log, Vertex max_label)
    : log_(log), excluded_(static_cast<std::size_t>(max_label) + 1, 0) {}

void AuditRecorder::before_delete(const Graph& g, Vertex v, DeletionKind kind) {
  if (kind != DeletionKind::kStrip) {
    log_.removals.push_back({v, g.degree(v), kind});
  }
  const auto interval = static_cast<std::ptrdiff_t>(log_.removals.size()) - 1;
  for (Vertex u : g.neighbors(v)) {
    if (excluded_[static_cast<std::size_t>(u)] && g.degree(u) >= 3) {
      log_.decrements.push_back({u, interval});
    }
  }
}

void AuditRecorder::record_exclusion(Vertex v, int degree) {
  log_.exclusions.push_back({v, degree});
  excluded_[static_cast<std::size_t>(v)] = 1;
}

AuditRecorder::Mark AuditRecorder::mark() const {
  return {log_.removals.size(), log_.exclusions.size(), log_.decrements.size()};
}

void AuditRecorder::rollback(const Mark& mark) {
  for (std::size_t i = mark.exclusions; i < log_.exclusions.size(); ++i) {
    excluded_[static_cast<std::size_t>(log_.exclusions[i].vertex)] = 0;
  }
  log_.removals.resize(mark.removals);
  log_.exclusions.resize(mark.exclusions);
  log_.decrements.resize(mark.decrements);
  log_.complete = false;
}

}  // namespace fvs
