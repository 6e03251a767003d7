#pragma once

#include <optional>
#include <vector>

#include "fvs/instance.hpp"

namespace fvs {

enum class ReductionStatus {
  kReduced,          // nonempty, min degree >= 2, no forced vertex
  kSolvedEmpty,      // graph emptied with budget >= 0
  kBudgetExhausted,  // budget went negative
};

struct ReductionOutcome {
  ReductionStatus status = ReductionStatus::kReduced;
  std::vector<Vertex> forced_deletions;  // in deletion order, each cost one unit of budget
  std::vector<Vertex> stripped;          // in deletion order
};

/// Deletes vertices of degree <= 1, smallest label first, until none remain.
/// Returns the removed vertices in order. Budget is untouched.
std::vector<Vertex> strip_low_degree(ExtendedInstance& inst);

/// Smallest deletable vertex with two neighbors in the same tree of the
/// subgraph induced by the undeletable set.
std::optional<Vertex> find_forced_vertex(const ExtendedInstance& inst);

/// Alternates stripping and forced deletions until neither applies or the
/// budget drops below zero.
ReductionOutcome reduce_to_fixpoint(ExtendedInstance& inst);

}  // namespace fvs
