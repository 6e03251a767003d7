#pragma once

#include <vector>

#include "fvs/instance.hpp"

namespace fvs {

/// Exact solution when every deletable vertex has degree exactly two.
///
/// Breaks cycles one at a time, deleting the smallest deletable label on
/// each cycle found. Returns exactly cycle_rank() of the entry graph
/// vertices, in deletion order. Vertices left over (trees) stay in the
/// graph. The caller compares the result size against the budget.
///
/// Throws ContractViolation if the instance is not a reduced degree-two
/// instance or a cycle lies entirely inside the undeletable set.
std::vector<Vertex> solve_degree_two(ExtendedInstance& inst);

}  // namespace fvs
