#include "fvs/base_solver.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fvs {

std::vector<Vertex> solve_degree_two(ExtendedInstance& inst) {
  const Graph& g = inst.graph();
  for (Vertex v : g.live_vertices()) {
    const int d = g.degree(v);
    if (d < 2) {
      throw ContractViolation("degree-two base case: vertex " + std::to_string(v) + " has degree " +
                              std::to_string(d));
    }
    if (d > 2 && !inst.undeletable(v)) {
      throw ContractViolation("degree-two base case: deletable vertex " + std::to_string(v) +
                              " has degree " + std::to_string(d));
    }
  }

  const std::int64_t expected = cycle_rank(g);
  std::vector<Vertex> removed;
  while (auto cycle = find_cycle(g)) {
    Vertex pick = std::numeric_limits<Vertex>::max();
    for (Vertex v : cycle->vertices) {
      if (!inst.undeletable(v)) pick = std::min(pick, v);
    }
    if (pick == std::numeric_limits<Vertex>::max()) {
      throw ContractViolation("cycle lies entirely inside the undeletable set");
    }
    inst.delete_vertex(pick, DeletionKind::kCycle);
    removed.push_back(pick);
  }

  if (static_cast<std::int64_t>(removed.size()) != expected) {
    throw ContractViolation("degree-two base case removed " + std::to_string(removed.size()) +
                            " vertices, cycle rank was " + std::to_string(expected));
  }
  return removed;
}

}  // namespace fvs
