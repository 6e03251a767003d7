#include <random>

#include "doctest.h"
#include "fvs/branching.hpp"
#include "fvs/oracle.hpp"
#include "test_graphs.hpp"

using namespace fvs;
using namespace fvs::test;

namespace {

Solution run(const Graph& g, int k, const std::vector<Vertex>& f = {}, bool cutoffs = true,
             SearchStats* stats_out = nullptr, AuditLog* audit = nullptr) {
  ExtendedInstance inst(g, k, f);
  SearchStats stats;
  SolveOptions options;
  options.cutoffs_enabled = cutoffs;
  Solution s = solve(inst, options, stats, audit);
  REQUIRE(inst.graph() == g);
  REQUIRE(inst.budget() == k);
  REQUIRE(inst.undeletable_vertices() == f);
  if (stats_out) *stats_out = stats;
  return s;
}

void check_sound(const Graph& g, int k, const std::vector<Vertex>& f, const Solution& s) {
  REQUIRE(s.is_found());
  REQUIRE(static_cast<int>(s.vertices().size()) <= k);
  REQUIRE(forest_after_removing(g, s.vertices()));
  for (Vertex v : s.vertices()) REQUIRE(std::find(f.begin(), f.end(), v) == f.end());
  REQUIRE(std::is_sorted(s.vertices().begin(), s.vertices().end()));
}

}  // namespace

TEST_CASE("select_pivot") {
  {
    ExtendedInstance inst(complete_graph(4), 1);
    CHECK(select_pivot(inst) == 1);
  }
  {
    ExtendedInstance inst(wheel_graph(5), 1);
    CHECK(select_pivot(inst) == 1);
  }
  {
    // Rim 1..5, hub 6: the unique degree-5 vertex wins over smaller labels.
    std::vector<Edge> e;
    for (Vertex v = 1; v <= 5; ++v) {
      e.push_back({v, v % 5 + 1});
      e.push_back({v, 6});
    }
    ExtendedInstance inst(Graph::build(6, e), 1);
    CHECK(select_pivot(inst) == 6);
    inst.mark_undeletable(6);
    CHECK(select_pivot(inst) == 1);
  }
  {
    ExtendedInstance inst(path_graph(2), 1, std::vector<Vertex>{1, 2});
    CHECK_THROWS_AS(select_pivot(inst), ContractViolation);
  }
}

TEST_CASE("solve: small known instances") {
  CHECK(run(cycle_graph(5), 1).vertices().size() == 1);
  CHECK_FALSE(run(cycle_graph(5), 0));

  CHECK_FALSE(run(complete_graph(5), 2));
  const Solution k5 = run(complete_graph(5), 3);
  check_sound(complete_graph(5), 3, {}, k5);
  CHECK(k5.vertices().size() == 3);

  const Graph p = petersen_graph();
  for (int k = 0; k <= 2; ++k) CHECK_FALSE(run(p, k));
  check_sound(p, 3, {}, run(p, 3));

  // The triangle answer uses the smallest label.
  CHECK(run(cycle_graph(3), 1).vertices() == std::vector<Vertex>{1});
}

TEST_CASE("solve: undeletable vertices are respected") {
  const std::vector<Vertex> f{1, 2};
  const Solution s = run(complete_graph(4), 2, f);
  check_sound(complete_graph(4), 2, f, s);
  CHECK(s.vertices() == std::vector<Vertex>{3, 4});
  CHECK_FALSE(run(complete_graph(4), 1, f));
}

TEST_CASE("minimum_fvs") {
  CHECK(minimum_fvs(path_graph(6)).empty());
  CHECK(minimum_fvs(Graph::build(0, {})).empty());
  for (Vertex n = 3; n <= 8; ++n) {
    const auto set = minimum_fvs(complete_graph(n));
    CHECK(set.size() == static_cast<std::size_t>(n - 2));
    CHECK(forest_after_removing(complete_graph(n), set));
  }
  CHECK(minimum_fvs(petersen_graph()).size() == 3);
}

TEST_CASE("verify_audit") {
  SUBCASE("C5 run is clean with no exclusions") {
    AuditLog log;
    CHECK(run(cycle_graph(5), 1, {}, true, nullptr, &log));
    CHECK(log.exclusions.empty());
    CHECK(log.complete);
    CHECK(verify_audit(log).empty());
  }
  SUBCASE("inflated decrements are reported") {
    AuditLog log;
    REQUIRE(run(petersen_graph(), 3, {}, true, nullptr, &log));
    REQUIRE(verify_audit(log).empty());
    REQUIRE_FALSE(log.removals.empty());
    // Charge removal #1 with more decrements than its degree on a fake excluded vertex.
    log.exclusions.push_back({99, 10});
    for (int i = 0; i <= log.removals[0].d_star; ++i) log.decrements.push_back({99, 0});
    const auto violations = verify_audit(log);
    const bool flagged = std::any_of(violations.begin(), violations.end(), [](const AuditViolation& v) {
      return std::string(v.rule) == audit_rule::kDecrementBudget;
    });
    CHECK(flagged);
  }
  SUBCASE("degree order and unattributed decrements are reported") {
    AuditLog log;
    log.removals.push_back({5, 4, DeletionKind::kPivot});
    log.exclusions.push_back({3, 3});
    log.decrements.push_back({3, 0});
    log.decrements.push_back({3, -1});
    const auto violations = verify_audit(log);
    auto has = [&](const char* rule) {
      return std::any_of(violations.begin(), violations.end(),
                         [&](const AuditViolation& v) { return v.rule == rule; });
    };
    CHECK(has(audit_rule::kDegreeOrder));
    CHECK(has(audit_rule::kUnattributed));
    CHECK_FALSE(has(audit_rule::kDecrementTotal));  // incomplete log
    log.complete = true;
    log.decrements.push_back({3, 0});  // two attributed drops, d* - 2 = 1
    const auto again = verify_audit(log);
    CHECK(std::any_of(again.begin(), again.end(),
                      [](const AuditViolation& v) { return v.rule == audit_rule::kDecrementTotal; }));
  }
}

TEST_CASE("property: yes/no matches the oracle, with and without cutoffs and seeded F") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<Vertex>(3 + draw_below(rng, 10));
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const auto m = draw_below(rng, std::min<std::uint64_t>(pairs, 30) + 1);
    const Graph g = gen_random_graph(n, m, rng());
    const std::vector<Vertex> f = trial % 3 == 0 ? random_forest_seed(g, rng, 0.3) : std::vector<Vertex>{};
    const auto best = brute_force_min_fvs(g, f);
    REQUIRE(best.has_value());
    bool previous = false;
    for (int k = 0; k <= n; ++k) {
      const bool expected = static_cast<int>(best->size()) <= k;
      SearchStats stats;
      const Solution capped = run(g, k, f, true, &stats);
      const Solution uncapped = run(g, k, f, false);
      REQUIRE(capped.is_found() == expected);
      REQUIRE(uncapped.is_found() == expected);
      if (capped) {
        check_sound(g, k, f, capped);
        REQUIRE(*stats.f_prime_on_success <= 3 * k);
      }
      if (uncapped) check_sound(g, k, f, uncapped);
      REQUIRE(stats.max_path_length <= 4 * k + 1);
      REQUIRE(stats.nodes_visited <= (std::uint64_t{1} << (4 * k + 1)));
      REQUIRE((!previous || capped.is_found()));  // monotone in k
      previous = capped.is_found();
    }
  }
}

TEST_CASE("property: audited runs satisfy the degree invariants and bookkeeping identities") {
  std::mt19937_64 rng(41);
  int found = 0;
  for (int trial = 0; trial < 300 && found < 100; ++trial) {
    const auto n = static_cast<Vertex>(5 + draw_below(rng, 12));
    const Graph g = capped_random_graph(n, static_cast<std::size_t>(n) + 2 + draw_below(rng, static_cast<std::uint64_t>(n)), rng());
    const auto k = static_cast<int>(minimum_fvs(g).size() + draw_below(rng, 2));
    AuditLog log;
    const Solution s = run(g, k, {}, true, nullptr, &log);
    REQUIRE(s);
    REQUIRE(log.complete);
    REQUIRE(log.invariant_failures.empty());
    const auto violations = verify_audit(log);
    for (const auto& v : violations) INFO(v.rule << ": " << v.detail);
    REQUIRE(violations.empty());
    REQUIRE(log.removals.size() == s.vertices().size());
    ++found;
  }
  CHECK(found == 100);
}
