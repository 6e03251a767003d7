#include <random>

#include "doctest.h"
#include "fvs/graph.hpp"
#include "test_graphs.hpp"

using namespace fvs;
using namespace fvs::test;

namespace {

void check_consistent(const Graph& g) {
  std::size_t degree_sum = 0;
  std::size_t count = 0;
  for (Vertex v : g.live_vertices()) {
    ++count;
    degree_sum += static_cast<std::size_t>(g.degree(v));
    int seen = 0;
    for (Vertex w : g.neighbors(v)) {
      ++seen;
      REQUIRE(w != v);
      REQUIRE(g.contains(w));
      REQUIRE(g.adjacent(w, v));
    }
    REQUIRE(seen == g.degree(v));
  }
  REQUIRE(count == g.vertex_count());
  REQUIRE(degree_sum == 2 * g.edge_count());
}

void check_cycle(const Graph& g, const Cycle& c) {
  REQUIRE(c.vertices.size() >= 3);
  std::vector<Vertex> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const Vertex a = c.vertices[i];
    const Vertex b = c.vertices[(i + 1) % c.vertices.size()];
    REQUIRE(g.adjacent(a, b));
  }
}

}  // namespace

TEST_CASE("build_graph") {
  const Graph tri = cycle_graph(3);
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);

  const Graph empty4 = Graph::build(4, {});
  CHECK(empty4.vertex_count() == 4);
  CHECK(empty4.edge_count() == 0);

  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::build(3, loop), GraphInputError);

  const std::vector<Edge> dup{{1, 2}, {2, 3}, {2, 1}};
  try {
    Graph::build(3, dup);
    FAIL("duplicate accepted");
  } catch (const GraphInputError& e) {
    CHECK(e.edge_index() == 2);
  }

  const std::vector<Edge> out_of_range{{1, 2}, {0, 1}};
  try {
    Graph::build(3, out_of_range);
    FAIL("out-of-range accepted");
  } catch (const GraphInputError& e) {
    CHECK(e.edge_index() == 1);
  }
  const std::vector<Edge> too_big{{1, 4}};
  CHECK_THROWS_AS(Graph::build(3, too_big), GraphInputError);
}

TEST_CASE("delete_vertex") {
  UndoJournal j;

  SUBCASE("star centre") {
    Graph g = star_graph(3);
    g.delete_vertex(1, j);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);
    for (Vertex v : g.live_vertices()) CHECK(g.degree(v) == 0);
  }
  SUBCASE("triangle vertex") {
    Graph g = cycle_graph(3);
    g.delete_vertex(2, j);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.degree(3) == 1);
    CHECK(j.back().neighbors == std::vector<Vertex>{1, 3});
  }
  SUBCASE("isolated vertex") {
    Graph g = Graph::build(3, std::vector<Edge>{{1, 2}});
    g.delete_vertex(3, j);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("dead vertex is a contract violation") {
    Graph g = cycle_graph(3);
    g.delete_vertex(1, j);
    CHECK_THROWS_AS(g.delete_vertex(1, j), ContractViolation);
    CHECK_THROWS_AS(g.degree(1), ContractViolation);
    CHECK_THROWS_AS(g.delete_vertex(9, j), ContractViolation);
  }
}

TEST_CASE("restore_last") {
  const Graph original = petersen_graph();
  Graph g = original;
  UndoJournal j;

  g.delete_vertex(4, j);
  CHECK_FALSE(g == original);
  g.restore_last(j);
  CHECK(g == original);

  g.delete_vertex(4, j);
  g.delete_vertex(9, j);
  g.restore_last(j);
  CHECK(g.contains(9));
  CHECK_FALSE(g.contains(4));
  g.restore_last(j);
  CHECK(g == original);
  CHECK(g.vertices() == original.vertices());

  UndoJournal fresh;
  CHECK_THROWS_AS(g.restore_last(fresh), ContractViolation);
}

TEST_CASE("component_count") {
  CHECK(component_count(disjoint_union(cycle_graph(3), cycle_graph(3))) == 2);
  CHECK(component_count(Graph::build(0, {})) == 0);
  CHECK(component_count(path_graph(5)) == 1);
  CHECK(component_count(Graph::build(4, {})) == 4);
}

TEST_CASE("find_cycle") {
  CHECK_FALSE(find_cycle(path_graph(6)).has_value());
  CHECK_FALSE(find_cycle(star_graph(4)).has_value());

  const auto tri = find_cycle(cycle_graph(3));
  REQUIRE(tri.has_value());
  std::vector<Vertex> sorted = tri->vertices;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<Vertex>{1, 2, 3});

  const Graph theta = theta_graph(1, 2, 3);
  const auto c = find_cycle(theta);
  REQUIRE(c.has_value());
  check_cycle(theta, *c);
  CHECK(c->vertices.size() >= 4);

  // Same state, same answer.
  CHECK(find_cycle(theta)->vertices == c->vertices);

  // A cycle hanging off a tree is still found after deleting parts of it.
  Graph g = theta;
  UndoJournal j;
  g.delete_vertex(3, j);
  const auto rest = find_cycle(g);
  REQUIRE(rest.has_value());
  check_cycle(g, *rest);
  CHECK(std::find(rest->vertices.begin(), rest->vertices.end(), 3) == rest->vertices.end());
}

TEST_CASE("is_forest") {
  CHECK(is_forest(Graph::build(0, {})));
  CHECK(is_forest(path_graph(7)));
  CHECK(is_forest(star_graph(5)));
  CHECK_FALSE(is_forest(cycle_graph(4)));
}

TEST_CASE("check_degree_sum_identity") {
  CHECK(check_degree_sum_identity(path_graph(4)));
  CHECK(check_degree_sum_identity(star_graph(4)));
  // Spider: centre 1 with three legs of length two.
  const std::vector<Edge> spider{{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}};
  const Graph s = Graph::build(7, spider);
  CHECK(s.degree(1) == 3);
  CHECK(check_degree_sum_identity(s));

  CHECK_THROWS_AS(check_degree_sum_identity(cycle_graph(4)), std::invalid_argument);
  CHECK_THROWS_AS(check_degree_sum_identity(Graph::build(1, {})), std::invalid_argument);
  CHECK_THROWS_AS(check_degree_sum_identity(Graph::build(4, std::vector<Edge>{{1, 2}, {3, 4}})),
                  std::invalid_argument);
}

TEST_CASE("property: delete/restore sequences keep the graph consistent and reversible") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<Vertex>(2 + draw_below(rng, 19));
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const Graph original = gen_random_graph(n, draw_below(rng, pairs + 1), rng());
    Graph g = original;
    UndoJournal j;
    std::vector<Graph> history{g};
    for (int step = 0; step < 40; ++step) {
      const bool remove = !g.empty() && (j.empty() || draw_below(rng, 3) != 0);
      if (remove) {
        const auto live = g.vertices();
        g.delete_vertex(live[draw_below(rng, live.size())], j);
        history.push_back(g);
      } else if (!j.empty()) {
        g.restore_last(j);
        history.pop_back();
        REQUIRE(g == history.back());
      }
      check_consistent(g);
    }
    g.rollback(j, 0);
    REQUIRE(g == original);
  }
}

TEST_CASE("property: is_forest agrees with m = n - c and with find_cycle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<Vertex>(1 + draw_below(rng, 20));
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
    const auto m = draw_below(rng, std::min<std::uint64_t>(pairs, 2 * static_cast<std::uint64_t>(n)) + 1);
    const Graph g = gen_random_graph(n, m, rng());
    const bool by_count = g.edge_count() + component_count(g) == g.vertex_count();
    const auto cycle = find_cycle(g);
    REQUIRE(is_forest(g) == by_count);
    REQUIRE(is_forest(g) == !cycle.has_value());
    REQUIRE(is_forest(g) == forest_after_removing(g, {}));
    if (cycle) check_cycle(g, *cycle);
  }
}

TEST_CASE("property: degree-sum identity holds on random trees") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = static_cast<Vertex>(2 + draw_below(rng, 49));
    const Graph t = random_tree(n, rng);
    REQUIRE(is_forest(t));
    REQUIRE(component_count(t) == 1);
    REQUIRE(check_degree_sum_identity(t));
  }
}
