#include <doctest.h>

#include "netalign/graph.hpp"

using namespace netalign;

TEST_CASE("simple graph construction normalizes and validates") {
  auto g = SimpleGraph::from_edges(4, {{2, 0}, {1, 2}, {0, 1}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  auto nb = g.neighbors(2);
  CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 1});
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.neighbors(3).empty());

  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 0}}), InvalidInstanceError);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 1}, {1, 0}}),
                  InvalidInstanceError);
  CHECK_THROWS_AS(SimpleGraph::from_edges(3, {{0, 3}}), InvalidInstanceError);
}

TEST_CASE("canonical edge order sorts ascending by A then B endpoint") {
  std::vector<CandidateEdge> edges = {{1, 0, 0.5}, {0, 0, 0.5}};
  CHECK(canonical_edge_order(edges) == std::vector<int>{1, 0});

  CHECK(canonical_edge_order({}).empty());

  std::vector<CandidateEdge> dup = {{0, 0, 0.1}, {0, 0, 0.2}};
  CHECK_THROWS_AS(canonical_edge_order(dup), InvalidInstanceError);
}

TEST_CASE("candidate graph stores canonical order and incidence lists") {
  auto l = CandidateGraph::from_edges(
      3, 2, {{2, 1, 0.3}, {0, 1, 0.2}, {2, 0, 0.9}, {0, 0, 0.1}});
  CHECK(l.edge_count() == 4);
  // canonical: (0,0), (0,1), (2,0), (2,1)
  CHECK(l.head(0) == 0);
  CHECK(l.tail(0) == 0);
  CHECK(l.weight(0) == 0.1);
  CHECK(l.head(2) == 2);
  CHECK(l.tail(2) == 0);
  CHECK(l.weight(2) == 0.9);

  auto at2 = l.edges_at_a(2);
  CHECK(std::vector<int>(at2.begin(), at2.end()) == std::vector<int>{2, 3});
  auto at_b1 = l.edges_at_b(1);
  CHECK(std::vector<int>(at_b1.begin(), at_b1.end()) == std::vector<int>{1, 3});
  CHECK(l.edges_at_a(1).empty());

  CHECK(l.find_edge(2, 1) == 3);
  CHECK_FALSE(l.find_edge(1, 0).has_value());

  CHECK_THROWS_AS(CandidateGraph::from_edges(2, 2, {{0, 0, -0.5}}),
                  InvalidInstanceError);
  CHECK_THROWS_AS(CandidateGraph::from_edges(2, 2, {{0, 2, 0.5}}),
                  InvalidInstanceError);
}
