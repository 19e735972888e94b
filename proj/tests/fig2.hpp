#pragma once

// The worked 6+6-vertex example with 12 candidate edges: graphs, weights,
// and the published squares and incidence matrices, kept in the published
// row order. `kPrintedToCanonical` maps a published row/column position to
// the canonical edge index.

#include <array>
#include <vector>

#include "netalign/instance.hpp"

namespace fig2 {

inline netalign::ProblemInstance instance() {
  using namespace netalign;
  SimpleGraph a = SimpleGraph::from_edges(
      6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {0, 5}});
  SimpleGraph b = SimpleGraph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}});
  CandidateGraph l = CandidateGraph::from_edges(
      6, 6,
      {{1, 1, 0.6},
       {1, 0, 0.9},
       {1, 2, 0.3},
       {1, 3, 0.1},
       {0, 1, 0.9},
       {0, 0, 0.6},
       {2, 1, 0.3},
       {2, 2, 0.5},
       {3, 1, 0.1},
       {3, 3, 0.4},
       {4, 4, 0.5},
       {5, 0, 1.0}});
  return ProblemInstance::build(std::move(a), std::move(b), std::move(l));
}

// Published edge order: (2,2'),(2,1'),(2,3'),(2,4'),(1,2'),(1,1'),(3,2'),
// (3,3'),(4,2'),(4,4'),(5,5'),(6,1').
inline constexpr std::array<int, 12> kPrintedToCanonical = {3, 2, 4,  5,  1, 0,
                                                            6, 7, 8, 9, 10, 11};

inline constexpr std::array<std::array<int, 12>, 12> kPrintedS = {{
    {0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1},
    {0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
}};

inline constexpr std::array<double, 12> kPrintedW = {
    0.6, 0.9, 0.3, 0.1, 0.9, 0.6, 0.3, 0.5, 0.1, 0.4, 0.5, 1.0};

// Published incidence matrix: 11 rows (vertex 6' is omitted there), columns
// in the published edge order.
inline constexpr std::array<std::array<int, 12>, 11> kPrintedIncidence = {{
    {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0},
    {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1},
    {0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
}};

// Stacked-row index (A rows then B rows) of each published incidence row:
// A vertices 2,1,3,4,5,6 then B vertices 2',1',3',4',5'.
inline constexpr std::array<int, 11> kPrintedIncidenceRows = {1, 0, 2, 3, 4, 5,
                                                              7, 6, 8, 9, 10};

}  // namespace fig2
