#pragma once

#include <span>
#include <vector>

#include "netalign/graph.hpp"

namespace netalign {

// Bipartite matching input. Weights may be negative; edges with weight <= 0
// are never selected (maximum-weight matching, not maximum-cardinality).
struct WeightedBipartiteProblem {
  struct Edge {
    int row = 0;
    int col = 0;
    double w = 0.0;
  };
  int rows = 0;
  int cols = 0;
  std::vector<Edge> edges;
};

struct BipartiteMatch {
  std::vector<int> selected;  // indices into the input edge list, ascending
  double value = 0.0;
};

enum class TieBreak {
  // Fixed processing order (ascending rows, heap ties to the smaller
  // column). Deterministic, no post-pass.
  kScanOrder,
  // Canonicalize equal-value optima to the lexicographically smallest
  // selected edge-index set.
  kLexSmallestSet,
};

// Exact maximum-weight bipartite matching: successive shortest augmenting
// paths on reduced costs, one private zero-weight sink per row so a row may
// stay unmatched. The object owns reusable workspace; a solve is
// single-threaded, and independent matchers may run in parallel.
class MaxWeightMatcher {
 public:
  BipartiteMatch solve(const WeightedBipartiteProblem& p,
                       TieBreak tie = TieBreak::kLexSmallestSet);

  BipartiteMatch solve(int rows, int cols, std::span<const int> edge_row,
                       std::span<const int> edge_col,
                       std::span<const double> edge_w,
                       TieBreak tie = TieBreak::kLexSmallestSet);

 private:
  struct Kept {
    int row, col, orig;
    double w;
  };

  void run_ssp(int rows, int cols);
  void lex_canonicalize(int rows, int cols);
  bool try_force(int k);
  bool saturate_row(int start);
  bool saturate_col(int start);

  std::vector<Kept> kept_;
  std::vector<int> adj_ptr_, adj_;      // rows -> kept edge ids
  std::vector<int> cadj_ptr_, cadj_;    // cols -> tight kept edge ids
  std::vector<int> dup_mark_;
  std::vector<double> pot_u_, pot_v_;   // pot_v_ covers real cols + dummies
  std::vector<int> match_row_, match_col_, edge_of_row_;
  std::vector<double> dist_;
  std::vector<int> prev_row_, parent_edge_;
  std::vector<char> finalized_;
  std::vector<std::pair<double, int>> heap_;
  std::vector<std::pair<int, double>> expanded_rows_;
  std::vector<int> finalized_cols_;
  std::vector<double> fu_, fv_;
  std::vector<char> tight_, committed_row_, committed_col_;
  std::vector<int> snap_mr_, snap_mc_, snap_er_;
  std::vector<int> bfs_queue_, bfs_parent_;
  std::vector<char> bfs_seen_;
};

// Convenience wrapper with the module's default tie-breaking.
BipartiteMatch max_weight_matching(const WeightedBipartiteProblem& p);

}  // namespace netalign
