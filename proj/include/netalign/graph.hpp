#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace netalign {

// Thrown when input graphs or candidate lists violate the model contract
// (self-loops, duplicates, out-of-range endpoints, negative weights, ...).
class InvalidInstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected simple graph on vertices 0..vertex_count-1.
// Immutable after construction; neighbor lists are sorted and deduplicated.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Edges may be given in either orientation. Self-loops and duplicate edges
  // are rejected, not repaired.
  static SimpleGraph from_edges(int vertex_count,
                                std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Normalized (u < v) edge list, sorted ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const;
  bool has_edge(int u, int v) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_ptr_;
  std::vector<int> adj_;
};

struct CandidateEdge {
  int a = 0;   // vertex of A
  int b = 0;   // vertex of B
  double w = 0.0;
};

// Canonical ordering of candidate edges: ascending by (a, then b).
// Returns a permutation: position k holds the index into `edges` of the
// k-th edge in canonical order. Rejects duplicate (a, b) pairs.
std::vector<int> canonical_edge_order(std::span<const CandidateEdge> edges);

// Sparse bipartite graph of permissible matches between A-vertices (rows)
// and B-vertices (cols). Edges are stored in canonical order; the edge
// index is the single source of truth for the ordering of x, w and the
// rows/columns of the squares matrix.
class CandidateGraph {
 public:
  CandidateGraph() = default;

  static CandidateGraph from_edges(int rows, int cols,
                                   std::vector<CandidateEdge> edges);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int edge_count() const { return static_cast<int>(head_.size()); }

  int head(int e) const { return head_[e]; }  // A-side endpoint
  int tail(int e) const { return tail_[e]; }  // B-side endpoint
  double weight(int e) const { return weight_[e]; }
  const Eigen::VectorXd& weights() const { return weight_; }

  // Edge indices incident to one vertex, ascending.
  std::span<const int> edges_at_a(int i) const;
  std::span<const int> edges_at_b(int ip) const;

  std::optional<int> find_edge(int i, int ip) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> head_;
  std::vector<int> tail_;
  Eigen::VectorXd weight_;
  std::vector<int> a_ptr_, a_edges_;
  std::vector<int> b_ptr_, b_edges_;
};

}  // namespace netalign
