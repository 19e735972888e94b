#pragma once

#include <vector>

#include <Eigen/SparseCore>

#include "netalign/graph.hpp"

namespace netalign {

using SparsePattern = Eigen::SparseMatrix<double, Eigen::RowMajor, int>;

// Symmetric 0/1 pattern over candidate-edge indices: entry (e, f) is set iff
// edges e = (i,i') and f = (j,j') form a square, i.e. (i,j) is an A-edge and
// (i',j') is a B-edge. The diagonal is zero.
struct SquaresMatrix {
  SparsePattern pattern;            // values are 1.0; rows sorted by column
  std::vector<int> transpose_perm;  // storage slot of (e,f) -> slot of (f,e)

  Eigen::Index dim() const { return pattern.rows(); }
  Eigen::Index nnz() const { return pattern.nonZeros(); }
  long long square_count() const { return pattern.nonZeros() / 2; }

  // Storage slots [begin, end) of row e; column indices via inner(), so the
  // partners of e are inner()[k] for k in that range.
  int row_begin(int e) const { return pattern.outerIndexPtr()[e]; }
  int row_end(int e) const { return pattern.outerIndexPtr()[e + 1]; }
  const int* inner() const { return pattern.innerIndexPtr(); }
};

SquaresMatrix build_squares(const SimpleGraph& a, const SimpleGraph& b,
                            const CandidateGraph& l);

// Un-oriented incidence matrix of L: one row per vertex of V_A followed by
// one row per vertex of V_B, one column per candidate edge. (A x)_v counts
// selected edges at vertex v.
struct IncidenceMatrix {
  SparsePattern stacked;
  int row_part_rows = 0;  // |V_A|; the remaining rows belong to V_B

  auto row_part() const { return stacked.topRows(row_part_rows); }
  auto col_part() const {
    return stacked.bottomRows(stacked.rows() - row_part_rows);
  }
};

IncidenceMatrix build_incidence(const CandidateGraph& l);

// Full alignment instance with the derived squares matrix. Immutable after
// construction and safe to share across threads.
struct ProblemInstance {
  SimpleGraph a;
  SimpleGraph b;
  CandidateGraph l;
  SquaresMatrix squares;

  static ProblemInstance build(SimpleGraph a, SimpleGraph b, CandidateGraph l);

  int edge_count() const { return l.edge_count(); }
};

}  // namespace netalign
