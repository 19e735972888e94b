#pragma once

#include <vector>

#include "netalign/instance.hpp"
#include "netalign/solution.hpp"

namespace netalign {

struct IsoRankConfig {
  SolverConfig base;  // gamma in [0,1); tolerance is the 1-norm residual eps
  int rounding_cadence = 1;

  void validate() const;
};

// One PageRank-style transition on the degree-normalized squares pattern:
// x_out = gamma (P^T x + dangling_mass v) + (1 - gamma) v, where rows of S
// with no squares teleport their full mass. Preserves sum(x) = 1.
Eigen::VectorXd isorank_step(const Eigen::VectorXd& x,
                             const Eigen::VectorXd& v,
                             const ProblemInstance& inst, double gamma);

SolveReport run_spaisorank(const ProblemInstance& inst,
                           const IsoRankConfig& cfg,
                           const std::vector<int>* truth = nullptr);

}  // namespace netalign
