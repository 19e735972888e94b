#pragma once

#include <vector>

#include "netalign/instance.hpp"
#include "netalign/solution.hpp"

namespace netalign {

enum class StepSchedule { kConstant, kHalving };

struct MrConfig {
  SolverConfig base;  // gamma is the subgradient step size
  StepSchedule schedule = StepSchedule::kConstant;
  int stall_window = 100;  // halving mode: shrink after this many stalled iterations
  int threads = 1;         // row matchings may run in parallel

  void validate() const;
};

// Lagrange multipliers over ordered square pairs, one per stored nonzero of
// the squares pattern, clamped to [-0.5, 0.5]. Only upper-triangle slots
// ever move; the antisymmetric combination u[e,f] - u[f,e] is what enters
// the row-matching weights.
struct MrState {
  int k = 0;
  Eigen::VectorXd u;
  AlignmentSolution best_lower;
  double best_upper = std::numeric_limits<double>::infinity();
};

MrState mr_init(const ProblemInstance& inst);

// Result of the per-row small matchings: d[e] is the optimal value of the
// matching over e's square partners, s_l marks the chosen partner slots.
struct RowMatchResult {
  Eigen::VectorXd d;
  std::vector<char> s_l;
};

// Row weights are beta/2 + u[e,f] - u[f,e]; nonpositive partners are
// excluded, so d is nonnegative.
RowMatchResult maxrowmatch(const Eigen::VectorXd& u,
                           const ProblemInstance& inst, double beta,
                           int threads = 1);

struct MrIterationResult {
  MrState state;
  double upper = 0.0;
  AlignmentSolution candidate;
};

MrIterationResult mr_iterate(const MrState& state,
                             const ProblemInstance& inst, double alpha,
                             double beta, double gamma_step, int threads = 1);

SolveReport run_mr(const ProblemInstance& inst, const MrConfig& cfg,
                   const std::vector<int>* truth = nullptr);

}  // namespace netalign
