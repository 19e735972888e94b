#pragma once

#include <vector>

#include "netalign/instance.hpp"
#include "netalign/solution.hpp"

namespace netalign {

enum class DampingMode { kPower, kConstant };

struct BpConfig {
  SolverConfig base;  // gamma is the damping factor
  DampingMode damping = DampingMode::kPower;
  int oscillation_window = 10;
  int rounding_cadence = 1;

  void validate() const;
};

// Max-product messages at one iteration. y[e] flows from edge e toward the
// matching factor of its A endpoint, z[e] toward its B endpoint. sq holds
// one value per stored nonzero of the squares pattern: slot (e,f) carries
// the message from edge e to the square factor shared with f.
struct BpMessages {
  Eigen::VectorXd y, z, sq;
};

struct BpState {
  int t = 0;
  BpMessages m;
};

// All messages start at zero.
BpState bp_init(const ProblemInstance& inst);

// One undamped application of the message recurrences to state.m.
BpMessages bp_step(const BpState& state, const ProblemInstance& inst,
                   double alpha, double beta);

// Power mode blends with weight gamma^t, constant mode with weight gamma.
BpMessages damp(const BpMessages& prev, const BpMessages& next, int t,
                double gamma, DampingMode mode);

// The per-A-vertex argmax selection M(t) (may violate the matching
// constraints on the B side).
std::vector<int> greedy_selection(const BpState& state,
                                  const ProblemInstance& inst);

// Three candidates: the greedy selection repaired to a matching (conflicts
// dropped keeping the larger incoming message, ties to the smaller edge
// index), and maximum-weight matchings over L weighted by y and by z.
std::vector<AlignmentSolution> decode(const BpState& state,
                                      const ProblemInstance& inst,
                                      double alpha, double beta);

SolveReport run_bp(const ProblemInstance& inst, const BpConfig& cfg,
                   const std::vector<int>* truth = nullptr);

}  // namespace netalign
