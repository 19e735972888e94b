#pragma once

#include "netalign/bp.hpp"
#include "netalign/brute_force.hpp"

namespace netalign {

// Standard two-type max-product message passing on the explicit factor
// graph (matching factors per vertex, one square factor per stored pair,
// value tables over {0,1} kept in log domain). Returns log(nu(1)/nu(0)) of
// every variable-to-factor message at iteration t, laid out like BpMessages.
//
// This is an equivalence oracle for bp_step and is deliberately independent
// of its implementation; it is only intended for desk-scale instances.
BpMessages oracle_max_product(const ProblemInstance& inst, double alpha,
                              double beta, int t, int edge_cap = 20,
                              int square_cap = 40);

}  // namespace netalign
