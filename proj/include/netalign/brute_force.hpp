#pragma once

#include "netalign/solution.hpp"

namespace netalign {

class OracleScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleCap = 20;

// Globally optimal NAQP solution by exhaustive enumeration of all matchings
// in L. Ties resolve deterministically to the first optimum in
// include-before-exclude DFS order over ascending edge indices.
// Refuses instances with more than `edge_cap` edges.
AlignmentSolution brute_force_optimum(const ProblemInstance& inst,
                                      double alpha, double beta,
                                      int edge_cap = kDefaultOracleCap);

// True when exactly one matching attains the optimum objective.
bool brute_force_unique_optimum(const ProblemInstance& inst, double alpha,
                                double beta, int edge_cap = kDefaultOracleCap);

}  // namespace netalign
