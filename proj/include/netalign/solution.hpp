#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "netalign/instance.hpp"

namespace netalign {

class InfeasibleSolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UndefinedMetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Where a solution came from: solver id, iteration, and which decode
// candidate produced it.
struct SolutionSource {
  std::string solver;
  int iteration = -1;
  std::string detail;
};

// A feasible matching in L. `weight` and `overlaps` are redundant with
// `selected` but frozen at evaluation time; overlap arithmetic is exact.
struct AlignmentSolution {
  std::vector<int> selected;  // ascending candidate-edge indices
  double weight = 0.0;
  long long overlaps = 0;
  SolutionSource source;

  double objective(double alpha, double beta) const {
    return alpha * weight + beta * static_cast<double>(overlaps);
  }
};

// Endpoint conflicts of a proposed selection; empty means A x <= 1 holds.
struct FeasibilityViolation {
  bool a_side = false;
  int vertex = -1;
  std::vector<int> edges;
};

std::vector<FeasibilityViolation> feasibility_violations(
    const CandidateGraph& l, std::span<const int> selected);

bool is_matching(const CandidateGraph& l, std::span<const int> selected);

// Exact overlap count of a selection: unordered pairs {e,f} of selected
// edges with S[e,f] = 1.
long long count_overlaps(const SquaresMatrix& s, std::span<const int> selected);

// Scores a selection, verifying feasibility first.
// Throws InfeasibleSolutionError when two selected edges share an endpoint.
AlignmentSolution evaluate_solution(const ProblemInstance& inst,
                                    std::vector<int> selected,
                                    SolutionSource source = {});

// alpha * w^T x + (beta/2) x^T S x for a feasible selection.
double objective_value(const ProblemInstance& inst,
                       std::span<const int> selected, double alpha,
                       double beta);

// |selected ∩ truth| / |truth|. Throws UndefinedMetricError on empty truth.
double recovery_fraction(std::span<const int> selected,
                         std::span<const int> truth);

struct SolverConfig {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.999;
  int max_iters = 100;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;

  void validate() const;
};

constexpr double kNoValue = std::numeric_limits<double>::quiet_NaN();

// One recorded iteration of a solver run. `lower` is the objective of the
// iteration's integer candidate; `upper` is the relaxation bound (MR only).
struct IterationRecord {
  int iteration = 0;
  double lower = kNoValue;
  double upper = kNoValue;
  double weight = kNoValue;
  double overlaps = kNoValue;
  double residual = kNoValue;
  double recovery = kNoValue;
};

struct SolveReport {
  std::string solver;
  std::vector<IterationRecord> iterations;
  AlignmentSolution best;            // best-objective iterate ever generated
  double best_upper = kNoValue;      // min over iterations (MR only)
  std::string termination;           // "max_iters", "converged", "oscillation"

  bool has_upper() const { return best_upper == best_upper; }
};

}  // namespace netalign
