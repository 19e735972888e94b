#include "netalign/solution.hpp"

#include <algorithm>
#include <utility>

namespace netalign {

std::vector<FeasibilityViolation> feasibility_violations(
    const CandidateGraph& l, std::span<const int> selected) {
  std::vector<std::vector<int>> at_a(l.rows()), at_b(l.cols());
  for (int e : selected) {
    at_a[l.head(e)].push_back(e);
    at_b[l.tail(e)].push_back(e);
  }
  std::vector<FeasibilityViolation> out;
  for (int i = 0; i < l.rows(); ++i) {
    if (at_a[i].size() > 1) out.push_back({true, i, at_a[i]});
  }
  for (int ip = 0; ip < l.cols(); ++ip) {
    if (at_b[ip].size() > 1) out.push_back({false, ip, at_b[ip]});
  }
  return out;
}

bool is_matching(const CandidateGraph& l, std::span<const int> selected) {
  return feasibility_violations(l, selected).empty();
}

long long count_overlaps(const SquaresMatrix& s,
                         std::span<const int> selected) {
  std::vector<char> in(s.dim(), 0);
  for (int e : selected) in[e] = 1;
  long long twice = 0;
  for (int e : selected) {
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      if (in[s.inner()[k]]) twice++;
    }
  }
  return twice / 2;
}

AlignmentSolution evaluate_solution(const ProblemInstance& inst,
                                    std::vector<int> selected,
                                    SolutionSource source) {
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()),
                 selected.end());
  for (int e : selected) {
    if (e < 0 || e >= inst.edge_count()) {
      throw InvalidInstanceError("selected edge index out of range: " +
                                 std::to_string(e));
    }
  }
  auto violations = feasibility_violations(inst.l, selected);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw InfeasibleSolutionError(
        "selection is not a matching: vertex " + std::to_string(v.vertex) +
        (v.a_side ? " of A" : " of B") + " has " +
        std::to_string(v.edges.size()) + " selected edges");
  }

  AlignmentSolution sol;
  sol.weight = 0.0;
  for (int e : selected) sol.weight += inst.l.weight(e);
  sol.overlaps = count_overlaps(inst.squares, selected);
  sol.selected = std::move(selected);
  sol.source = std::move(source);
  return sol;
}

double objective_value(const ProblemInstance& inst,
                       std::span<const int> selected, double alpha,
                       double beta) {
  auto sol = evaluate_solution(
      inst, std::vector<int>(selected.begin(), selected.end()));
  return sol.objective(alpha, beta);
}

double recovery_fraction(std::span<const int> selected,
                         std::span<const int> truth) {
  if (truth.empty()) {
    throw UndefinedMetricError("recovery fraction is undefined for an empty truth set");
  }
  std::vector<int> sel(selected.begin(), selected.end());
  std::vector<int> tr(truth.begin(), truth.end());
  std::sort(sel.begin(), sel.end());
  std::sort(tr.begin(), tr.end());
  std::vector<int> common;
  std::set_intersection(sel.begin(), sel.end(), tr.begin(), tr.end(),
                        std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(tr.size());
}

void SolverConfig::validate() const {
  if (alpha < 0.0 || beta < 0.0) {
    throw InvalidInstanceError("alpha and beta must be nonnegative");
  }
  if (alpha == 0.0 && beta == 0.0) {
    throw InvalidInstanceError("alpha and beta cannot both be zero");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw InvalidInstanceError("gamma must lie in [0, 1]");
  }
  if (max_iters <= 0) {
    throw InvalidInstanceError("max_iters must be positive");
  }
  if (!(tolerance > 0.0)) {
    throw InvalidInstanceError("tolerance must be positive");
  }
}

}  // namespace netalign
