#include "netalign/isorank.hpp"

#include <algorithm>

#include "netalign/matching.hpp"

namespace netalign {

void IsoRankConfig::validate() const {
  base.validate();
  if (!(base.gamma >= 0.0 && base.gamma < 1.0)) {
    throw InvalidInstanceError("isorank gamma must lie in [0, 1)");
  }
  if (rounding_cadence < 1) {
    throw InvalidInstanceError("rounding cadence must be positive");
  }
}

Eigen::VectorXd isorank_step(const Eigen::VectorXd& x,
                             const Eigen::VectorXd& v,
                             const ProblemInstance& inst, double gamma) {
  const SquaresMatrix& s = inst.squares;
  const int m = inst.edge_count();
  Eigen::VectorXd px = Eigen::VectorXd::Zero(m);
  double dangling = 0.0;
  for (int e = 0; e < m; ++e) {
    const int deg = s.row_end(e) - s.row_begin(e);
    if (deg == 0) {
      dangling += x[e];
      continue;
    }
    const double share = x[e] / static_cast<double>(deg);
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      px[s.inner()[k]] += share;
    }
  }
  return gamma * (px + dangling * v) + (1.0 - gamma) * v;
}

SolveReport run_spaisorank(const ProblemInstance& inst,
                           const IsoRankConfig& cfg,
                           const std::vector<int>* truth) {
  cfg.validate();
  const CandidateGraph& l = inst.l;
  const double sum_w = l.weights().sum();
  if (!(sum_w > 0.0)) {
    throw InvalidInstanceError(
        "isorank needs at least one positive candidate weight to seed teleportation");
  }
  const Eigen::VectorXd v = l.weights() / sum_w;
  const double alpha = cfg.base.alpha;
  const double beta = cfg.base.beta;

  SolveReport report;
  report.solver = "isorank";
  report.termination = "max_iters";
  report.best = evaluate_solution(inst, {}, {"isorank", 0, "empty"});

  const int m = l.edge_count();
  std::vector<int> rows_arr(m), cols_arr(m);
  for (int e = 0; e < m; ++e) {
    rows_arr[e] = l.head(e);
    cols_arr[e] = l.tail(e);
  }
  MaxWeightMatcher matcher;

  Eigen::VectorXd x = v;
  for (int k = 1; k <= cfg.base.max_iters; ++k) {
    Eigen::VectorXd next = isorank_step(x, v, inst, cfg.base.gamma);
    const double residual = (next - x).cwiseAbs().sum();
    x = std::move(next);

    const bool converged = residual < cfg.base.tolerance;
    const bool last = converged || k == cfg.base.max_iters;

    IterationRecord rec;
    rec.iteration = k;
    rec.residual = residual;
    if (k % cfg.rounding_cadence == 0 || last) {
      auto match = matcher.solve(l.rows(), l.cols(), rows_arr, cols_arr,
                                 {x.data(), static_cast<size_t>(x.size())});
      auto candidate = evaluate_solution(inst, std::move(match.selected),
                                         {"isorank", k, "mwm"});
      rec.lower = candidate.objective(alpha, beta);
      rec.weight = candidate.weight;
      rec.overlaps = static_cast<double>(candidate.overlaps);
      if (truth && !truth->empty()) {
        rec.recovery = recovery_fraction(candidate.selected, *truth);
      }
      if (rec.lower > report.best.objective(alpha, beta)) {
        report.best = std::move(candidate);
      }
    }
    report.iterations.push_back(rec);
    if (converged) {
      report.termination = "converged";
      break;
    }
  }
  return report;
}

}  // namespace netalign
