#include "netalign/mr.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "netalign/matching.hpp"

namespace netalign {

void MrConfig::validate() const {
  base.validate();
  if (stall_window < 1) {
    throw InvalidInstanceError("stall window must be positive");
  }
  if (threads < 1) {
    throw InvalidInstanceError("thread count must be positive");
  }
}

MrState mr_init(const ProblemInstance& inst) {
  MrState s;
  s.k = 0;
  s.u = Eigen::VectorXd::Zero(inst.squares.nnz());
  s.best_lower = evaluate_solution(inst, {}, {"mr", 0, "empty"});
  return s;
}

namespace {

// Small matchings for a contiguous range of rows; results land in disjoint
// slots, so ranges can run on separate threads with identical results.
void maxrowmatch_range(const Eigen::VectorXd& u, const ProblemInstance& inst,
                       double beta, int begin_row, int end_row,
                       RowMatchResult& out) {
  const SquaresMatrix& s = inst.squares;
  const CandidateGraph& l = inst.l;
  MaxWeightMatcher matcher;

  // Per-call compaction of the partner endpoints into dense ids.
  std::vector<int> a_stamp(l.rows(), -1), b_stamp(l.cols(), -1);
  std::vector<int> a_id(l.rows()), b_id(l.cols());
  std::vector<int> rows_arr, cols_arr, slot_arr;
  std::vector<double> w_arr;

  for (int e = begin_row; e < end_row; ++e) {
    rows_arr.clear();
    cols_arr.clear();
    w_arr.clear();
    slot_arr.clear();
    int na = 0, nb = 0;
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      const double w = beta / 2.0 + u[k] - u[s.transpose_perm[k]];
      if (w <= 0.0) continue;
      const int f = s.inner()[k];
      const int j = l.head(f), jp = l.tail(f);
      if (a_stamp[j] != e) {
        a_stamp[j] = e;
        a_id[j] = na++;
      }
      if (b_stamp[jp] != e) {
        b_stamp[jp] = e;
        b_id[jp] = nb++;
      }
      rows_arr.push_back(a_id[j]);
      cols_arr.push_back(b_id[jp]);
      w_arr.push_back(w);
      slot_arr.push_back(k);
    }
    if (rows_arr.empty()) {
      out.d[e] = 0.0;
      continue;
    }
    auto match =
        matcher.solve(na, nb, rows_arr, cols_arr, w_arr, TieBreak::kScanOrder);
    out.d[e] = match.value;
    for (int sel : match.selected) out.s_l[slot_arr[sel]] = 1;
  }
}

}  // namespace

RowMatchResult maxrowmatch(const Eigen::VectorXd& u,
                           const ProblemInstance& inst, double beta,
                           int threads) {
  const int m = inst.edge_count();
  RowMatchResult out;
  out.d = Eigen::VectorXd::Zero(m);
  out.s_l.assign(inst.squares.nnz(), 0);

  threads = std::max(1, std::min(threads, m));
  if (threads == 1) {
    maxrowmatch_range(u, inst, beta, 0, m, out);
    return out;
  }
  std::vector<std::thread> pool;
  const int chunk = (m + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(m, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(maxrowmatch_range, std::cref(u), std::cref(inst), beta,
                      lo, hi, std::ref(out));
  }
  for (auto& th : pool) th.join();
  return out;
}

MrIterationResult mr_iterate(const MrState& state, const ProblemInstance& inst,
                             double alpha, double beta, double gamma_step,
                             int threads) {
  const CandidateGraph& l = inst.l;
  const SquaresMatrix& s = inst.squares;
  const int m = inst.edge_count();

  RowMatchResult rm = maxrowmatch(state.u, inst, beta, threads);

  Eigen::VectorXd wk = alpha * l.weights() + rm.d;
  std::vector<int> rows_arr(m), cols_arr(m);
  for (int e = 0; e < m; ++e) {
    rows_arr[e] = l.head(e);
    cols_arr[e] = l.tail(e);
  }
  MaxWeightMatcher matcher;
  auto large = matcher.solve(l.rows(), l.cols(), rows_arr, cols_arr,
                             {wk.data(), static_cast<size_t>(wk.size())},
                             TieBreak::kLexSmallestSet);

  MrIterationResult result;
  result.upper = large.value;
  result.candidate = evaluate_solution(inst, large.selected,
                                       {"mr", state.k + 1, "large-matching"});

  // Subgradient step on the upper triangle:
  // F[e,f] = u[e,f] - g x_e S_L[e,f] + g x_f S_L[f,e], then clamp.
  result.state.k = state.k + 1;
  result.state.u = state.u;
  Eigen::VectorXd& u = result.state.u;
  for (int e : result.candidate.selected) {
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      if (!rm.s_l[k]) continue;
      const int f = s.inner()[k];
      if (e < f) {
        u[k] -= gamma_step;
      } else {
        u[s.transpose_perm[k]] += gamma_step;
      }
    }
  }
  u = u.cwiseMax(-0.5).cwiseMin(0.5);

  result.state.best_lower = state.best_lower;
  result.state.best_upper = std::min(state.best_upper, result.upper);
  const double obj = result.candidate.objective(alpha, beta);
  if (obj > result.state.best_lower.objective(alpha, beta)) {
    result.state.best_lower = result.candidate;
  }
  return result;
}

SolveReport run_mr(const ProblemInstance& inst, const MrConfig& cfg,
                   const std::vector<int>* truth) {
  cfg.validate();
  const double alpha = cfg.base.alpha;
  const double beta = cfg.base.beta;

  SolveReport report;
  report.solver = "mr";
  report.termination = "max_iters";

  MrState state = mr_init(inst);
  double gamma_step = cfg.base.gamma;
  int stalled = 0;

  for (int k = 1; k <= cfg.base.max_iters; ++k) {
    MrIterationResult it = mr_iterate(state, inst, alpha, beta, gamma_step,
                                      cfg.threads);

    if (cfg.schedule == StepSchedule::kHalving) {
      if (it.state.best_upper < state.best_upper) {
        stalled = 0;
      } else if (++stalled >= cfg.stall_window) {
        gamma_step /= 2.0;
        stalled = 0;
      }
    }

    IterationRecord rec;
    rec.iteration = k;
    rec.lower = it.candidate.objective(alpha, beta);
    rec.upper = it.upper;
    rec.weight = it.candidate.weight;
    rec.overlaps = static_cast<double>(it.candidate.overlaps);
    rec.residual = (it.state.u - state.u).cwiseAbs().maxCoeff();
    if (truth && !truth->empty()) {
      rec.recovery = recovery_fraction(it.candidate.selected, *truth);
    }
    report.iterations.push_back(rec);

    state = std::move(it.state);

    const double gap =
        state.best_upper - state.best_lower.objective(alpha, beta);
    if (gap <= 1e-12 * std::max(1.0, std::abs(state.best_upper))) {
      report.termination = "gap_closed";
      break;
    }
  }
  report.best = state.best_lower;
  report.best_upper = state.best_upper;
  return report;
}

}  // namespace netalign
