#include "netalign/bp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "netalign/matching.hpp"

namespace netalign {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Per-vertex largest and second-largest incoming value, so the maximum over
// competitors of an edge is O(1).
struct Top2 {
  Eigen::VectorXd max1, max2;
  Eigen::VectorXi arg1;

  void compute(int vertices, const CandidateGraph& l, bool a_side,
               const Eigen::VectorXd& value) {
    max1.setConstant(vertices, kNegInf);
    max2.setConstant(vertices, kNegInf);
    arg1.setConstant(vertices, -1);
    for (int e = 0; e < l.edge_count(); ++e) {
      const int v = a_side ? l.head(e) : l.tail(e);
      const double x = value[e];
      if (x > max1[v]) {
        max2[v] = max1[v];
        max1[v] = x;
        arg1[v] = e;
      } else if (x > max2[v]) {
        max2[v] = x;
      }
    }
  }

  double excluding(int v, int e) const {
    return arg1[v] == e ? max2[v] : max1[v];
  }
};

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

std::uint64_t hash_selection(const std::vector<int>& sel) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (int e : sel) {
    for (int byte = 0; byte < 4; ++byte) {
      h ^= static_cast<std::uint64_t>((e >> (8 * byte)) & 0xff);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace

void BpConfig::validate() const {
  base.validate();
  if (oscillation_window < 2) {
    throw InvalidInstanceError("oscillation window must be at least 2");
  }
  if (rounding_cadence < 1) {
    throw InvalidInstanceError("rounding cadence must be positive");
  }
}

BpState bp_init(const ProblemInstance& inst) {
  BpState s;
  s.t = 0;
  s.m.y = Eigen::VectorXd::Zero(inst.edge_count());
  s.m.z = Eigen::VectorXd::Zero(inst.edge_count());
  s.m.sq = Eigen::VectorXd::Zero(inst.squares.nnz());
  return s;
}

BpMessages bp_step(const BpState& state, const ProblemInstance& inst,
                   double alpha, double beta) {
  const CandidateGraph& l = inst.l;
  const SquaresMatrix& s = inst.squares;
  const int m = l.edge_count();
  const double half_beta = beta / 2.0;

  Top2 at_a, at_b;
  at_a.compute(l.rows(), l, true, state.m.y);
  at_b.compute(l.cols(), l, false, state.m.z);

  // term[k] for slot (e,f): the square contribution of partner f to edge e,
  // min(beta/2, (beta/2 + sq[f->e])^+). Accumulation per recipient runs in
  // storage order, so sums are reproducible.
  BpMessages next;
  next.y.resize(m);
  next.z.resize(m);
  next.sq.resize(s.nnz());
  Eigen::VectorXd term(s.nnz());
  Eigen::VectorXd term_sum(m);
  for (int e = 0; e < m; ++e) {
    double acc = 0.0;
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      const double t =
          std::clamp(half_beta + state.m.sq[s.transpose_perm[k]], 0.0, half_beta);
      term[k] = t;
      acc += t;
    }
    term_sum[e] = acc;
  }

  for (int e = 0; e < m; ++e) {
    const double aw = alpha * l.weight(e);
    const double comp_z = positive_part(at_b.excluding(l.tail(e), e));
    const double comp_y = positive_part(at_a.excluding(l.head(e), e));
    next.y[e] = aw - comp_z + term_sum[e];
    next.z[e] = aw - comp_y + term_sum[e];
    const double base = aw - comp_z - comp_y + term_sum[e];
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      next.sq[k] = base - term[k];
    }
  }
  return next;
}

BpMessages damp(const BpMessages& prev, const BpMessages& next, int t,
                double gamma, DampingMode mode) {
  const double f = mode == DampingMode::kPower
                       ? std::pow(gamma, static_cast<double>(t))
                       : gamma;
  BpMessages out;
  out.y = (1.0 - f) * prev.y + f * next.y;
  out.z = (1.0 - f) * prev.z + f * next.z;
  out.sq = (1.0 - f) * prev.sq + f * next.sq;
  return out;
}

std::vector<int> greedy_selection(const BpState& state,
                                  const ProblemInstance& inst) {
  std::vector<int> sel;
  for (int i = 0; i < inst.l.rows(); ++i) {
    int best = -1;
    for (int e : inst.l.edges_at_a(i)) {
      if (best < 0 || state.m.y[e] > state.m.y[best]) best = e;
    }
    if (best >= 0) sel.push_back(best);
  }
  return sel;
}

std::vector<AlignmentSolution> decode(const BpState& state,
                                      const ProblemInstance& inst,
                                      double alpha, double beta) {
  const CandidateGraph& l = inst.l;
  std::vector<AlignmentSolution> out;

  // Greedy selection repaired to a matching: keep in descending message
  // order, smaller index first on ties.
  {
    std::vector<int> sel = greedy_selection(state, inst);
    std::sort(sel.begin(), sel.end(), [&](int a, int b) {
      if (state.m.y[a] != state.m.y[b]) return state.m.y[a] > state.m.y[b];
      return a < b;
    });
    std::vector<char> a_used(l.rows(), 0), b_used(l.cols(), 0);
    std::vector<int> repaired;
    for (int e : sel) {
      if (!a_used[l.head(e)] && !b_used[l.tail(e)]) {
        a_used[l.head(e)] = b_used[l.tail(e)] = 1;
        repaired.push_back(e);
      }
    }
    out.push_back(evaluate_solution(inst, std::move(repaired),
                                    {"bp", state.t, "greedy"}));
  }

  MaxWeightMatcher matcher;
  std::vector<int> rows_arr(l.edge_count()), cols_arr(l.edge_count());
  for (int e = 0; e < l.edge_count(); ++e) {
    rows_arr[e] = l.head(e);
    cols_arr[e] = l.tail(e);
  }
  for (const auto* msgs : {&state.m.y, &state.m.z}) {
    auto match = matcher.solve(l.rows(), l.cols(), rows_arr, cols_arr,
                               {msgs->data(), static_cast<size_t>(msgs->size())});
    out.push_back(evaluate_solution(
        inst, std::move(match.selected),
        {"bp", state.t, msgs == &state.m.y ? "mwm-y" : "mwm-z"}));
  }
  return out;
}

SolveReport run_bp(const ProblemInstance& inst, const BpConfig& cfg,
                   const std::vector<int>* truth) {
  cfg.validate();
  const double alpha = cfg.base.alpha;
  const double beta = cfg.base.beta;

  SolveReport report;
  report.solver = "bp";
  report.termination = "max_iters";
  report.best = evaluate_solution(inst, {}, {"bp", 0, "empty"});

  BpState state = bp_init(inst);
  std::deque<std::uint64_t> recent_hashes;

  for (int t = 1; t <= cfg.base.max_iters; ++t) {
    BpMessages next = bp_step(state, inst, alpha, beta);
    BpMessages blended = damp(state.m, next, t, cfg.base.gamma, cfg.damping);
    double residual = 0.0;
    residual = std::max(residual, (blended.y - state.m.y).cwiseAbs().maxCoeff());
    residual = std::max(residual, (blended.z - state.m.z).cwiseAbs().maxCoeff());
    if (blended.sq.size() > 0) {
      residual =
          std::max(residual, (blended.sq - state.m.sq).cwiseAbs().maxCoeff());
    }
    state.m = std::move(blended);
    state.t = t;

    const bool converged = residual < cfg.base.tolerance;

    // Oscillation: the greedy set equals one seen 2..window iterations ago.
    const std::vector<int> greedy = greedy_selection(state, inst);
    const std::uint64_t h = hash_selection(greedy);
    bool oscillating = false;
    for (size_t back = 1; back < recent_hashes.size(); ++back) {
      if (recent_hashes[back] == h) {
        oscillating = true;
        break;
      }
    }
    recent_hashes.push_front(h);
    if (static_cast<int>(recent_hashes.size()) > cfg.oscillation_window) {
      recent_hashes.pop_back();
    }

    const bool last = converged || oscillating || t == cfg.base.max_iters;

    IterationRecord rec;
    rec.iteration = t;
    rec.residual = residual;
    if (t % cfg.rounding_cadence == 0 || last) {
      const AlignmentSolution* iter_best = nullptr;
      auto candidates = decode(state, inst, alpha, beta);
      for (const auto& cand : candidates) {
        if (!iter_best ||
            cand.objective(alpha, beta) > iter_best->objective(alpha, beta)) {
          iter_best = &cand;
        }
      }
      rec.lower = iter_best->objective(alpha, beta);
      rec.weight = iter_best->weight;
      rec.overlaps = static_cast<double>(iter_best->overlaps);
      if (truth && !truth->empty()) {
        rec.recovery = recovery_fraction(iter_best->selected, *truth);
      }
      if (rec.lower > report.best.objective(alpha, beta)) {
        report.best = *iter_best;
      }
    }
    report.iterations.push_back(rec);

    if (converged) {
      report.termination = "converged";
      break;
    }
    if (oscillating) {
      report.termination = "oscillation";
      break;
    }
  }
  return report;
}

}  // namespace netalign
