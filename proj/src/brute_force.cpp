#include "netalign/brute_force.hpp"

#include <string>
#include <vector>

namespace netalign {

namespace {

struct Enumerator {
  const ProblemInstance& inst;
  double alpha, beta;

  std::vector<char> a_used, b_used, in;
  std::vector<int> current;
  double weight = 0.0;
  long long overlaps = 0;

  std::vector<int> best;
  double best_objective = 0.0;   // empty matching
  long long ties = 1;            // matchings attaining best_objective

  explicit Enumerator(const ProblemInstance& i, double a, double b)
      : inst(i), alpha(a), beta(b),
        a_used(i.l.rows(), 0), b_used(i.l.cols(), 0), in(i.edge_count(), 0) {}

  int new_overlaps(int e) const {
    const auto& s = inst.squares;
    int n = 0;
    for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
      if (in[s.inner()[k]]) n++;
    }
    return n;
  }

  void consider() {
    const double obj = alpha * weight + beta * static_cast<double>(overlaps);
    if (obj > best_objective) {
      best_objective = obj;
      best = current;
      ties = 1;
    } else if (obj == best_objective) {
      ties++;
      // Include-before-exclude DFS order: the first optimum found prefers
      // low-indexed edges; keep it.
    }
  }

  void run(int e) {
    if (e == inst.edge_count()) {
      consider();
      return;
    }
    const int i = inst.l.head(e), ip = inst.l.tail(e);
    if (!a_used[i] && !b_used[ip]) {
      const int added = new_overlaps(e);
      a_used[i] = b_used[ip] = in[e] = 1;
      current.push_back(e);
      weight += inst.l.weight(e);
      overlaps += added;
      run(e + 1);
      weight -= inst.l.weight(e);
      overlaps -= added;
      current.pop_back();
      a_used[i] = b_used[ip] = in[e] = 0;
    }
    run(e + 1);
  }
};

}  // namespace

AlignmentSolution brute_force_optimum(const ProblemInstance& inst,
                                      double alpha, double beta,
                                      int edge_cap) {
  if (inst.edge_count() > edge_cap) {
    throw OracleScaleError("brute force refused: " +
                           std::to_string(inst.edge_count()) +
                           " candidate edges exceed cap " +
                           std::to_string(edge_cap));
  }
  Enumerator en(inst, alpha, beta);
  en.run(0);
  return evaluate_solution(inst, en.best, {"brute_force", 0, ""});
}

bool brute_force_unique_optimum(const ProblemInstance& inst, double alpha,
                                double beta, int edge_cap) {
  if (inst.edge_count() > edge_cap) {
    throw OracleScaleError("brute force refused: " +
                           std::to_string(inst.edge_count()) +
                           " candidate edges exceed cap " +
                           std::to_string(edge_cap));
  }
  Enumerator en(inst, alpha, beta);
  en.run(0);
  return en.ties == 1;
}

}  // namespace netalign
