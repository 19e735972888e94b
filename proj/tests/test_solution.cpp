#include <doctest.h>

#include "fig2.hpp"
#include "netalign/brute_force.hpp"
#include "netalign/solution.hpp"
#include "test_util.hpp"

using namespace netalign;

TEST_CASE("objective on the published example matching") {
  auto inst = fig2::instance();
  // (1,1'), (2,2'), (3,3'), (4,4'), (5,5') in canonical indices.
  auto sol = evaluate_solution(inst, {0, 3, 7, 9, 10});
  CHECK(sol.weight == doctest::Approx(2.6).epsilon(1e-12));
  CHECK(sol.overlaps == 4);
  CHECK(sol.objective(1.0, 1.0) == doctest::Approx(6.6).epsilon(1e-12));
}

TEST_CASE("objective edge cases") {
  auto inst = fig2::instance();
  auto empty = evaluate_solution(inst, {});
  CHECK(empty.objective(1.0, 1.0) == 0.0);

  for (int e = 0; e < inst.edge_count(); ++e) {
    auto single = evaluate_solution(inst, {e});
    CHECK(single.overlaps == 0);  // zero diagonal
    CHECK(single.objective(2.0, 3.0) ==
          doctest::Approx(2.0 * inst.l.weight(e)));
  }
}

TEST_CASE("infeasible selections are rejected with violations") {
  auto inst = fig2::instance();
  // canonical 0 = (1,1') and 2 = (2,1') share B-vertex 1'.
  CHECK_THROWS_AS(evaluate_solution(inst, {0, 2}), InfeasibleSolutionError);
  auto viol = feasibility_violations(inst.l, std::vector<int>{0, 2});
  REQUIRE(viol.size() == 1);
  CHECK_FALSE(viol[0].a_side);
  CHECK(viol[0].vertex == 0);
  CHECK(viol[0].edges == std::vector<int>{0, 2});
  CHECK_FALSE(is_matching(inst.l, std::vector<int>{0, 2}));
  CHECK(is_matching(inst.l, std::vector<int>{0, 3}));
}

TEST_CASE("recovery fraction") {
  std::vector<int> truth(400);
  for (int i = 0; i < 400; ++i) truth[i] = i;
  std::vector<int> sel(truth.begin(), truth.begin() + 360);
  CHECK(recovery_fraction(sel, truth) == doctest::Approx(0.9));
  CHECK(recovery_fraction(truth, truth) == 1.0);
  CHECK(recovery_fraction(std::vector<int>{401, 402}, truth) == 0.0);
  CHECK_THROWS_AS(recovery_fraction(sel, std::vector<int>{}),
                  UndefinedMetricError);
}

TEST_CASE("overlap count equals the quadratic form on random selections") {
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    auto inst = test_util::random_instance(seed, 6, 6, 0.4, 14);
    Rng rng(seed * 31 + 1);
    // Greedily build a random matching.
    std::vector<char> a_used(inst.l.rows(), 0), b_used(inst.l.cols(), 0);
    std::vector<int> sel;
    for (int e = 0; e < inst.edge_count(); ++e) {
      if (rng.bernoulli(0.5) && !a_used[inst.l.head(e)] &&
          !b_used[inst.l.tail(e)]) {
        a_used[inst.l.head(e)] = b_used[inst.l.tail(e)] = 1;
        sel.push_back(e);
      }
    }
    Eigen::VectorXd x = Eigen::VectorXd::Zero(inst.edge_count());
    for (int e : sel) x[e] = 1.0;
    const double quad = 0.5 * x.dot(inst.squares.pattern * x);
    CHECK(double(count_overlaps(inst.squares, sel)) == quad);
  }
}

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  cfg.alpha = 0.0;
  cfg.beta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInstanceError);
  cfg.beta = 1.0;
  CHECK_NOTHROW(cfg.validate());
  cfg.gamma = 1.5;
  CHECK_THROWS_AS(cfg.validate(), InvalidInstanceError);
}

TEST_CASE("brute force handles the trivial cases") {
  auto a = SimpleGraph::from_edges(2, {});
  auto b = SimpleGraph::from_edges(2, {});
  auto single = ProblemInstance::build(
      a, b, CandidateGraph::from_edges(2, 2, {{0, 0, 0.7}}));
  auto best = brute_force_optimum(single, 1.0, 0.0);
  CHECK(best.selected == std::vector<int>{0});
  CHECK(best.objective(1.0, 0.0) == doctest::Approx(0.7));

  auto conflict = ProblemInstance::build(
      a, b, CandidateGraph::from_edges(2, 2, {{0, 0, 0.9}, {1, 0, 0.3}}));
  auto pick = brute_force_optimum(conflict, 1.0, 0.0);
  CHECK(pick.selected == std::vector<int>{0});

  auto big = test_util::random_instance(7, 8, 8, 0.3, 25);
  CHECK_THROWS_AS(brute_force_optimum(big, 1.0, 1.0), OracleScaleError);
}

TEST_CASE("Gibbs-support enumeration matches matching enumeration at oracle scale") {
  // Enumerating feasible matchings is the same search as enumerating the
  // nonzero-probability assignments: each matching determines its square
  // indicator uniquely, and the exponent is the objective.
  for (std::uint64_t seed = 60; seed < 66; ++seed) {
    auto inst = test_util::random_instance(seed, 5, 5, 0.5, 10);
    const double alpha = 1.0, beta = 1.0;
    auto oracle = brute_force_optimum(inst, alpha, beta);

    const int m = inst.edge_count();
    double best_exponent = 0.0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> sel;
      for (int e = 0; e < m; ++e) {
        if (mask & (1 << e)) sel.push_back(e);
      }
      if (!is_matching(inst.l, sel)) continue;  // zero probability
      double weight = 0.0;
      for (int e : sel) weight += inst.l.weight(e);
      const double exponent =
          alpha * weight + beta * double(count_overlaps(inst.squares, sel));
      best_exponent = std::max(best_exponent, exponent);
    }
    CHECK(oracle.objective(alpha, beta) ==
          doctest::Approx(best_exponent).epsilon(1e-12));
  }
}
