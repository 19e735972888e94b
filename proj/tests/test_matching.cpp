#include <doctest.h>

#include <algorithm>
#include <vector>

#include "netalign/gen.hpp"
#include "netalign/matching.hpp"

using namespace netalign;

namespace {

// Exhaustive oracle: enumerates every matching, returns the maximum value
// and the lexicographically smallest optimal edge-index set.
struct BruteMatch {
  double value = 0.0;
  std::vector<int> selected;
  int optima = 0;
};

void brute_recurse(const WeightedBipartiteProblem& p, size_t k,
                   std::vector<char>& rows_used, std::vector<char>& cols_used,
                   std::vector<int>& current, double value, BruteMatch& best) {
  if (k == p.edges.size()) {
    if (value > best.value) {
      best.value = value;
      best.selected = current;
      best.optima = 1;
    } else if (value == best.value) {
      best.optima++;
      if (std::lexicographical_compare(current.begin(), current.end(),
                                       best.selected.begin(),
                                       best.selected.end())) {
        best.selected = current;
      }
    }
    return;
  }
  const auto& e = p.edges[k];
  if (e.w > 0.0 && !rows_used[e.row] && !cols_used[e.col]) {
    rows_used[e.row] = cols_used[e.col] = 1;
    current.push_back(static_cast<int>(k));
    brute_recurse(p, k + 1, rows_used, cols_used, current, value + e.w, best);
    current.pop_back();
    rows_used[e.row] = cols_used[e.col] = 0;
  }
  brute_recurse(p, k + 1, rows_used, cols_used, current, value, best);
}

BruteMatch brute_force_matching(const WeightedBipartiteProblem& p) {
  BruteMatch best;
  std::vector<char> rows_used(p.rows, 0), cols_used(p.cols, 0);
  std::vector<int> current;
  brute_recurse(p, 0, rows_used, cols_used, current, 0.0, best);
  return best;
}

// Lattice weights make every tie exact in double arithmetic.
WeightedBipartiteProblem random_problem(std::uint64_t seed, int rows, int cols,
                                        double density, bool lattice) {
  Rng rng(seed);
  WeightedBipartiteProblem p;
  p.rows = rows;
  p.cols = cols;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (!rng.bernoulli(density)) continue;
      double w;
      if (lattice) {
        w = static_cast<double>(1 + (rng.next_u64() % 8)) / 8.0;
      } else {
        w = 0.01 + rng.uniform();
      }
      p.edges.push_back({r, c, w});
    }
  }
  return p;
}

}  // namespace

TEST_CASE("single edge and conflicting pair") {
  MaxWeightMatcher matcher;
  WeightedBipartiteProblem p{1, 1, {{0, 0, 0.5}}};
  auto m = matcher.solve(p);
  CHECK(m.selected == std::vector<int>{0});
  CHECK(m.value == 0.5);

  WeightedBipartiteProblem q{2, 1, {{0, 0, 0.9}, {1, 0, 0.6}}};
  auto r = matcher.solve(q);
  CHECK(r.selected == std::vector<int>{0});
  CHECK(r.value == 0.9);
}

TEST_CASE("nonpositive weights are never selected") {
  MaxWeightMatcher matcher;
  WeightedBipartiteProblem p{2, 2, {{0, 0, -1.0}, {0, 1, 0.0}, {1, 1, 2.0}}};
  auto m = matcher.solve(p);
  CHECK(m.selected == std::vector<int>{2});
  CHECK(m.value == 2.0);

  WeightedBipartiteProblem all_neg{2, 2, {{0, 0, -0.5}, {1, 1, -0.1}}};
  auto e = matcher.solve(all_neg);
  CHECK(e.selected.empty());
  CHECK(e.value == 0.0);
}

TEST_CASE("duplicate pairs are rejected") {
  MaxWeightMatcher matcher;
  WeightedBipartiteProblem p{2, 2, {{0, 0, 0.5}, {0, 0, 0.7}}};
  CHECK_THROWS_AS(matcher.solve(p), InvalidInstanceError);
}

TEST_CASE("dense 6x6 grids match exhaustive enumeration") {
  MaxWeightMatcher matcher;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto p = random_problem(seed, 6, 6, 0.8, /*lattice=*/false);
    auto got = matcher.solve(p);
    auto want = brute_force_matching(p);
    CAPTURE(seed);
    CHECK(got.value == doctest::Approx(want.value).epsilon(1e-12));
    if (want.optima == 1) CHECK(got.selected == want.selected);
  }
}

TEST_CASE("lattice-weight ties resolve to the lexicographically smallest optimum") {
  MaxWeightMatcher matcher;
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    auto p = random_problem(seed, 5, 5, 0.7, /*lattice=*/true);
    auto got = matcher.solve(p, TieBreak::kLexSmallestSet);
    auto want = brute_force_matching(p);
    CAPTURE(seed);
    CHECK(got.value == want.value);  // lattice sums are exact
    CHECK(got.selected == want.selected);
  }
}

TEST_CASE("rectangular and degenerate shapes") {
  MaxWeightMatcher matcher;
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    auto p = random_problem(seed, 3, 8, 0.5, true);
    auto got = matcher.solve(p);
    auto want = brute_force_matching(p);
    CHECK(got.value == want.value);
    CHECK(got.selected == want.selected);
  }
  WeightedBipartiteProblem empty{4, 0, {}};
  CHECK(matcher.solve(empty).selected.empty());
  WeightedBipartiteProblem no_edges{0, 0, {}};
  CHECK(matcher.solve(no_edges).value == 0.0);
}

TEST_CASE("scan-order and lex tie policies agree on the optimum value") {
  MaxWeightMatcher matcher;
  for (std::uint64_t seed = 400; seed < 430; ++seed) {
    auto p = random_problem(seed, 12, 12, 0.3, true);
    auto lex = matcher.solve(p, TieBreak::kLexSmallestSet);
    auto scan = matcher.solve(p, TieBreak::kScanOrder);
    CHECK(lex.value == scan.value);
    // Whatever the policy, the result is a matching.
    std::vector<char> r_used(p.rows, 0), c_used(p.cols, 0);
    for (int k : lex.selected) {
      CHECK_FALSE(r_used[p.edges[k].row]);
      CHECK_FALSE(c_used[p.edges[k].col]);
      r_used[p.edges[k].row] = c_used[p.edges[k].col] = 1;
    }
  }
}

TEST_CASE("scaling all weights preserves the selected optimum") {
  MaxWeightMatcher matcher;
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    auto p = random_problem(seed, 6, 6, 0.6, true);
    auto base = matcher.solve(p);
    for (double c : {0.5, 2.0, 3.0, 1024.0}) {
      auto scaled = p;
      for (auto& e : scaled.edges) e.w *= c;
      auto got = matcher.solve(scaled);
      CAPTURE(seed);
      CAPTURE(c);
      CHECK(got.selected == base.selected);
    }
  }
}

TEST_CASE("solver is deterministic across repeated solves") {
  MaxWeightMatcher matcher;
  auto p = random_problem(42, 10, 10, 0.5, true);
  auto first = matcher.solve(p);
  for (int rep = 0; rep < 3; ++rep) {
    auto again = matcher.solve(p);
    CHECK(again.selected == first.selected);
    CHECK(again.value == first.value);
  }
}
