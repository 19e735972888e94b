#include <doctest.h>

#include <Eigen/Dense>

#include "fig2.hpp"
#include "netalign/instance.hpp"
#include "test_util.hpp"

using namespace netalign;

TEST_CASE("squares matrix reproduces the published 12x12 pattern") {
  auto inst = fig2::instance();
  const auto& s = inst.squares;
  REQUIRE(s.dim() == 12);

  Eigen::MatrixXd dense = Eigen::MatrixXd(s.pattern);
  const auto& perm = fig2::kPrintedToCanonical;
  for (int r = 0; r < 12; ++r) {
    for (int c = 0; c < 12; ++c) {
      CAPTURE(r);
      CAPTURE(c);
      CHECK(dense(perm[r], perm[c]) == double(fig2::kPrintedS[r][c]));
    }
  }
  // Weight vector under the published permutation.
  for (int r = 0; r < 12; ++r) {
    CHECK(inst.l.weight(perm[r]) == fig2::kPrintedW[r]);
  }
}

TEST_CASE("incidence matrix matches the published rows plus the omitted one") {
  auto inst = fig2::instance();
  auto inc = build_incidence(inst.l);
  REQUIRE(inc.stacked.rows() == 12);
  REQUIRE(inc.stacked.cols() == 12);
  Eigen::MatrixXd dense = Eigen::MatrixXd(inc.stacked);

  const auto& perm = fig2::kPrintedToCanonical;
  for (int r = 0; r < 11; ++r) {
    for (int c = 0; c < 12; ++c) {
      CHECK(dense(fig2::kPrintedIncidenceRows[r], perm[c]) ==
            double(fig2::kPrintedIncidence[r][c]));
    }
  }
  // Vertex 6' has no candidate edges: its row exists and is all zero.
  CHECK(dense.row(11).cwiseAbs().sum() == 0.0);
  // Every column has exactly one nonzero in each part.
  Eigen::MatrixXd top = Eigen::MatrixXd(inc.row_part());
  Eigen::MatrixXd bottom = Eigen::MatrixXd(inc.col_part());
  for (int c = 0; c < 12; ++c) {
    CHECK(top.col(c).sum() == 1.0);
    CHECK(bottom.col(c).sum() == 1.0);
  }
}

TEST_CASE("incidence counts selected edges per vertex") {
  auto l = CandidateGraph::from_edges(1, 1, {{0, 0, 0.5}});
  auto inc = build_incidence(l);
  REQUIRE(inc.stacked.rows() == 2);
  Eigen::MatrixXd dense = Eigen::MatrixXd(inc.stacked);
  CHECK(dense(0, 0) == 1.0);
  CHECK(dense(1, 0) == 1.0);

  // Two edges sharing A-vertex 0: (A x)_0 = 2 for the all-ones selection.
  auto l2 = CandidateGraph::from_edges(2, 2, {{0, 0, 1.0}, {0, 1, 1.0}});
  auto inc2 = build_incidence(l2);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(2);
  Eigen::VectorXd counts = inc2.stacked * x;
  CHECK(counts(0) == 2.0);
}

TEST_CASE("empty A-edge set gives an all-zero squares matrix") {
  auto a = SimpleGraph::from_edges(3, {});
  auto b = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}});
  auto l = CandidateGraph::from_edges(3, 3,
                                      {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}});
  auto s = build_squares(a, b, l);
  CHECK(s.nnz() == 0);
  CHECK(s.square_count() == 0);
}

TEST_CASE("dimension mismatch is an invalid instance") {
  auto a = SimpleGraph::from_edges(2, {{0, 1}});
  auto b = SimpleGraph::from_edges(3, {{0, 1}});
  auto l = CandidateGraph::from_edges(3, 3, {{2, 2, 1.0}});
  CHECK_THROWS_AS(build_squares(a, b, l), InvalidInstanceError);
}

TEST_CASE("squares pattern equals the quadratic-time definition on random instances") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto inst = test_util::random_instance(seed, 6, 7, 0.35, 18);
    const auto& s = inst.squares;
    Eigen::MatrixXd dense = Eigen::MatrixXd(s.pattern);
    const int m = inst.edge_count();
    for (int e = 0; e < m; ++e) {
      for (int f = 0; f < m; ++f) {
        const bool square =
            e != f && inst.a.has_edge(inst.l.head(e), inst.l.head(f)) &&
            inst.b.has_edge(inst.l.tail(e), inst.l.tail(f));
        CAPTURE(seed);
        CAPTURE(e);
        CAPTURE(f);
        CHECK(dense(e, f) == (square ? 1.0 : 0.0));
      }
    }
  }
}

TEST_CASE("squares matrix is symmetric with matching transpose slots") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto inst = test_util::random_instance(seed, 7, 6, 0.4, 20);
    const auto& s = inst.squares;
    Eigen::MatrixXd dense = Eigen::MatrixXd(s.pattern);
    CHECK((dense - dense.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(dense.diagonal().cwiseAbs().sum() == 0.0);

    for (int e = 0; e < s.dim(); ++e) {
      for (int k = s.row_begin(e); k < s.row_end(e); ++k) {
        const int f = s.inner()[k];
        const int kt = s.transpose_perm[k];
        CHECK(s.inner()[kt] == e);
        CHECK(kt >= s.row_begin(f));
        CHECK(kt < s.row_end(f));
        CHECK(s.transpose_perm[kt] == k);
      }
    }
  }
}
