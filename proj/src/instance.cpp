#include "netalign/instance.hpp"

#include <string>
#include <utility>

namespace netalign {

namespace {

void check_dimensions(const SimpleGraph& a, const SimpleGraph& b,
                      const CandidateGraph& l) {
  if (l.rows() != a.vertex_count() || l.cols() != b.vertex_count()) {
    throw InvalidInstanceError(
        "candidate graph is " + std::to_string(l.rows()) + "x" +
        std::to_string(l.cols()) + " but |V_A| = " +
        std::to_string(a.vertex_count()) + ", |V_B| = " +
        std::to_string(b.vertex_count()));
  }
}

}  // namespace

SquaresMatrix build_squares(const SimpleGraph& a, const SimpleGraph& b,
                            const CandidateGraph& l) {
  check_dimensions(a, b, l);
  const int m = l.edge_count();

  // Row e = (i,i') pairs with f = (j,j') when j is an A-neighbor of i and
  // (i',j') is a B-edge. Scanning j ascending, then f ascending within
  // edges_at_a(j), yields each row already sorted by column index, and the
  // work is proportional to candidate pairs examined, not |E_L|^2.
  std::vector<int> outer(m + 1, 0);
  for (int e = 0; e < m; ++e) {
    const int i = l.head(e);
    const int ip = l.tail(e);
    int count = 0;
    for (int j : a.neighbors(i)) {
      for (int f : l.edges_at_a(j)) {
        if (b.has_edge(ip, l.tail(f))) count++;
      }
    }
    outer[e + 1] = count;
  }
  for (int e = 0; e < m; ++e) outer[e + 1] += outer[e];
  const int nnz = outer[m];

  std::vector<int> inner(nnz);
  std::vector<double> values(nnz, 1.0);
  {
    std::vector<int> next(outer.begin(), outer.end() - 1);
    for (int e = 0; e < m; ++e) {
      const int i = l.head(e);
      const int ip = l.tail(e);
      for (int j : a.neighbors(i)) {
        for (int f : l.edges_at_a(j)) {
          if (b.has_edge(ip, l.tail(f))) inner[next[e]++] = f;
        }
      }
    }
  }

  SquaresMatrix s;
  s.pattern = Eigen::Map<const SparsePattern>(m, m, nnz, outer.data(),
                                              inner.data(), values.data());
  // Structural symmetry with sorted rows: scanning nonzeros in storage order
  // and bumping a per-row cursor lands each (e,f) on the slot of (f,e).
  s.transpose_perm.resize(nnz);
  std::vector<int> next(outer.begin(), outer.end() - 1);
  for (int e = 0; e < m; ++e) {
    for (int k = outer[e]; k < outer[e + 1]; ++k) {
      s.transpose_perm[k] = next[inner[k]]++;
    }
  }
  return s;
}

IncidenceMatrix build_incidence(const CandidateGraph& l) {
  const int m = l.edge_count();
  IncidenceMatrix inc;
  inc.row_part_rows = l.rows();
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(2 * static_cast<size_t>(m));
  for (int e = 0; e < m; ++e) {
    trips.emplace_back(l.head(e), e, 1.0);
    trips.emplace_back(l.rows() + l.tail(e), e, 1.0);
  }
  inc.stacked.resize(l.rows() + l.cols(), m);
  inc.stacked.setFromTriplets(trips.begin(), trips.end());
  return inc;
}

ProblemInstance ProblemInstance::build(SimpleGraph a, SimpleGraph b,
                                       CandidateGraph l) {
  ProblemInstance inst;
  inst.squares = build_squares(a, b, l);
  inst.a = std::move(a);
  inst.b = std::move(b);
  inst.l = std::move(l);
  return inst;
}

}  // namespace netalign
