#pragma once

#include <utility>
#include <vector>

#include "netalign/gen.hpp"
#include "netalign/instance.hpp"

namespace test_util {

// Random small instance: Erdos-Renyi graphs A and B plus a random sparse
// candidate graph. Deterministic given the seed.
inline netalign::ProblemInstance random_instance(std::uint64_t seed, int na,
                                                 int nb, double graph_p,
                                                 int l_edges) {
  netalign::Rng rng(seed);
  auto sample_graph = [&](int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(graph_p)) edges.emplace_back(u, v);
      }
    }
    return netalign::SimpleGraph::from_edges(n, std::move(edges));
  };
  netalign::SimpleGraph a = sample_graph(na);
  netalign::SimpleGraph b = sample_graph(nb);

  std::vector<netalign::CandidateEdge> l;
  std::vector<char> used(static_cast<size_t>(na) * nb, 0);
  int attempts = 0;
  while (static_cast<int>(l.size()) < l_edges && attempts < 50 * l_edges) {
    attempts++;
    const int i = static_cast<int>(rng.next_u64() % na);
    const int jp = static_cast<int>(rng.next_u64() % nb);
    if (used[static_cast<size_t>(i) * nb + jp]) continue;
    used[static_cast<size_t>(i) * nb + jp] = 1;
    l.push_back({i, jp, 0.05 + rng.uniform()});
  }
  return netalign::ProblemInstance::build(
      std::move(a), std::move(b),
      netalign::CandidateGraph::from_edges(na, nb, std::move(l)));
}

}  // namespace test_util
