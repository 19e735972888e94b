#include "netalign/gen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <queue>
#include <unordered_set>

namespace netalign {

namespace {

std::int64_t pair_key(int i, int j) {
  return (static_cast<std::int64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

// Adds edge u-v with probability min(1, q / dist(u,v)^2) over all unordered
// non-adjacent pairs; dist comes from the caller (< 0 means unreachable or
// already adjacent).
template <typename DistFn>
void perturb(std::vector<std::pair<int, int>>& edges, int n, double q,
             Rng& rng, DistFn dist) {
  if (q <= 0.0) return;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double d = dist(u, v);
      if (d < 2.0) continue;
      if (rng.bernoulli(std::min(1.0, q / (d * d)))) {
        edges.emplace_back(u, v);
      }
    }
  }
}

GeneratedInstance assemble(SimpleGraph a, SimpleGraph b,
                           std::vector<CandidateEdge> l_edges, int n) {
  auto l = CandidateGraph::from_edges(n, n, std::move(l_edges));
  GeneratedInstance out;
  out.instance =
      ProblemInstance::build(std::move(a), std::move(b), std::move(l));
  out.truth.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.truth.push_back(*out.instance.l.find_edge(i, i));
  }
  return out;
}

// Uniform candidate noise: every (i, j') pair independently with
// probability expected_degree / n, weight uniform in [0, 1).
void add_uniform_noise(std::vector<CandidateEdge>& l_edges,
                       std::unordered_set<std::int64_t>& present, int n,
                       double expected_degree, Rng& rng) {
  const double p = expected_degree / static_cast<double>(n);
  if (p <= 0.0) return;
  for (int i = 0; i < n; ++i) {
    for (int jp = 0; jp < n; ++jp) {
      if (!rng.bernoulli(p)) continue;
      if (!present.insert(pair_key(i, jp)).second) continue;
      l_edges.push_back({i, jp, rng.uniform()});
    }
  }
}

}  // namespace

void GridGenConfig::validate() const {
  if (k < 2) throw InvalidInstanceError("grid side must be at least 2");
  if (noise_expected_degree < 0.0 || q < 0.0 || d < 0 || local_noise_p < 0.0 ||
      local_noise_p > 1.0) {
    throw InvalidInstanceError("grid generator parameters out of range");
  }
}

GeneratedInstance gen_grid(const GridGenConfig& cfg) {
  cfg.validate();
  const int k = cfg.k;
  const int n = k * k;
  Rng rng(cfg.seed);

  auto vid = [k](int r, int c) { return r * k + c; };
  auto manhattan = [k](int u, int v) {
    return std::abs(u / k - v / k) + std::abs(u % k - v % k);
  };

  std::vector<std::pair<int, int>> grid;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      if (c + 1 < k) grid.emplace_back(vid(r, c), vid(r, c + 1));
      if (r + 1 < k) grid.emplace_back(vid(r, c), vid(r + 1, c));
    }
  }

  auto a_edges = grid;
  perturb(a_edges, n, cfg.q, rng,
          [&](int u, int v) { return static_cast<double>(manhattan(u, v)); });
  auto b_edges = grid;
  perturb(b_edges, n, cfg.q, rng,
          [&](int u, int v) { return static_cast<double>(manhattan(u, v)); });

  std::vector<CandidateEdge> l_edges;
  std::unordered_set<std::int64_t> present;
  for (int i = 0; i < n; ++i) {
    l_edges.push_back({i, i, 1.0});
    present.insert(pair_key(i, i));
  }
  add_uniform_noise(l_edges, present, n, cfg.noise_expected_degree, rng);

  // Distance-local noise around every planted pair.
  if (cfg.d > 0 && cfg.local_noise_p > 0.0) {
    for (int i = 0; i < n; ++i) {
      const int r = i / k, c = i % k;
      std::vector<int> nearby;
      for (int dr = -cfg.d; dr <= cfg.d; ++dr) {
        for (int dc = -cfg.d; dc <= cfg.d; ++dc) {
          if (std::abs(dr) + std::abs(dc) > cfg.d) continue;
          const int rr = r + dr, cc = c + dc;
          if (rr < 0 || rr >= k || cc < 0 || cc >= k) continue;
          nearby.push_back(vid(rr, cc));
        }
      }
      for (int j : nearby) {
        for (int jp : nearby) {
          if (!rng.bernoulli(cfg.local_noise_p)) continue;
          if (!present.insert(pair_key(j, jp)).second) continue;
          l_edges.push_back({j, jp, rng.uniform()});
        }
      }
    }
  }

  return assemble(SimpleGraph::from_edges(n, std::move(a_edges)),
                  SimpleGraph::from_edges(n, std::move(b_edges)),
                  std::move(l_edges), n);
}

void PowerLawGenConfig::validate() const {
  if (n < 2) throw InvalidInstanceError("power-law generator needs n >= 2");
  if (theta <= 1.0) throw InvalidInstanceError("power-law exponent must exceed 1");
  if (noise_expected_degree < 0.0 || q < 0.0 || mean_degree <= 0.0) {
    throw InvalidInstanceError("power-law generator parameters out of range");
  }
}

namespace {

std::vector<std::pair<int, int>> chung_lu_sample(
    const std::vector<double>& expected, double total, Rng& rng) {
  const int n = static_cast<int>(expected.size());
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double p = std::min(1.0, expected[u] * expected[v] / total);
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return edges;
}

std::vector<std::vector<int>> all_pairs_bfs(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    auto& ds = dist[s];
    queue.clear();
    queue.push_back(s);
    ds[s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (ds[v] < 0) {
          ds[v] = ds[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

}  // namespace

GeneratedInstance gen_powerlaw(const PowerLawGenConfig& cfg) {
  cfg.validate();
  const int n = cfg.n;
  Rng rng(cfg.seed);

  // Rank-based expected degrees: w_i ~ (i+1)^(-1/(theta-1)), scaled so the
  // mean expected degree is cfg.mean_degree.
  std::vector<double> expected(n);
  double raw_sum = 0.0;
  const double exponent = -1.0 / (cfg.theta - 1.0);
  for (int i = 0; i < n; ++i) {
    expected[i] = std::pow(static_cast<double>(i + 1), exponent);
    raw_sum += expected[i];
  }
  const double total = cfg.mean_degree * static_cast<double>(n);
  for (double& w : expected) w *= total / raw_sum;

  auto sample_perturbed = [&]() {
    auto edges = chung_lu_sample(expected, total, rng);
    if (cfg.q > 0.0) {
      auto base = SimpleGraph::from_edges(n, edges);
      auto dist = all_pairs_bfs(base);
      perturb(edges, n, cfg.q, rng, [&](int u, int v) {
        const int d = dist[u][v];
        return d < 0 ? -1.0 : static_cast<double>(d);
      });
    }
    return SimpleGraph::from_edges(n, std::move(edges));
  };
  SimpleGraph a = sample_perturbed();
  SimpleGraph b = sample_perturbed();

  std::vector<CandidateEdge> l_edges;
  std::unordered_set<std::int64_t> present;
  for (int i = 0; i < n; ++i) {
    l_edges.push_back({i, i, 1.0});
    present.insert(pair_key(i, i));
  }
  add_uniform_noise(l_edges, present, n, cfg.noise_expected_degree, rng);

  return assemble(std::move(a), std::move(b), std::move(l_edges), n);
}

}  // namespace netalign
