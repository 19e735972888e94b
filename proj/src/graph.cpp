#include "netalign/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace netalign {

namespace {

std::vector<int> bucket_csr(int buckets, int count,
                            const std::vector<int>& key,
                            std::vector<int>& ptr) {
  ptr.assign(buckets + 1, 0);
  for (int e = 0; e < count; ++e) ptr[key[e] + 1]++;
  for (int v = 0; v < buckets; ++v) ptr[v + 1] += ptr[v];
  std::vector<int> items(count);
  std::vector<int> next(ptr.begin(), ptr.end() - 1);
  for (int e = 0; e < count; ++e) items[next[key[e]]++] = e;
  return items;
}

}  // namespace

SimpleGraph SimpleGraph::from_edges(int vertex_count,
                                    std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) {
    throw InvalidInstanceError("vertex count must be nonnegative");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw InvalidInstanceError("edge endpoint out of range: (" +
                                 std::to_string(u) + "," + std::to_string(v) +
                                 ")");
    }
    if (u == v) {
      throw InvalidInstanceError("self-loop rejected at vertex " +
                                 std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidInstanceError("duplicate edge rejected");
  }

  SimpleGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.adj_ptr_.assign(vertex_count + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    g.adj_ptr_[u + 1]++;
    g.adj_ptr_[v + 1]++;
  }
  for (int v = 0; v < vertex_count; ++v) g.adj_ptr_[v + 1] += g.adj_ptr_[v];
  g.adj_.resize(2 * g.edges_.size());
  std::vector<int> next(g.adj_ptr_.begin(), g.adj_ptr_.end() - 1);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[next[u]++] = v;
    g.adj_[next[v]++] = u;
  }
  for (int v = 0; v < vertex_count; ++v) {
    std::sort(g.adj_.begin() + g.adj_ptr_[v], g.adj_.begin() + g.adj_ptr_[v + 1]);
  }
  return g;
}

std::span<const int> SimpleGraph::neighbors(int v) const {
  return {adj_.data() + adj_ptr_[v],
          static_cast<size_t>(adj_ptr_[v + 1] - adj_ptr_[v])};
}

bool SimpleGraph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> canonical_edge_order(std::span<const CandidateEdge> edges) {
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(edges[x].a, edges[x].b) < std::pair(edges[y].a, edges[y].b);
  });
  for (size_t k = 1; k < order.size(); ++k) {
    const auto& p = edges[order[k - 1]];
    const auto& q = edges[order[k]];
    if (p.a == q.a && p.b == q.b) {
      throw InvalidInstanceError("duplicate candidate edge (" +
                                 std::to_string(p.a) + "," +
                                 std::to_string(p.b) + ")");
    }
  }
  return order;
}

CandidateGraph CandidateGraph::from_edges(int rows, int cols,
                                          std::vector<CandidateEdge> edges) {
  if (rows < 0 || cols < 0) {
    throw InvalidInstanceError("candidate graph dimensions must be nonnegative");
  }
  for (const auto& e : edges) {
    if (e.a < 0 || e.a >= rows || e.b < 0 || e.b >= cols) {
      throw InvalidInstanceError("candidate edge endpoint out of range: (" +
                                 std::to_string(e.a) + "," +
                                 std::to_string(e.b) + ")");
    }
    if (!(e.w >= 0.0)) {
      throw InvalidInstanceError("candidate edge weight must be nonnegative");
    }
  }
  const std::vector<int> order = canonical_edge_order(edges);

  CandidateGraph l;
  l.rows_ = rows;
  l.cols_ = cols;
  const int m = static_cast<int>(edges.size());
  l.head_.resize(m);
  l.tail_.resize(m);
  l.weight_.resize(m);
  for (int k = 0; k < m; ++k) {
    l.head_[k] = edges[order[k]].a;
    l.tail_[k] = edges[order[k]].b;
    l.weight_[k] = edges[order[k]].w;
  }
  l.a_edges_ = bucket_csr(rows, m, l.head_, l.a_ptr_);
  l.b_edges_ = bucket_csr(cols, m, l.tail_, l.b_ptr_);
  return l;
}

std::span<const int> CandidateGraph::edges_at_a(int i) const {
  return {a_edges_.data() + a_ptr_[i],
          static_cast<size_t>(a_ptr_[i + 1] - a_ptr_[i])};
}

std::span<const int> CandidateGraph::edges_at_b(int ip) const {
  return {b_edges_.data() + b_ptr_[ip],
          static_cast<size_t>(b_ptr_[ip + 1] - b_ptr_[ip])};
}

std::optional<int> CandidateGraph::find_edge(int i, int ip) const {
  auto at_a = edges_at_a(i);
  // Edges at one A-vertex are contiguous in canonical order and ascending
  // in the B endpoint.
  auto it = std::lower_bound(at_a.begin(), at_a.end(), ip,
                             [&](int e, int key) { return tail_[e] < key; });
  if (it != at_a.end() && tail_[*it] == ip) return *it;
  return std::nullopt;
}

}  // namespace netalign
