#include "netalign/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace netalign {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

BipartiteMatch MaxWeightMatcher::solve(const WeightedBipartiteProblem& p,
                                       TieBreak tie) {
  std::vector<int> row(p.edges.size()), col(p.edges.size());
  std::vector<double> w(p.edges.size());
  for (size_t k = 0; k < p.edges.size(); ++k) {
    row[k] = p.edges[k].row;
    col[k] = p.edges[k].col;
    w[k] = p.edges[k].w;
  }
  {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(p.edges.size());
    for (const auto& e : p.edges) pairs.emplace_back(e.row, e.col);
    std::sort(pairs.begin(), pairs.end());
    if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
      throw InvalidInstanceError("duplicate (row, col) pair in matching input");
    }
  }
  return solve(p.rows, p.cols, row, col, w, tie);
}

BipartiteMatch MaxWeightMatcher::solve(int rows, int cols,
                                       std::span<const int> edge_row,
                                       std::span<const int> edge_col,
                                       std::span<const double> edge_w,
                                       TieBreak tie) {
  const int m = static_cast<int>(edge_row.size());
  if (static_cast<int>(edge_col.size()) != m ||
      static_cast<int>(edge_w.size()) != m) {
    throw InvalidInstanceError("matching edge arrays must have equal length");
  }

  kept_.clear();
  for (int k = 0; k < m; ++k) {
    const int r = edge_row[k], c = edge_col[k];
    if (r < 0 || r >= rows || c < 0 || c >= cols) {
      throw InvalidInstanceError("matching edge endpoint out of range");
    }
    if (edge_w[k] > 0.0) kept_.push_back({r, c, k, edge_w[k]});
  }

  // Row-grouped adjacency; kept_ keeps ascending original order within rows.
  adj_ptr_.assign(rows + 1, 0);
  for (const Kept& e : kept_) adj_ptr_[e.row + 1]++;
  for (int r = 0; r < rows; ++r) adj_ptr_[r + 1] += adj_ptr_[r];
  adj_.resize(kept_.size());
  {
    std::vector<int> next(adj_ptr_.begin(), adj_ptr_.end() - 1);
    for (int k = 0; k < static_cast<int>(kept_.size()); ++k) {
      adj_[next[kept_[k].row]++] = k;
    }
  }
  // Stamp-based duplicate check over the grouped kept edges.
  dup_mark_.assign(cols, -1);
  for (int r = 0; r < rows; ++r) {
    for (int a = adj_ptr_[r]; a < adj_ptr_[r + 1]; ++a) {
      const int c = kept_[adj_[a]].col;
      if (dup_mark_[c] == r) {
        throw InvalidInstanceError("duplicate (row, col) pair in matching input");
      }
      dup_mark_[c] = r;
    }
  }

  run_ssp(rows, cols);

  // Drop dummy assignments so match arrays describe the real matching only.
  for (int r = 0; r < rows; ++r) {
    if (match_row_[r] >= cols) {
      match_row_[r] = -1;
      edge_of_row_[r] = -1;
    }
  }

  if (tie == TieBreak::kLexSmallestSet) lex_canonicalize(rows, cols);

  BipartiteMatch result;
  for (int r = 0; r < rows; ++r) {
    if (match_row_[r] >= 0 && edge_of_row_[r] >= 0) {
      result.selected.push_back(kept_[edge_of_row_[r]].orig);
    }
  }
  std::sort(result.selected.begin(), result.selected.end());
  result.value = 0.0;
  for (int orig : result.selected) result.value += edge_w[orig];
  return result;
}

void MaxWeightMatcher::run_ssp(int rows, int cols) {
  const int total = cols + rows;  // real columns, then one sink per row
  pot_u_.assign(rows, 0.0);
  pot_v_.assign(total, 0.0);
  match_row_.assign(rows, -1);
  match_col_.assign(total, -1);
  edge_of_row_.assign(rows, -1);
  dist_.resize(total);
  prev_row_.resize(total);
  parent_edge_.resize(total);
  finalized_.resize(total);

  auto heap_less = std::greater<std::pair<double, int>>();

  for (int r0 = 0; r0 < rows; ++r0) {
    double maxw = 0.0;
    for (int a = adj_ptr_[r0]; a < adj_ptr_[r0 + 1]; ++a) {
      maxw = std::max(maxw, kept_[adj_[a]].w);
    }
    pot_u_[r0] = -maxw;

    std::fill(dist_.begin(), dist_.begin() + total, kInf);
    std::fill(finalized_.begin(), finalized_.begin() + total, char{0});
    heap_.clear();
    expanded_rows_.clear();
    finalized_cols_.clear();

    auto push = [&](int c, double d, int pr, int pe) {
      if (d < dist_[c]) {
        dist_[c] = d;
        prev_row_[c] = pr;
        parent_edge_[c] = pe;
        heap_.emplace_back(d, c);
        std::push_heap(heap_.begin(), heap_.end(), heap_less);
      }
    };
    auto relax_row = [&](int r, double base) {
      for (int a = adj_ptr_[r]; a < adj_ptr_[r + 1]; ++a) {
        const Kept& e = kept_[adj_[a]];
        const double rc =
            std::max(0.0, -e.w - pot_u_[r] - pot_v_[e.col]);
        push(e.col, base + rc, r, adj_[a]);
      }
      const int sink = cols + r;
      const double rc = std::max(0.0, -pot_u_[r] - pot_v_[sink]);
      push(sink, base + rc, r, -1);
    };

    relax_row(r0, 0.0);
    int target = -1;
    double big_d = 0.0;
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), heap_less);
      auto [d, c] = heap_.back();
      heap_.pop_back();
      if (finalized_[c]) continue;
      finalized_[c] = 1;
      finalized_cols_.push_back(c);
      if (match_col_[c] < 0) {
        target = c;
        big_d = d;
        break;
      }
      const int r = match_col_[c];
      expanded_rows_.emplace_back(r, d);
      relax_row(r, d);
    }
    // The private sink of r0 is always free, so a target always exists.

    pot_u_[r0] += big_d;
    for (auto [r, dr] : expanded_rows_) pot_u_[r] += big_d - dr;
    for (int c : finalized_cols_) pot_v_[c] += dist_[c] - big_d;

    int c = target;
    while (true) {
      const int r = prev_row_[c];
      const int next_c = (r == r0) ? -1 : match_row_[r];
      match_col_[c] = r;
      match_row_[r] = c;
      edge_of_row_[r] = parent_edge_[c];
      if (r == r0) break;
      c = next_c;
    }
  }
}

void MaxWeightMatcher::lex_canonicalize(int rows, int cols) {
  const int nk = static_cast<int>(kept_.size());

  // Optimal duals of the free-matching LP, recovered from the sink-extended
  // potentials: u_r = -pot_u[r] - pot_v[sink_r], v_c = -pot_v[c]. Every
  // optimal matching lives in the tight subgraph and saturates each vertex
  // with a positive dual.
  fu_.resize(rows);
  fv_.resize(cols);
  for (int r = 0; r < rows; ++r) fu_[r] = -pot_u_[r] - pot_v_[cols + r];
  for (int c = 0; c < cols; ++c) fv_[c] = -pot_v_[c];

  tight_.assign(nk, 0);
  for (int k = 0; k < nk; ++k) {
    const Kept& e = kept_[k];
    if (edge_of_row_[e.row] == k || fu_[e.row] + fv_[e.col] == e.w) {
      tight_[k] = 1;
    }
  }

  cadj_ptr_.assign(cols + 1, 0);
  for (int k = 0; k < nk; ++k) {
    if (tight_[k]) cadj_ptr_[kept_[k].col + 1]++;
  }
  for (int c = 0; c < cols; ++c) cadj_ptr_[c + 1] += cadj_ptr_[c];
  cadj_.resize(cadj_ptr_[cols]);
  {
    std::vector<int> next(cadj_ptr_.begin(), cadj_ptr_.end() - 1);
    for (int k = 0; k < nk; ++k) {
      if (tight_[k]) cadj_[next[kept_[k].col]++] = k;
    }
  }

  committed_row_.assign(rows, 0);
  committed_col_.assign(cols, 0);
  bfs_seen_.assign(rows + cols, 0);
  bfs_parent_.assign(rows + cols, -1);

#ifdef NETALIGN_DEBUG_LEX
  for (int r = 0; r < rows; ++r) fprintf(stderr, "fu[%d]=%g\n", r, fu_[r]);
  for (int c = 0; c < cols; ++c) fprintf(stderr, "fv[%d]=%g\n", c, fv_[c]);
  for (int k = 0; k < nk; ++k) {
    fprintf(stderr, "kept %d orig=%d (%d,%d) w=%g tight=%d slack=%g\n", k,
            kept_[k].orig, kept_[k].row, kept_[k].col, kept_[k].w,
            int(tight_[k]), fu_[kept_[k].row] + fv_[kept_[k].col] - kept_[k].w);
  }
#endif

  // kept_ is in ascending original index order, so this is the lex-greedy
  // scan: force an edge whenever some optimum extends the forced prefix
  // with it.
  for (int k = 0; k < nk; ++k) {
    if (!tight_[k]) continue;
    const Kept& e = kept_[k];
    if (committed_row_[e.row] || committed_col_[e.col]) continue;
    if (match_row_[e.row] == e.col) {
      committed_row_[e.row] = 1;
      committed_col_[e.col] = 1;
      continue;
    }
    try_force(k);
  }
}

bool MaxWeightMatcher::try_force(int k) {
  const Kept& e = kept_[k];
  const int pr = match_col_[e.col];  // row displaced at e's column
  const int pc = match_row_[e.row];  // column displaced at e's row

  snap_mr_ = match_row_;
  snap_mc_ = match_col_;
  snap_er_ = edge_of_row_;

  if (pc >= 0) match_col_[pc] = -1;
  if (pr >= 0) {
    match_row_[pr] = -1;
    edge_of_row_[pr] = -1;
  }
  match_row_[e.row] = e.col;
  match_col_[e.col] = e.row;
  edge_of_row_[e.row] = k;
  committed_row_[e.row] = 1;
  committed_col_[e.col] = 1;

  // An exposed vertex may already be re-saturated by the previous augment.
  bool ok = true;
  if (pr >= 0 && fu_[pr] > 0.0 && match_row_[pr] < 0) ok = saturate_row(pr);
  if (ok && pc >= 0 && fv_[pc] > 0.0 && match_col_[pc] < 0) {
    ok = saturate_col(pc);
  }

  if (!ok) {
    match_row_ = snap_mr_;
    match_col_ = snap_mc_;
    edge_of_row_ = snap_er_;
    committed_row_[e.row] = 0;
    committed_col_[e.col] = 0;
  }
  return ok;
}

// Alternating search from an exposed row over tight edges. A path may end
// at a free column, or at a column whose matched row has zero dual: that
// row's saturation is optional, so it can be stolen. Flipping either kind
// of path re-saturates `start` without unsaturating any required vertex.
bool MaxWeightMatcher::saturate_row(int start) {
  const int rows = static_cast<int>(committed_row_.size());
  std::fill(bfs_seen_.begin(), bfs_seen_.end(), char{0});
  bfs_queue_.clear();
  bfs_queue_.push_back(start);
  bfs_seen_[start] = 1;
  for (size_t head = 0; head < bfs_queue_.size(); ++head) {
    const int r = bfs_queue_[head];
    for (int a = adj_ptr_[r]; a < adj_ptr_[r + 1]; ++a) {
      const int k = adj_[a];
      if (!tight_[k]) continue;
      const int c = kept_[k].col;
      if (committed_col_[c] || bfs_seen_[rows + c]) continue;
      bfs_seen_[rows + c] = 1;
      bfs_parent_[rows + c] = k;
      const int holder = match_col_[c];
      if (holder < 0 || fu_[holder] == 0.0) {
        if (holder >= 0) {
          match_row_[holder] = -1;  // steal c from its optional row
          edge_of_row_[holder] = -1;
        }
        int cc = c;
        while (true) {
          const int ke = bfs_parent_[rows + cc];
          const int rr = kept_[ke].row;
          const int old = match_row_[rr];
          match_row_[rr] = cc;
          match_col_[cc] = rr;
          edge_of_row_[rr] = ke;
          if (rr == start) break;
          cc = old;
        }
        return true;
      }
      if (!bfs_seen_[holder]) {
        bfs_seen_[holder] = 1;
        bfs_queue_.push_back(holder);
      }
    }
  }
  return false;
}

bool MaxWeightMatcher::saturate_col(int start) {
  const int rows = static_cast<int>(committed_row_.size());
  std::fill(bfs_seen_.begin(), bfs_seen_.end(), char{0});
  bfs_queue_.clear();
  bfs_queue_.push_back(start);
  bfs_seen_[rows + start] = 1;
  for (size_t head = 0; head < bfs_queue_.size(); ++head) {
    const int c = bfs_queue_[head];
    for (int a = cadj_ptr_[c]; a < cadj_ptr_[c + 1]; ++a) {
      const int k = cadj_[a];
      const int r = kept_[k].row;
      if (committed_row_[r] || bfs_seen_[r]) continue;
      bfs_seen_[r] = 1;
      bfs_parent_[r] = k;
      const int held = match_row_[r];
      if (held < 0 || fv_[held] == 0.0) {
        if (held >= 0) match_col_[held] = -1;  // steal r from its optional col
        int rr = r;
        while (true) {
          const int ke = bfs_parent_[rr];
          const int cc = kept_[ke].col;
          const int old = match_col_[cc];
          match_row_[rr] = cc;
          match_col_[cc] = rr;
          edge_of_row_[rr] = ke;
          if (cc == start) break;
          rr = old;
        }
        return true;
      }
      if (!bfs_seen_[rows + held]) {
        bfs_seen_[rows + held] = 1;
        bfs_queue_.push_back(held);
      }
    }
  }
  return false;
}

BipartiteMatch max_weight_matching(const WeightedBipartiteProblem& p) {
  MaxWeightMatcher matcher;
  return matcher.solve(p, TieBreak::kLexSmallestSet);
}

}  // namespace netalign
