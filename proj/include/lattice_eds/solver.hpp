// Copyright 2026 The lattice-eds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact computation of F(G), the maximum influence of a 2-packing.
//
// brute_force_F  depth-first include/exclude search over vertex ids with a
//                void-count bound; works on any graph.
// dp_F_rect      column sweep over a rows x cols grid. A 2-packing restricted
//                to three consecutive columns A, B, C is valid iff each column
//                has its rows pairwise >= 3 apart, neighbouring columns have
//                rows differing by >= 2, and A, C share no row. Columns three
//                or more apart are always at distance >= 3, so the pair of the
//                two previous columns is a complete state.

#ifndef LATTICE_EDS_SOLVER_HPP_
#define LATTICE_EDS_SOLVER_HPP_

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "lattice_eds/constructions.hpp"
#include "lattice_eds/error.hpp"
#include "lattice_eds/graph.hpp"
#include "lattice_eds/grid.hpp"
#include "lattice_eds/packing.hpp"

namespace lattice_eds {

inline constexpr int kDefaultBruteForceLimit = 49;
inline constexpr int kDefaultProfileWidth = 16;

struct SolveResult {
  int f_value = 0;
  VertexSet witness;
  std::int64_t explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct GraphSolveResult {
  int f_value = 0;
  std::vector<int> witness;  // ascending vertex ids
  std::int64_t explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

namespace detail {

class BranchAndBound {
 public:
  explicit BranchAndBound(const Graph& g) : g_(g), n_(g.size()) {
    coverage_.assign(static_cast<size_t>(n_), 0);
    // closes_at[k]: vertices whose closed neighbourhood has max id k. Once
    // vertex k is decided, such a vertex can no longer gain a dominator.
    closes_at_.resize(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      int last = v;
      for (int u : g.neighbors(v)) last = std::max(last, u);
      closes_at_[static_cast<size_t>(last)].push_back(v);
    }
  }

  GraphSolveResult run() {
    search(0, 0, 0);
    GraphSolveResult r;
    r.f_value = best_;
    r.witness = best_set_;
    r.explored = explored_;
    return r;
  }

 private:
  void search(int k, int covered, int dead) {
    ++explored_;
    if (best_ == n_) return;
    if (k == n_) {
      if (covered > best_) {
        best_ = covered;
        best_set_ = chosen_;
      }
      return;
    }
    // Include k first so the first optimum found is lexicographically first.
    if (can_place(k)) {
      int gain = 0;
      apply(k, +1, gain);
      chosen_.push_back(k);
      const int d = dead + newly_dead(k);
      if (n_ - d > best_) search(k + 1, covered + gain, d);
      chosen_.pop_back();
      apply(k, -1, gain);
    }
    const int d = dead + newly_dead(k);
    if (n_ - d > best_) search(k + 1, covered, d);
  }

  bool can_place(int v) const {
    if (coverage_[static_cast<size_t>(v)] != 0) return false;
    for (int u : g_.neighbors(v)) {
      if (coverage_[static_cast<size_t>(u)] != 0) return false;
    }
    return true;
  }

  void apply(int v, int delta, int& gain) {
    coverage_[static_cast<size_t>(v)] += delta;
    for (int u : g_.neighbors(v)) coverage_[static_cast<size_t>(u)] += delta;
    gain = 1 + g_.degree(v);
  }

  int newly_dead(int k) const {
    int d = 0;
    for (int v : closes_at_[static_cast<size_t>(k)]) {
      if (coverage_[static_cast<size_t>(v)] == 0) ++d;
    }
    return d;
  }

  const Graph& g_;
  int n_;
  std::vector<int> coverage_;
  std::vector<std::vector<int>> closes_at_;
  std::vector<int> chosen_;
  std::vector<int> best_set_;
  int best_ = -1;
  std::int64_t explored_ = 0;
};

}  // namespace detail

// Exhaustive maximum over all 2-packings of g.
inline GraphSolveResult brute_force_F(const Graph& g,
                                      int vertex_limit = kDefaultBruteForceLimit) {
  if (g.size() > vertex_limit) {
    throw LimitExceeded("brute_force_F: " + std::to_string(g.size()) +
                        " vertices exceeds limit " + std::to_string(vertex_limit) +
                        "; use dp_F_rect for rectangular grids");
  }
  const auto start = std::chrono::steady_clock::now();
  GraphSolveResult r = detail::BranchAndBound(g).run();
  r.elapsed = std::chrono::steady_clock::now() - start;
  const GraphReport check = audit_graph(g, r.witness);
  if (!check.is_two_packing || check.influence != r.f_value) {
    throw Error("brute_force_F: witness failed audit");
  }
  return r;
}

inline SolveResult brute_force_F(const Lattice& lat,
                                 int vertex_limit = kDefaultBruteForceLimit) {
  const GraphSolveResult g = brute_force_F(Graph::from_lattice(lat), vertex_limit);
  std::vector<Coord> coords;
  for (int id : g.witness) coords.push_back(lat.coord_at(id));
  return {g.f_value, VertexSet(std::move(coords)), g.explored, g.elapsed};
}

inline GraphSolveResult brute_force_F(const AugmentedLattice& g,
                                      int vertex_limit = kDefaultBruteForceLimit) {
  return brute_force_F(g.graph(), vertex_limit);
}

namespace detail {

// Row masks (bit r-1 = row r) whose set rows are pairwise >= 3 apart, in
// ascending numeric order.
inline std::vector<std::uint32_t> column_masks(int rows) {
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = std::uint32_t{1} << rows;
  for (std::uint32_t m = 0; m < limit; ++m) {
    if ((m & (m << 1)) == 0 && (m & (m << 2)) == 0) out.push_back(m);
  }
  return out;
}

inline bool adjacent_columns_ok(std::uint32_t left, std::uint32_t right) {
  return (right & (left | (left << 1) | (left >> 1))) == 0;
}

// Pair states (P, Q) of the two previous columns, grouped by P. State id of
// (P, next[P][t]) is base[P] + t.
struct ProfileStates {
  std::vector<std::uint32_t> masks;
  std::vector<std::vector<int>> next;  // mask index -> compatible mask indices
  std::vector<int> base;
  int count = 0;

  explicit ProfileStates(int rows) : masks(column_masks(rows)) {
    const int k = static_cast<int>(masks.size());
    next.resize(static_cast<size_t>(k));
    base.resize(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
      base[static_cast<size_t>(a)] = count;
      for (int b = 0; b < k; ++b) {
        if (adjacent_columns_ok(masks[static_cast<size_t>(a)],
                                masks[static_cast<size_t>(b)])) {
          next[static_cast<size_t>(a)].push_back(b);
        }
      }
      count += static_cast<int>(next[static_cast<size_t>(a)].size());
    }
  }
};

}  // namespace detail

struct DpOptions {
  int width_limit = kDefaultProfileWidth;
  bool witness = true;
};

// Exact F of the rows x cols grid. Among optima, the witness is the one whose
// column-mask sequence is lexicographically smallest.
inline SolveResult dp_F_rect(int rows, int cols, DpOptions opts = {}) {
  if (rows < 1 || cols < 1) throw DomainError("dp_F_rect: dimensions must be positive");
  if (rows > opts.width_limit) {
    throw LimitExceeded("dp_F_rect: " + std::to_string(rows) +
                        " rows exceeds profile width " +
                        std::to_string(opts.width_limit));
  }
  if (rows > 30) throw LimitExceeded("dp_F_rect: profile width above 30 unsupported");
  const auto start = std::chrono::steady_clock::now();

  const detail::ProfileStates st(rows);
  const int k = static_cast<int>(st.masks.size());

  // weight[col_kind][mask]: col_kind 0 = interior column, bit0 = first, bit1 = last.
  std::vector<std::vector<int>> weight(4, std::vector<int>(static_cast<size_t>(k)));
  for (int kind = 0; kind < 4; ++kind) {
    const int horizontal = (cols > 1) ? 2 - ((kind & 1) ? 1 : 0) - ((kind & 2) ? 1 : 0) : 0;
    for (int m = 0; m < k; ++m) {
      int w = 0;
      for (int r = 0; r < rows; ++r) {
        if (st.masks[static_cast<size_t>(m)] >> r & 1U) {
          w += 1 + horizontal + (r > 0 ? 1 : 0) + (r < rows - 1 ? 1 : 0);
        }
      }
      weight[static_cast<size_t>(kind)][static_cast<size_t>(m)] = w;
    }
  }
  auto column_kind = [cols](int j) { return (j == 0 ? 1 : 0) | (j == cols - 1 ? 2 : 0); };

  // best[j][state]: max weight of columns j..cols-1 given the masks of
  // columns j-2, j-1. Only two layers are kept unless a witness is wanted.
  constexpr int kNeg = std::numeric_limits<int>::min() / 2;
  const size_t layers = opts.witness ? static_cast<size_t>(cols) + 1 : 2;
  std::vector<std::vector<int>> best(layers);
  auto layer = [&](int j) -> std::vector<int>& {
    return best[opts.witness ? static_cast<size_t>(j) : static_cast<size_t>(j % 2)];
  };
  layer(cols).assign(static_cast<size_t>(st.count), 0);

  std::int64_t explored = 0;
  for (int j = cols - 1; j >= 0; --j) {
    const auto& w = weight[static_cast<size_t>(column_kind(j))];
    const auto& after = layer(j + 1);
    std::vector<int> cur(static_cast<size_t>(st.count), kNeg);
    for (int p = 0; p < k; ++p) {
      const std::uint32_t pm = st.masks[static_cast<size_t>(p)];
      const auto& qs = st.next[static_cast<size_t>(p)];
      for (size_t tq = 0; tq < qs.size(); ++tq) {
        const int q = qs[tq];
        const auto& cs = st.next[static_cast<size_t>(q)];
        int value = kNeg;
        for (size_t tc = 0; tc < cs.size(); ++tc) {
          const int c = cs[tc];
          ++explored;
          if ((pm & st.masks[static_cast<size_t>(c)]) != 0) continue;
          const int v = w[static_cast<size_t>(c)] +
                        after[static_cast<size_t>(st.base[static_cast<size_t>(q)]) + tc];
          if (v > value) value = v;
        }
        cur[static_cast<size_t>(st.base[static_cast<size_t>(p)]) + tq] = value;
      }
    }
    layer(j) = std::move(cur);
  }

  // Mask index 0 is the empty column; the virtual columns -2, -1 are empty.
  SolveResult r;
  r.f_value = layer(0)[static_cast<size_t>(st.base[0])];
  r.explored = explored;

  if (opts.witness) {
    std::vector<Coord> coords;
    int p = 0, q = 0;
    for (int j = 0; j < cols; ++j) {
      const auto& w = weight[static_cast<size_t>(column_kind(j))];
      const auto& cs = st.next[static_cast<size_t>(q)];
      int tq = -1;
      for (size_t t = 0; t < st.next[static_cast<size_t>(p)].size(); ++t) {
        if (st.next[static_cast<size_t>(p)][t] == q) tq = static_cast<int>(t);
      }
      const int target = layer(j)[static_cast<size_t>(st.base[static_cast<size_t>(p)] + tq)];
      int chosen = -1;
      for (size_t tc = 0; tc < cs.size(); ++tc) {
        const int c = cs[tc];
        if ((st.masks[static_cast<size_t>(p)] & st.masks[static_cast<size_t>(c)]) != 0) continue;
        const int v = w[static_cast<size_t>(c)] +
                      layer(j + 1)[static_cast<size_t>(st.base[static_cast<size_t>(q)]) + tc];
        if (v == target) {
          chosen = c;
          break;
        }
      }
      const std::uint32_t cm = st.masks[static_cast<size_t>(chosen)];
      for (int row = 0; row < rows; ++row) {
        if (cm >> row & 1U) coords.push_back({row + 1, j + 1});
      }
      p = q;
      q = chosen;
    }
    r.witness = VertexSet(std::move(coords));
  }
  r.elapsed = std::chrono::steady_clock::now() - start;

  if (opts.witness) {
    const DominationReport check = audit(Lattice::rect(rows, cols), r.witness);
    if (!check.is_two_packing || check.influence != r.f_value) {
      throw Error("dp_F_rect: witness failed audit");
    }
  }
  return r;
}

struct ConjectureRow {
  int n = 0;
  std::optional<int> dp_value;  // empty when n is beyond the width limit
  int conjectured = 0;
  bool skipped = false;
  bool match = false;
};

inline std::vector<ConjectureRow> check_conjecture(int from, int to,
                                                   int width_limit = kDefaultProfileWidth) {
  if (from < 7) throw DomainError("check_conjecture: range must start at n >= 7");
  std::vector<ConjectureRow> rows;
  for (int n = from; n <= to; ++n) {
    ConjectureRow row;
    row.n = n;
    row.conjectured = conjectured_F(n);
    if (n > width_limit) {
      row.skipped = true;
    } else {
      row.dp_value = dp_F_rect(n, n, DpOptions{width_limit, false}).f_value;
      row.match = *row.dp_value == row.conjectured;
    }
    rows.push_back(row);
  }
  return rows;
}

struct VoidRow {
  int n = 0;
  std::optional<int> voids;            // n^2 - F, empty when skipped
  std::optional<int> predicted;        // predicted_voids(n), defined for n >= 7
  bool skipped = false;
};

inline std::vector<VoidRow> table_voids(int from, int to,
                                        int width_limit = kDefaultProfileWidth) {
  if (from < 1) throw DomainError("table_voids: n must be positive");
  std::vector<VoidRow> rows;
  for (int n = from; n <= to; ++n) {
    VoidRow row;
    row.n = n;
    if (n >= 7) row.predicted = predicted_voids(n);
    if (n > width_limit) {
      row.skipped = true;
    } else {
      row.voids = n * n - dp_F_rect(n, n, DpOptions{width_limit, false}).f_value;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lattice_eds

#endif  // LATTICE_EDS_SOLVER_HPP_
