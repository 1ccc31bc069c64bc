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

// Test-only reference implementations. Nothing here calls into the library's
// adjacency, audit or solvers; they rebuild the same quantities from the
// definitions so the library can be checked against them.

#ifndef LATTICE_EDS_TESTS_ORACLES_HPP_
#define LATTICE_EDS_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

// Path P_n (bounded) or cycle C_n (wrapped) on 0..n-1.
inline Adjacency path_or_cycle(int n, bool cycle) {
  Adjacency adj(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int d = a > b ? a - b : b - a;
      const bool edge = d == 1 || (cycle && n > 2 && d == n - 1);
      if (edge) adj[static_cast<size_t>(a)].push_back(b);
    }
  }
  return adj;
}

// Cartesian product G □ H: (u1,v1) ~ (u2,v2) iff u1 == u2 and v1 ~ v2, or
// u1 ~ u2 and v1 == v2. Vertex (u, v) gets id u * |H| + v, which is the
// row-major index when G indexes rows.
inline Adjacency cartesian_product(const Adjacency& g, const Adjacency& h) {
  const int ng = static_cast<int>(g.size());
  const int nh = static_cast<int>(h.size());
  Adjacency adj(static_cast<size_t>(ng * nh));
  for (int u = 0; u < ng; ++u) {
    for (int v = 0; v < nh; ++v) {
      auto& list = adj[static_cast<size_t>(u * nh + v)];
      for (int v2 : h[static_cast<size_t>(v)]) list.push_back(u * nh + v2);
      for (int u2 : g[static_cast<size_t>(u)]) list.push_back(u2 * nh + v);
    }
  }
  return adj;
}

inline Adjacency rect_grid(int rows, int cols, bool torus = false) {
  return cartesian_product(path_or_cycle(rows, torus), path_or_cycle(cols, torus));
}

inline std::vector<int> bfs(const Adjacency& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::deque<int> q{source};
  dist[static_cast<size_t>(source)] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (int w : adj[static_cast<size_t>(u)]) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

inline std::vector<std::vector<int>> all_pairs(const Adjacency& adj) {
  std::vector<std::vector<int>> d;
  for (int s = 0; s < static_cast<int>(adj.size()); ++s) d.push_back(bfs(adj, s));
  return d;
}

// Pairwise-distance definition of a 2-packing.
inline bool pairwise_distance_ok(const std::vector<std::vector<int>>& dist,
                                 const std::vector<int>& set) {
  for (size_t a = 0; a < set.size(); ++a) {
    for (size_t b = a + 1; b < set.size(); ++b) {
      if (dist[static_cast<size_t>(set[a])][static_cast<size_t>(set[b])] < 3) return false;
    }
  }
  return true;
}

// Dominated-vertex count of an arbitrary set.
inline int dominated_count(const Adjacency& adj, const std::vector<int>& set) {
  std::vector<char> hit(adj.size(), 0);
  for (int s : set) {
    hit[static_cast<size_t>(s)] = 1;
    for (int u : adj[static_cast<size_t>(s)]) hit[static_cast<size_t>(u)] = 1;
  }
  int c = 0;
  for (char h : hit) c += h;
  return c;
}

// F(G) by enumerating every subset; only for |V| <= ~22.
inline int exhaustive_F(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const auto dist = all_pairs(adj);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> set;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) set.push_back(v);
    }
    if (!pairwise_distance_ok(dist, set)) continue;
    int value = 0;
    for (int s : set) value += 1 + static_cast<int>(adj[static_cast<size_t>(s)].size());
    best = std::max(best, value);
  }
  return best;
}

// Calls visit(set) for every 2-packing (pairwise distance >= 3), found by
// backtracking in id order.
inline void for_each_two_packing(const Adjacency& adj,
                                 const std::function<void(const std::vector<int>&)>& visit) {
  const auto dist = all_pairs(adj);
  const int n = static_cast<int>(adj.size());
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      visit(cur);
      return;
    }
    bool ok = true;
    for (int s : cur) ok = ok && dist[static_cast<size_t>(s)][static_cast<size_t>(k)] >= 3;
    if (ok) {
      cur.push_back(k);
      rec(k + 1);
      cur.pop_back();
    }
    rec(k + 1);
  };
  rec(0);
}

// Random 2-packing on a rows x cols grid: visit cells in random order and keep
// those at Manhattan distance >= 3 from everything kept so far.
template <typename Rng>
std::vector<std::pair<int, int>> random_rect_packing(int rows, int cols, Rng& rng,
                                                     double keep = 1.0) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= cols; ++j) cells.push_back({i, j});
  }
  std::shuffle(cells.begin(), cells.end(), rng);
  std::bernoulli_distribution take(keep);
  std::vector<std::pair<int, int>> out;
  for (const auto& [i, j] : cells) {
    bool ok = true;
    for (const auto& [a, b] : out) ok = ok && (std::abs(a - i) + std::abs(b - j) >= 3);
    if (ok && take(rng)) out.push_back({i, j});
  }
  return out;
}

}  // namespace oracle

#endif  // LATTICE_EDS_TESTS_ORACLES_HPP_
