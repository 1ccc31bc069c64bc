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

// Candidate vertex sets and their audit against the efficient-domination
// definitions:
//   2-packing   closed neighborhoods of members pairwise disjoint
//               (equivalently, pairwise distance >= 3);
//   EDS         |N[v] ∩ S| == 1 for every vertex v;
//   influence   number of vertices dominated by S, which for a 2-packing
//               equals the sum of (1 + deg v) over its members.

#ifndef LATTICE_EDS_PACKING_HPP_
#define LATTICE_EDS_PACKING_HPP_

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "lattice_eds/error.hpp"
#include "lattice_eds/graph.hpp"
#include "lattice_eds/grid.hpp"

namespace lattice_eds {

// Duplicate-free set of coordinates kept in row-major order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Coord> coords) : elems_(coords) { normalize(); }
  explicit VertexSet(std::vector<Coord> coords) : elems_(std::move(coords)) {
    normalize();
  }

  void insert(const Coord& c) {
    const auto it = std::lower_bound(elems_.begin(), elems_.end(), c);
    if (it == elems_.end() || *it != c) elems_.insert(it, c);
  }

  bool contains(const Coord& c) const {
    return std::binary_search(elems_.begin(), elems_.end(), c);
  }

  size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const std::vector<Coord>& elems() const { return elems_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }

  std::vector<Coord> elems_;
};

// Audit of a vertex-id set on an arbitrary graph.
struct GraphReport {
  std::vector<int> coverage;  // |N[v] ∩ S| per vertex id
  std::vector<int> voids;     // ids with coverage 0
  std::vector<int> conflicts; // ids with coverage >= 2
  bool is_two_packing = true;
  bool is_eds = false;
  int influence = 0;          // vertices with coverage >= 1
  int degree_sum = 0;         // sum over S of (1 + deg)
};

inline GraphReport audit_graph(const Graph& g, std::span<const int> set) {
  GraphReport r;
  r.coverage.assign(static_cast<size_t>(g.size()), 0);
  for (int s : set) {
    ++r.coverage[static_cast<size_t>(s)];
    for (int u : g.neighbors(s)) ++r.coverage[static_cast<size_t>(u)];
    r.degree_sum += 1 + g.degree(s);
  }
  for (int v = 0; v < g.size(); ++v) {
    const int c = r.coverage[static_cast<size_t>(v)];
    if (c == 0) r.voids.push_back(v);
    if (c >= 2) r.conflicts.push_back(v);
    if (c >= 1) ++r.influence;
  }
  r.is_two_packing = r.conflicts.empty();
  r.is_eds = r.is_two_packing && r.voids.empty();
  return r;
}

struct DominationReport {
  Lattice lattice = Lattice::rect(1, 1);
  std::vector<int> coverage;  // row-major, aligned with vertices(lattice)
  VertexSet voids;
  VertexSet conflicts;
  bool is_two_packing = true;
  bool is_eds = false;
  // Dominated-vertex count. Equals degree_sum whenever is_two_packing holds;
  // for overlapping sets the two differ and both are reported.
  int influence = 0;
  int degree_sum = 0;

  int coverage_at(const Coord& c) const {
    return coverage[static_cast<size_t>(lattice.index_of(c))];
  }

  friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

namespace detail {

inline std::vector<int> to_ids(const Lattice& lat, const VertexSet& set) {
  std::vector<int> ids;
  ids.reserve(set.size());
  for (const Coord& c : set) ids.push_back(lat.index_of(c));
  return ids;
}

}  // namespace detail

// Single pass over S accumulating closed-neighborhood counts.
inline DominationReport audit(const Lattice& lat, const VertexSet& set) {
  const Graph g = Graph::from_lattice(lat);
  const auto ids = detail::to_ids(lat, set);  // validates every coord
  GraphReport gr = audit_graph(g, ids);

  DominationReport r;
  r.lattice = lat;
  r.coverage = std::move(gr.coverage);
  std::vector<Coord> voids, conflicts;
  for (int v : gr.voids) voids.push_back(lat.coord_at(v));
  for (int v : gr.conflicts) conflicts.push_back(lat.coord_at(v));
  r.voids = VertexSet(std::move(voids));
  r.conflicts = VertexSet(std::move(conflicts));
  r.is_two_packing = gr.is_two_packing;
  r.is_eds = gr.is_eds;
  r.influence = gr.influence;
  r.degree_sum = gr.degree_sum;
  return r;
}

// Vertices at distance 1 or 2 from v (v itself excluded).
inline std::vector<Coord> ball2(const Lattice& lat, const Coord& v) {
  std::vector<Coord> out;
  for (const Coord& u : neighbors(lat, v)) {
    out.push_back(u);
    for (const Coord& w : neighbors(lat, u)) {
      if (w != v) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Distance characterization: no two members within distance 2. Computed
// independently of audit(); the two are cross-checked in tests.
inline bool is_two_packing(const Lattice& lat, const VertexSet& set) {
  for (const Coord& c : set) lat.require(c);
  for (const Coord& s : set) {
    for (const Coord& u : ball2(lat, s)) {
      if (set.contains(u)) return false;
    }
  }
  return true;
}

// Sum of (1 + deg v) over a 2-packing.
inline int influence(const Lattice& lat, const VertexSet& set) {
  if (!is_two_packing(lat, set)) {
    throw ContractViolation("influence is defined only for 2-packings");
  }
  int total = 0;
  for (const Coord& c : set) total += 1 + degree(lat, c);
  return total;
}

// (i,j) -> (j,i), the transpose automorphism of square grids.
inline VertexSet transpose_set(const VertexSet& set) {
  std::vector<Coord> out;
  out.reserve(set.size());
  for (const Coord& c : set) out.push_back({c.j, c.i});
  return VertexSet(std::move(out));
}

}  // namespace lattice_eds

#endif  // LATTICE_EDS_PACKING_HPP_
