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

#ifndef LATTICE_EDS_GRAPH_HPP_
#define LATTICE_EDS_GRAPH_HPP_

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "lattice_eds/grid.hpp"

namespace lattice_eds {

// Immutable undirected simple graph in compressed adjacency form. Vertex ids
// are dense 0..size()-1; for graphs built from a lattice the id of a vertex is
// its row-major index.
class Graph {
 public:
  Graph() = default;

  // Builds from per-vertex adjacency lists. Lists are sorted and deduplicated;
  // the caller is responsible for symmetry.
  explicit Graph(std::vector<std::vector<int>> adjacency) {
    offsets_.reserve(adjacency.size() + 1);
    for (auto& list : adjacency) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      targets_.insert(targets_.end(), list.begin(), list.end());
      offsets_.push_back(static_cast<int>(targets_.size()));
    }
  }

  static Graph from_lattice(const Lattice& lat) {
    return Graph(lattice_adjacency(lat));
  }

  static std::vector<std::vector<int>> lattice_adjacency(const Lattice& lat) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(lat.vertex_count()));
    for (const Coord& v : vertices(lat)) {
      auto& list = adj[static_cast<size_t>(lat.index_of(v))];
      for (const Coord& u : lattice_eds::neighbors(lat, v)) list.push_back(lat.index_of(u));
    }
    return adj;
  }

  int size() const { return static_cast<int>(offsets_.size()) - 1; }

  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[static_cast<size_t>(v)],
            targets_.data() + offsets_[static_cast<size_t>(v) + 1]};
  }

  int degree(int v) const {
    return offsets_[static_cast<size_t>(v) + 1] - offsets_[static_cast<size_t>(v)];
  }

 private:
  std::vector<int> offsets_{0};
  std::vector<int> targets_;
};

}  // namespace lattice_eds

#endif  // LATTICE_EDS_GRAPH_HPP_
