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

// Lattice graphs: rectangular, triangular and hexagonal grids, bounded or
// wrapped into a torus. Vertices are addressed by 1-based (row, column)
// coordinates.
//
// Adjacency conventions:
//   Rectangular  (i,j) ~ (i±1,j), (i,j±1).
//   Triangular   (i,j) ~ (i,j±1), (i-1,j), (i-1,j+1), (i+1,j-1), (i+1,j).
//                The bounded form is the triangle of side s whose row i holds
//                s-i+1 vertices; the torus form is an m x n rhombus with both
//                directions wrapped (axial coordinates).
//   Hexagonal    "brick wall": (i,j) ~ (i,j±1) always, plus (i+1,j) when
//                i+j is even and (i-1,j) when i+j is odd.

#ifndef LATTICE_EDS_GRID_HPP_
#define LATTICE_EDS_GRID_HPP_

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lattice_eds/error.hpp"

namespace lattice_eds {

enum class LatticeKind { kRectangular, kTriangular, kHexagonal };
enum class Topology { kBounded, kTorus };

struct Coord {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::string to_string(const Coord& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Coord& c) {
  return os << to_string(c);
}

class Lattice {
 public:
  // Validating constructor. Prefer the named factories below.
  Lattice(LatticeKind kind, int rows, int cols, Topology topology)
      : kind_(kind), rows_(rows), cols_(cols), topology_(topology) {
    if (rows < 1 || cols < 1) {
      throw DomainError("lattice dimensions must be positive");
    }
    if (kind == LatticeKind::kTriangular && topology == Topology::kBounded &&
        rows != cols) {
      throw DomainError("bounded triangular lattice is a triangle: rows == cols");
    }
    if (topology == Topology::kTorus) {
      if (rows < 3 || cols < 3) {
        throw DomainError("torus dimensions must be at least 3");
      }
      if (kind == LatticeKind::kHexagonal && (rows % 2 != 0 || cols % 2 != 0)) {
        throw DomainError("hexagonal torus periods must both be even");
      }
    }
  }

  static Lattice rect(int rows, int cols) {
    return {LatticeKind::kRectangular, rows, cols, Topology::kBounded};
  }
  static Lattice rect_torus(int rows, int cols) {
    return {LatticeKind::kRectangular, rows, cols, Topology::kTorus};
  }
  static Lattice triangle(int side) {
    return {LatticeKind::kTriangular, side, side, Topology::kBounded};
  }
  static Lattice tri_torus(int rows, int cols) {
    return {LatticeKind::kTriangular, rows, cols, Topology::kTorus};
  }
  static Lattice hex(int rows, int cols) {
    return {LatticeKind::kHexagonal, rows, cols, Topology::kBounded};
  }
  static Lattice hex_torus(int rows, int cols) {
    return {LatticeKind::kHexagonal, rows, cols, Topology::kTorus};
  }

  LatticeKind kind() const { return kind_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Topology topology() const { return topology_; }
  bool is_torus() const { return topology_ == Topology::kTorus; }
  bool is_triangle_patch() const {
    return kind_ == LatticeKind::kTriangular && topology_ == Topology::kBounded;
  }

  // Number of vertices in row i (ragged only for the triangle patch).
  int row_length(int i) const {
    return is_triangle_patch() ? rows_ - i + 1 : cols_;
  }

  int vertex_count() const {
    return is_triangle_patch() ? rows_ * (rows_ + 1) / 2 : rows_ * cols_;
  }

  bool contains(const Coord& c) const {
    return c.i >= 1 && c.i <= rows_ && c.j >= 1 && c.j <= row_length(c.i);
  }

  // Dense 0-based index in row-major order.
  int index_of(const Coord& c) const {
    require(c);
    if (is_triangle_patch()) {
      // Rows 1..i-1 hold s + (s-1) + ... + (s-i+2) vertices.
      const int before = (c.i - 1) * rows_ - (c.i - 1) * (c.i - 2) / 2;
      return before + c.j - 1;
    }
    return (c.i - 1) * cols_ + (c.j - 1);
  }

  Coord coord_at(int index) const {
    if (index < 0 || index >= vertex_count()) {
      throw InvalidCoordinate("vertex index out of range: " +
                              std::to_string(index));
    }
    if (is_triangle_patch()) {
      int i = 1;
      while (index >= row_length(i)) {
        index -= row_length(i);
        ++i;
      }
      return {i, index + 1};
    }
    return {index / cols_ + 1, index % cols_ + 1};
  }

  void require(const Coord& c) const {
    if (!contains(c)) {
      throw InvalidCoordinate("coordinate " + to_string(c) +
                              " is not a vertex of " + descriptor());
    }
  }

  // Textual form: rect:MxN, rect-torus:MxN, tri:S, tri-torus:MxN, hex:MxN,
  // hex-torus:MxN.
  std::string descriptor() const {
    std::string prefix;
    switch (kind_) {
      case LatticeKind::kRectangular: prefix = "rect"; break;
      case LatticeKind::kTriangular: prefix = "tri"; break;
      case LatticeKind::kHexagonal: prefix = "hex"; break;
    }
    if (is_triangle_patch()) return prefix + ":" + std::to_string(rows_);
    if (is_torus()) prefix += "-torus";
    return prefix + ":" + std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  LatticeKind kind_;
  int rows_;
  int cols_;
  Topology topology_;
};

namespace detail {

inline int parse_positive(std::string_view text, std::string_view whole) {
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw ParseError("bad dimension in lattice descriptor '" +
                     std::string(whole) + "'");
  }
  return std::stoi(std::string(text));
}

inline int wrap(int x, int period) {
  const int r = (x - 1) % period;
  return (r < 0 ? r + period : r) + 1;
}

}  // namespace detail

inline Lattice parse_lattice(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("lattice descriptor needs 'kind:dims': '" +
                     std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view dims = text.substr(colon + 1);
  try {
    if (kind == "tri") {
      return Lattice::triangle(detail::parse_positive(dims, text));
    }
    const auto x = dims.find('x');
    if (x == std::string_view::npos) {
      throw ParseError("expected MxN dimensions in '" + std::string(text) + "'");
    }
    const int m = detail::parse_positive(dims.substr(0, x), text);
    const int n = detail::parse_positive(dims.substr(x + 1), text);
    if (kind == "rect") return Lattice::rect(m, n);
    if (kind == "rect-torus") return Lattice::rect_torus(m, n);
    if (kind == "tri-torus") return Lattice::tri_torus(m, n);
    if (kind == "hex") return Lattice::hex(m, n);
    if (kind == "hex-torus") return Lattice::hex_torus(m, n);
  } catch (const DomainError& e) {
    throw ParseError("invalid lattice '" + std::string(text) + "': " + e.what());
  }
  throw ParseError("unknown lattice kind '" + std::string(kind) + "'");
}

// Row-major enumeration of the vertex set.
inline std::vector<Coord> vertices(const Lattice& lat) {
  std::vector<Coord> out;
  out.reserve(static_cast<size_t>(lat.vertex_count()));
  for (int i = 1; i <= lat.rows(); ++i) {
    for (int j = 1; j <= lat.row_length(i); ++j) out.push_back({i, j});
  }
  return out;
}

// Neighbor offsets before bounds handling.
inline std::vector<Coord> neighbor_offsets(const Lattice& lat, const Coord& v) {
  switch (lat.kind()) {
    case LatticeKind::kRectangular:
      return {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    case LatticeKind::kTriangular:
      return {{0, -1}, {0, 1}, {-1, 0}, {-1, 1}, {1, -1}, {1, 0}};
    case LatticeKind::kHexagonal:
      return {{0, -1}, {0, 1}, {(v.i + v.j) % 2 == 0 ? 1 : -1, 0}};
  }
  return {};
}

// Sorted, duplicate-free neighbor list of v.
inline std::vector<Coord> neighbors(const Lattice& lat, const Coord& v) {
  lat.require(v);
  std::vector<Coord> out;
  for (const Coord& d : neighbor_offsets(lat, v)) {
    Coord u{v.i + d.i, v.j + d.j};
    if (lat.is_torus()) {
      u = {detail::wrap(u.i, lat.rows()), detail::wrap(u.j, lat.cols())};
    } else if (!lat.contains(u)) {
      continue;
    }
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline int degree(const Lattice& lat, const Coord& v) {
  return static_cast<int>(neighbors(lat, v).size());
}

// Breadth-first distances from `source` to every vertex (row-major indices).
inline std::vector<int> bfs_distances(const Lattice& lat, const Coord& source) {
  std::vector<int> dist(static_cast<size_t>(lat.vertex_count()), -1);
  std::deque<Coord> queue{source};
  dist[static_cast<size_t>(lat.index_of(source))] = 0;
  while (!queue.empty()) {
    const Coord u = queue.front();
    queue.pop_front();
    const int du = dist[static_cast<size_t>(lat.index_of(u))];
    for (const Coord& w : neighbors(lat, u)) {
      int& dw = dist[static_cast<size_t>(lat.index_of(w))];
      if (dw < 0) {
        dw = du + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Shortest-path length. Closed form on bounded rectangular grids, BFS
// elsewhere. Returns -1 if v is unreachable, which happens only on a
// one-column hexagonal strip.
inline int distance(const Lattice& lat, const Coord& u, const Coord& v) {
  lat.require(u);
  lat.require(v);
  if (lat.kind() == LatticeKind::kRectangular && !lat.is_torus()) {
    return std::abs(u.i - v.i) + std::abs(u.j - v.j);
  }
  return bfs_distances(lat, u)[static_cast<size_t>(lat.index_of(v))];
}

// The regular degree of the infinite lattice of this kind.
inline int lattice_regular_degree(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kRectangular: return 4;
    case LatticeKind::kTriangular: return 6;
    case LatticeKind::kHexagonal: return 3;
  }
  return 0;
}

}  // namespace lattice_eds

#endif  // LATTICE_EDS_GRID_HPP_
