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

// Periodic perfect codes of the infinite rectangular, triangular and
// hexagonal lattices, stored as one fundamental domain of a torus. Domination
// only looks one step away, so a set that is perfect on the torus lifts to a
// perfect code of the infinite lattice.

#ifndef LATTICE_EDS_PERIODIC_HPP_
#define LATTICE_EDS_PERIODIC_HPP_

#include <array>
#include <string>
#include <vector>

#include "lattice_eds/error.hpp"
#include "lattice_eds/grid.hpp"
#include "lattice_eds/packing.hpp"

namespace lattice_eds {

struct Motif {
  LatticeKind kind = LatticeKind::kRectangular;
  int period_rows = 1;
  int period_cols = 1;
  VertexSet cells;  // inside [1, period_rows] x [1, period_cols]

  Lattice torus() const {
    return {kind, period_rows, period_cols, Topology::kTorus};
  }

  double density() const {
    return static_cast<double>(cells.size()) / (period_rows * period_cols);
  }

  bool contains_lifted(const Coord& c) const {
    return cells.contains({detail::wrap(c.i, period_rows), detail::wrap(c.j, period_cols)});
  }
};

inline int positive_mod(int x, int m) { return ((x % m) + m) % m; }

// Selection offsets that grow the rectangular code from one vertex. They all
// preserve 2i + j mod 5.
inline constexpr std::array<Coord, 4> kRectGeneratorOffsets{{
    {1, -2}, {2, 1}, {-1, 2}, {-2, -1}}};

// Rectangular code {(i,j) : 2(i-1) + (j-1) ≡ c (mod 5)} on the 5 x 5 torus.
inline Motif rect_code_motif(int residue = 0) {
  if (residue < 0 || residue > 4) throw DomainError("rect_code_motif: residue must be in 0..4");
  Motif m{LatticeKind::kRectangular, 5, 5, {}};
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      if (positive_mod(2 * (i - 1) + (j - 1), 5) == residue) m.cells.insert({i, j});
    }
  }
  return m;
}

// Triangular selection offsets as written in (row, position-in-row) labels,
// and their images in this library's axial coordinates. The written labels
// cannot be taken literally: read as axial offsets, (±2,0) and (∓1,±2) are at
// distance 2, not 3. Each written offset is mapped to the unique distance-3
// codeword with the same row displacement.
inline constexpr std::array<Coord, 4> kTriWrittenOffsets{{{-1, 2}, {1, -2}, {2, 0}, {-2, 0}}};
inline constexpr std::array<Coord, 4> kTriAxialOffsets{{{-1, -2}, {1, 2}, {2, -3}, {-2, 3}}};

// Triangular code {(i,j) : (i-1) + 3(j-1) ≡ c (mod 7)} on the 7 x 7 axial
// torus. The closed neighbourhood of any vertex hits the residues
// {0, ±1, ±2, ±3} once each.
inline Motif tri_code_motif(int residue = 0) {
  if (residue < 0 || residue > 6) throw DomainError("tri_code_motif: residue must be in 0..6");
  Motif m{LatticeKind::kTriangular, 7, 7, {}};
  for (int i = 1; i <= 7; ++i) {
    for (int j = 1; j <= 7; ++j) {
      if (positive_mod((i - 1) + 3 * (j - 1), 7) == residue) m.cells.insert({i, j});
    }
  }
  return m;
}

// Hexagonal faces of a brick-wall lattice: the six vertices of the face whose
// top-left corner is (i,j) with i+j even, listed so that entries k and 5-k are
// diagonally opposite.
inline std::vector<std::array<Coord, 6>> hexagonal_faces(const Lattice& lat) {
  if (lat.kind() != LatticeKind::kHexagonal) {
    throw DomainError("hexagonal_faces: lattice is not hexagonal");
  }
  std::vector<std::array<Coord, 6>> faces;
  const int last_i = lat.is_torus() ? lat.rows() : lat.rows() - 1;
  const int last_j = lat.is_torus() ? lat.cols() : lat.cols() - 2;
  auto at = [&lat](int i, int j) {
    return lat.is_torus() ? Coord{detail::wrap(i, lat.rows()), detail::wrap(j, lat.cols())}
                          : Coord{i, j};
  };
  for (int i = 1; i <= last_i; ++i) {
    for (int j = 1; j <= last_j; ++j) {
      if ((i + j) % 2 != 0) continue;
      faces.push_back({at(i, j), at(i, j + 1), at(i, j + 2), at(i + 1, j),
                       at(i + 1, j + 1), at(i + 1, j + 2)});
    }
  }
  return faces;
}

// Perfect code of the hexagonal lattice on the 4 x 4 brick torus, closed
// under taking the diagonally opposite vertex in each of a cell's three
// hexagons. Frozen from an exhaustive search over 4-subsets.
inline Motif hex_code_motif() {
  return {LatticeKind::kHexagonal, 4, 4, {{1, 1}, {2, 3}, {3, 3}, {4, 1}}};
}

inline DominationReport verify_perfect(const Motif& motif) {
  return audit(motif.torus(), motif.cells);
}

// The bounded window a motif is expanded onto: rows x cols for rectangular and
// hexagonal lattices, the triangle of side rows for triangular ones.
inline Lattice window_lattice(LatticeKind kind, int rows, int cols) {
  switch (kind) {
    case LatticeKind::kRectangular: return Lattice::rect(rows, cols);
    case LatticeKind::kHexagonal: return Lattice::hex(rows, cols);
    case LatticeKind::kTriangular:
      if (rows != cols) throw DomainError("triangular window must be square (a triangle)");
      return Lattice::triangle(rows);
  }
  throw DomainError("unknown lattice kind");
}

// All translates of the motif that fall inside the window.
inline VertexSet expand_motif(const Motif& motif, int rows, int cols) {
  if (rows < 1 || cols < 1) throw DomainError("expand_motif: window must be at least 1x1");
  const Lattice window = window_lattice(motif.kind, rows, cols);
  std::vector<Coord> out;
  for (const Coord& c : vertices(window)) {
    if (motif.contains_lifted(c)) out.push_back(c);
  }
  return VertexSet(std::move(out));
}

}  // namespace lattice_eds

#endif  // LATTICE_EDS_PERIODIC_HPP_
