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

// JSON forms and board rendering.
//
//   set file      {"lattice": "rect:4x4", "set": [[1,2],[2,4],...]}
//   report        {"lattice", "coverage" (one array per row), "voids",
//                  "conflicts", "is_two_packing", "is_eds", "influence",
//                  "degree_sum"}
//   solve result  {"lattice", "F", "witness", "explored"[, "elapsed_ms"]}

#ifndef LATTICE_EDS_IO_HPP_
#define LATTICE_EDS_IO_HPP_

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"
#include "lattice_eds/error.hpp"
#include "lattice_eds/grid.hpp"
#include "lattice_eds/packing.hpp"
#include "lattice_eds/solver.hpp"

namespace lattice_eds {

using Json = nlohmann::ordered_json;

inline Json coords_to_json(const VertexSet& set) {
  Json out = Json::array();
  for (const Coord& c : set) out.push_back({c.i, c.j});
  return out;
}

inline Json set_to_json(const Lattice& lat, const VertexSet& set) {
  return Json{{"lattice", lat.descriptor()}, {"set", coords_to_json(set)}};
}

inline Json report_to_json(const DominationReport& r) {
  Json coverage = Json::array();
  const Lattice& lat = r.lattice;
  for (int i = 1; i <= lat.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= lat.row_length(i); ++j) row.push_back(r.coverage_at({i, j}));
    coverage.push_back(std::move(row));
  }
  return Json{{"lattice", lat.descriptor()},
              {"coverage", std::move(coverage)},
              {"voids", coords_to_json(r.voids)},
              {"conflicts", coords_to_json(r.conflicts)},
              {"is_two_packing", r.is_two_packing},
              {"is_eds", r.is_eds},
              {"influence", r.influence},
              {"degree_sum", r.degree_sum}};
}

inline Json solve_result_to_json(const Lattice& lat, const SolveResult& r,
                                 bool include_elapsed) {
  Json out{{"lattice", lat.descriptor()},
           {"F", r.f_value},
           {"witness", coords_to_json(r.witness)},
           {"explored", r.explored}};
  if (include_elapsed) {
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
  }
  return out;
}

// Reads a set file. `lattice_override`, when non-empty, replaces the
// descriptor stored in the file.
inline std::pair<Lattice, VertexSet> parse_set_json(const std::string& text,
                                                    const std::string& lattice_override = {}) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("set file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("set file must be a JSON object");
  std::string descriptor = lattice_override;
  if (descriptor.empty()) {
    if (!doc.contains("lattice") || !doc["lattice"].is_string()) {
      throw ParseError("set file needs a string \"lattice\" field");
    }
    descriptor = doc["lattice"].get<std::string>();
  }
  const Lattice lat = parse_lattice(descriptor);
  if (!doc.contains("set") || !doc["set"].is_array()) {
    throw ParseError("set file needs an array \"set\" field");
  }
  std::vector<Coord> coords;
  for (const auto& item : doc["set"]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw ParseError("each set entry must be an [i, j] integer pair");
    }
    coords.push_back({item[0].get<int>(), item[1].get<int>()});
  }
  return {lat, VertexSet(std::move(coords))};
}

struct RenderStyle {
  char dominator = '@';
  char dominated = '.';
  char void_glyph = 'o';
  char conflict = '#';

  bool valid() const {
    return dominator != dominated && dominator != void_glyph && dominated != void_glyph;
  }
};

// One glyph per vertex, rows top to bottom. Triangle rows are indented so
// that (i+1,j-1) and (i+1,j) sit below-left and below-right of (i,j).
inline std::string render_ascii(const Lattice& lat, const VertexSet& set,
                                const RenderStyle& style = {}) {
  if (!style.valid()) throw DomainError("render style glyphs must be distinct");
  const DominationReport r = audit(lat, set);
  std::ostringstream os;
  for (int i = 1; i <= lat.rows(); ++i) {
    if (lat.kind() == LatticeKind::kTriangular) os << std::string(static_cast<size_t>(i - 1), ' ');
    for (int j = 1; j <= lat.row_length(i); ++j) {
      const int cov = r.coverage_at({i, j});
      char g = style.dominated;
      if (cov >= 2) g = style.conflict;
      else if (set.contains({i, j})) g = style.dominator;
      else if (cov == 0) g = style.void_glyph;
      if (j > 1) os << ' ';
      os << g;
    }
    os << '\n';
  }
  return os.str();
}

// Flat SVG: edges as lines; dominators as large filled dots, dominated
// vertices as small filled dots, voids as large open circles.
inline std::string render_svg(const Lattice& lat, const VertexSet& set) {
  const DominationReport r = audit(lat, set);
  constexpr double kStep = 30.0;
  constexpr double kMargin = 20.0;
  auto position = [&](const Coord& c) {
    double x = (c.j - 1) * kStep;
    double y = (c.i - 1) * kStep;
    if (lat.kind() == LatticeKind::kTriangular) {
      x += (c.i - 1) * kStep / 2.0;
      y = (c.i - 1) * kStep * std::sqrt(3.0) / 2.0;
    }
    return std::pair{x + kMargin, y + kMargin};
  };
  double width = 0, height = 0;
  for (const Coord& v : vertices(lat)) {
    const auto [x, y] = position(v);
    width = std::max(width, x + kMargin);
    height = std::max(height, y + kMargin);
  }
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\">\n";
  for (const Coord& v : vertices(lat)) {
    const auto [x1, y1] = position(v);
    for (const Coord& u : neighbors(lat, v)) {
      if (u < v) continue;
      const auto [x2, y2] = position(u);
      // Torus wrap edges would cross the whole board.
      if (std::abs(x2 - x1) > kStep * 1.01 || std::abs(y2 - y1) > kStep * 1.01) continue;
      os << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
         << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
  }
  for (const Coord& v : vertices(lat)) {
    const auto [x, y] = position(v);
    const int cov = r.coverage_at(v);
    os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" ";
    if (set.contains(v)) {
      os << "r=\"7\" fill=\"" << (cov >= 2 ? "red" : "black") << "\"";
    } else if (cov == 0) {
      os << "r=\"7\" fill=\"white\" stroke=\"black\"";
    } else {
      os << "r=\"4\" fill=\"" << (cov >= 2 ? "red" : "black") << "\"";
    }
    os << "/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace lattice_eds

#endif  // LATTICE_EDS_IO_HPP_
