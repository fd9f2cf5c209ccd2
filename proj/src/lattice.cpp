// Copyright 2026 The rubylat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rubylat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rubylat {

const char* to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::red: return "red";
    case EdgeColor::green: return "green";
    default: return "blue";
  }
}

const char* to_string(FaceColor c) {
  switch (c) {
    case FaceColor::red: return "red";
    case FaceColor::green: return "green";
    default: return "blue";
  }
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int pos_mod(int a, int b) { return a - b * floor_div(a, b); }

/**
 * Coordinate bookkeeping for the enlarged cell. Primitive cells live at
 * integer addresses (cx, cy); the enlarged cell (X, Y) covers the three
 * primitive cells with representatives (cx, cy) = X*(1,1) + Y*(-1,2) + (j,0),
 * j = 0,1,2, and j = (cx - cy) mod 3 is exactly the hexagon color.
 */
struct CellMap {
  int lx, ly;

  struct Resolved {
    int X, Y, j;        // wrapped enlarged coordinates
    int wrap_x, wrap_y; // how many torus windings were removed
  };

  Resolved resolve(int cx, int cy) const {
    const int j = pos_mod(cx - cy, 3);
    const int t = j - cx + cy;
    const int Y = t / 3;  // exact by construction
    const int X = cx + Y - j;
    const int wx = floor_div(X, lx);
    const int wy = floor_div(Y, ly);
    return Resolved{X - wx * lx, Y - wy * ly, j, wx, wy};
  }

  int cell_index(const Resolved& r) const { return (r.X * ly + r.Y) * 3 + r.j; }
  int site(const Resolved& r, int k) const { return cell_index(r) * 6 + k; }
  int up_tri(const Resolved& r) const { return 2 * cell_index(r); }
  int down_tri(const Resolved& r) const { return 2 * cell_index(r) + 1; }
};

}  // namespace

RubyLattice build_ruby(int lx, int ly) {
  if (lx < 1 || ly < 1) throw std::invalid_argument("build_ruby: Lx and Ly must be >= 1");
  RubyLattice lat;
  lat.lx = lx;
  lat.ly = ly;
  const CellMap cm{lx, ly};
  const int ncells = 3 * lx * ly;
  lat.sites.resize(static_cast<std::size_t>(6) * ncells);
  lat.triangles.resize(static_cast<std::size_t>(2) * ncells);
  lat.squares.resize(static_cast<std::size_t>(3) * ncells);
  lat.hexagons.resize(static_cast<std::size_t>(ncells));

  for (int X = 0; X < lx; ++X) {
    for (int Y = 0; Y < ly; ++Y) {
      for (int j = 0; j < 3; ++j) {
        const int cx = X - Y + j;
        const int cy = X + 2 * Y;
        const auto c0 = cm.resolve(cx, cy);
        const int cell = cm.cell_index(c0);
        for (int k = 0; k < 6; ++k) {
          lat.sites[static_cast<std::size_t>(cell) * 6 + k] = {X, Y, 6 * j + k};
        }

        // neighbor primitive cells
        const auto cE1 = cm.resolve(cx + 1, cy);
        const auto cE2 = cm.resolve(cx, cy + 1);
        const auto cE21 = cm.resolve(cx - 1, cy + 1);
        const auto cE1m2 = cm.resolve(cx + 1, cy - 1);
        const auto cM1 = cm.resolve(cx - 1, cy);

        auto add_edge = [&](int a, int b, EdgeColor col, const CellMap::Resolved& ra,
                            const CellMap::Resolved& rb) {
          lat.edges.push_back({a, b, col, rb.wrap_x - ra.wrap_x, rb.wrap_y - ra.wrap_y});
        };

        // hexagon ring edges, red on even k, green on odd k
        for (int k = 0; k < 6; ++k) {
          add_edge(cm.site(c0, k), cm.site(c0, (k + 1) % 6),
                   k % 2 == 0 ? EdgeColor::red : EdgeColor::green, c0, c0);
        }

        // blue triangles: up(c) = {v0(c), v2(c+e1), v4(c+e2)},
        //                 down(c) = {v1(c), v3(c+e2), v5(c-e1+e2)}
        const std::array<int, 3> up = {cm.site(c0, 0), cm.site(cE1, 2), cm.site(cE2, 4)};
        const std::array<int, 3> dn = {cm.site(c0, 1), cm.site(cE2, 3), cm.site(cE21, 5)};
        const std::array<CellMap::Resolved, 3> upc = {c0, cE1, cE2};
        const std::array<CellMap::Resolved, 3> dnc = {c0, cE2, cE21};
        for (int t = 0; t < 3; ++t) {
          add_edge(up[t], up[(t + 1) % 3], EdgeColor::blue, upc[t], upc[(t + 1) % 3]);
          add_edge(dn[t], dn[(t + 1) % 3], EdgeColor::blue, dnc[t], dnc[(t + 1) % 3]);
        }
        lat.triangles[static_cast<std::size_t>(cm.up_tri(c0))] = up;
        lat.triangles[static_cast<std::size_t>(cm.down_tri(c0))] = dn;

        // hexagon face
        RubyLattice::Hexagon hex;
        for (int k = 0; k < 6; ++k) hex.sites[static_cast<std::size_t>(k)] = cm.site(c0, k);
        hex.color = static_cast<FaceColor>(j);
        lat.hexagons[static_cast<std::size_t>(cell)] = hex;

        // squares: sqE1(c) between hexagons c, c+e1
        //          sqE2(c) between hexagons c, c+e2
        //          sqE21(c) between hexagons c, c-e1+e2
        RubyLattice::Square s1;
        s1.sites = {cm.site(c0, 0), cm.site(cE1, 2), cm.site(cE1, 3), cm.site(c0, 5)};
        s1.up_triangle = cm.up_tri(c0);
        s1.down_triangle = cm.down_tri(cE1m2);
        s1.hexagons = {cell, cm.cell_index(cE1)};
        RubyLattice::Square s2;
        s2.sites = {cm.site(c0, 0), cm.site(cE2, 4), cm.site(cE2, 3), cm.site(c0, 1)};
        s2.up_triangle = cm.up_tri(c0);
        s2.down_triangle = cm.down_tri(c0);
        s2.hexagons = {cell, cm.cell_index(cE2)};
        RubyLattice::Square s3;
        s3.sites = {cm.site(c0, 2), cm.site(c0, 1), cm.site(cE21, 5), cm.site(cE21, 4)};
        s3.up_triangle = cm.up_tri(cM1);
        s3.down_triangle = cm.down_tri(c0);
        s3.hexagons = {cell, cm.cell_index(cE21)};
        lat.squares[static_cast<std::size_t>(cell) * 3 + 0] = s1;
        lat.squares[static_cast<std::size_t>(cell) * 3 + 1] = s2;
        lat.squares[static_cast<std::size_t>(cell) * 3 + 2] = s3;
      }
    }
  }
  return lat;
}

TwoColex contract_triangles(const RubyLattice& lat) {
  auto diag = validate(lat);
  if (!diag.ok()) {
    throw std::invalid_argument("contract_triangles: invalid lattice: " + diag.violations.front());
  }
  TwoColex colex;
  colex.num_vertices = static_cast<int>(lat.triangles.size());
  const CellMap cm{lat.lx, lat.ly};

  // one colex edge per square; wrap = winding of the down triangle relative
  // to the up triangle, recomputed from the generating cell
  colex.edges.resize(lat.squares.size());
  for (int cell = 0; cell < static_cast<int>(lat.hexagons.size()); ++cell) {
    const auto& site0 = lat.sites[static_cast<std::size_t>(cell) * 6];
    const int j = site0.sublattice / 6;
    const int cx = site0.cell_x - site0.cell_y + j;
    const int cy = site0.cell_x + 2 * site0.cell_y;
    const auto c0 = cm.resolve(cx, cy);
    const auto cE1m2 = cm.resolve(cx + 1, cy - 1);
    const auto cM1 = cm.resolve(cx - 1, cy);
    auto face_colors = [&](int sq) {
      const auto& s = lat.squares[static_cast<std::size_t>(sq)];
      const int ca = static_cast<int>(lat.hexagons[static_cast<std::size_t>(s.hexagons[0])].color);
      const int cb = static_cast<int>(lat.hexagons[static_cast<std::size_t>(s.hexagons[1])].color);
      return static_cast<FaceColor>(3 - ca - cb);
    };
    const int sq1 = cell * 3 + 0, sq2 = cell * 3 + 1, sq3 = cell * 3 + 2;
    colex.edges[static_cast<std::size_t>(sq1)] = {
        lat.squares[static_cast<std::size_t>(sq1)].up_triangle,
        lat.squares[static_cast<std::size_t>(sq1)].down_triangle, face_colors(sq1), sq1,
        cE1m2.wrap_x - c0.wrap_x, cE1m2.wrap_y - c0.wrap_y};
    colex.edges[static_cast<std::size_t>(sq2)] = {
        lat.squares[static_cast<std::size_t>(sq2)].up_triangle,
        lat.squares[static_cast<std::size_t>(sq2)].down_triangle, face_colors(sq2), sq2, 0, 0};
    colex.edges[static_cast<std::size_t>(sq3)] = {
        lat.squares[static_cast<std::size_t>(sq3)].up_triangle,
        lat.squares[static_cast<std::size_t>(sq3)].down_triangle, face_colors(sq3), sq3,
        c0.wrap_x - cM1.wrap_x, c0.wrap_y - cM1.wrap_y};

    // face of this hexagon: triangle walk
    // [up(c), down(c), up(c-e1), down(c-e2), up(c-e2), down(c+e1-e2)]
    const auto cM2 = cm.resolve(cx, cy - 1);
    TwoColex::Face face;
    face.vertex_walk = {cm.up_tri(c0),  cm.down_tri(c0),   cm.up_tri(cM1),
                        cm.down_tri(cM2), cm.up_tri(cM2), cm.down_tri(cE1m2)};
    // edges between consecutive walk vertices:
    // [sqE2(c), sqE21(c), sqE1(c-e1), sqE2(c-e2), sqE21(c+e1-e2), sqE1(c)]
    face.edge_walk = {cell * 3 + 1,
                      cell * 3 + 2,
                      cm.cell_index(cM1) * 3 + 0,
                      cm.cell_index(cM2) * 3 + 1,
                      cm.cell_index(cE1m2) * 3 + 2,
                      cell * 3 + 0};
    std::set<int> uniq(face.vertex_walk.begin(), face.vertex_walk.end());
    face.vertices.assign(uniq.begin(), uniq.end());
    face.color = lat.hexagons[static_cast<std::size_t>(cell)].color;
    face.hexagon = cell;
    colex.faces.push_back(face);
  }
  return colex;
}

SquareLattice build_square(int l) {
  if (l < 2 || l % 2 != 0) {
    throw std::invalid_argument("build_square: L must be even and >= 2");
  }
  SquareLattice lat;
  lat.l = l;
  auto sid = [l](int x, int y) { return pos_mod(x, l) * l + pos_mod(y, l); };
  for (int px = 0; px < l; ++px) {
    for (int py = 0; py < l; ++py) {
      SquareLattice::Plaquette p;
      p.corners = {sid(px, py), sid(px + 1, py + 1), sid(px + 1, py), sid(px, py + 1)};
      p.black = (px + py) % 2 == 0;
      lat.plaquettes.push_back(p);
    }
  }
  return lat;
}

LatticeDiagnostics validate(const RubyLattice& lat) {
  LatticeDiagnostics d;
  auto fail = [&](const std::string& s) { d.violations.push_back(s); };
  const std::size_t n = lat.num_sites();
  const std::size_t cells = lat.hexagons.size();
  if (lat.lx < 1 || lat.ly < 1) {
    fail("Lx and Ly must be >= 1");
    return d;
  }
  if (n != 18u * lat.lx * lat.ly) fail("site count != 18*Lx*Ly");
  if (lat.edges.size() != 2 * n) fail("edge count != 2 * sites");

  // degree and per-site color pattern: exactly two blue, one red, one green
  std::vector<std::array<int, 3>> deg(n, {0, 0, 0});
  for (const auto& e : lat.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= static_cast<int>(n) || e.b >= static_cast<int>(n)) {
      fail("edge endpoint out of range");
      return d;
    }
    ++deg[static_cast<std::size_t>(e.a)][static_cast<int>(e.color)];
    ++deg[static_cast<std::size_t>(e.b)][static_cast<int>(e.color)];
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (deg[s] != std::array<int, 3>{1, 1, 2}) {
      std::ostringstream os;
      os << "site " << s << ": degree-color pattern (r,g,b) = (" << deg[s][0] << ","
         << deg[s][1] << "," << deg[s][2] << "), want (1,1,2)";
      fail(os.str());
    }
  }

  // blue triangles partition the sites
  std::vector<int> owner(n, -1);
  for (std::size_t t = 0; t < lat.triangles.size(); ++t) {
    for (int s : lat.triangles[t]) {
      if (owner[static_cast<std::size_t>(s)] != -1) fail("site in two blue triangles");
      owner[static_cast<std::size_t>(s)] = static_cast<int>(t);
    }
  }
  if (std::count(owner.begin(), owner.end(), -1) != 0) fail("site not covered by a triangle");

  // Euler characteristic on the torus
  const std::size_t faces = lat.triangles.size() + lat.squares.size() + lat.hexagons.size();
  if (static_cast<long>(n) - static_cast<long>(lat.edges.size()) + static_cast<long>(faces) != 0) {
    fail("Euler characteristic != 0");
  }
  if (lat.triangles.size() != 2 * cells || lat.squares.size() != 3 * cells) {
    fail("face counts per cell are off");
  }

  // hexagon coloring proper across every square
  for (const auto& sq : lat.squares) {
    const auto ca = lat.hexagons[static_cast<std::size_t>(sq.hexagons[0])].color;
    const auto cb = lat.hexagons[static_cast<std::size_t>(sq.hexagons[1])].color;
    if (ca == cb) fail("adjacent hexagons share a color");
  }
  return d;
}

LatticeDiagnostics validate(const TwoColex& colex) {
  LatticeDiagnostics d;
  auto fail = [&](const std::string& s) { d.violations.push_back(s); };
  std::vector<std::array<int, 3>> deg(static_cast<std::size_t>(colex.num_vertices), {0, 0, 0});
  for (const auto& e : colex.edges) {
    ++deg[static_cast<std::size_t>(e.a)][static_cast<int>(e.color)];
    ++deg[static_cast<std::size_t>(e.b)][static_cast<int>(e.color)];
  }
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] != std::array<int, 3>{1, 1, 1}) fail("colex vertex lacks one edge of each color");
  }
  const long euler = colex.num_vertices - static_cast<long>(colex.edges.size()) +
                     static_cast<long>(colex.faces.size());
  if (euler != 0) fail("colex Euler characteristic != 0");
  // every edge color complements its two bordering faces
  std::map<int, std::vector<const TwoColex::Face*>> edge_faces;
  for (const auto& f : colex.faces) {
    for (int e : f.edge_walk) edge_faces[e].push_back(&f);
  }
  for (std::size_t ei = 0; ei < colex.edges.size(); ++ei) {
    auto it = edge_faces.find(static_cast<int>(ei));
    if (it == edge_faces.end() || it->second.size() != 2) {
      fail("colex edge does not border exactly two faces");
      continue;
    }
    const int ca = static_cast<int>(it->second[0]->color);
    const int cb = static_cast<int>(it->second[1]->color);
    if (ca == cb) fail("colex edge borders two faces of equal color");
    else if (3 - ca - cb != static_cast<int>(colex.edges[ei].color)) {
      fail("colex edge color does not complement its faces");
    }
  }
  return d;
}

LatticeDiagnostics validate(const SquareLattice& lat) {
  LatticeDiagnostics d;
  auto fail = [&](const std::string& s) { d.violations.push_back(s); };
  if (lat.l < 2 || lat.l % 2 != 0) {
    fail("L must be even and >= 2");
    return d;
  }
  if (lat.plaquettes.size() != lat.num_sites()) fail("plaquette count != L^2");
  int black = 0;
  for (const auto& p : lat.plaquettes) black += p.black ? 1 : 0;
  if (black * 2 != static_cast<int>(lat.plaquettes.size())) fail("chessboard coloring unbalanced");
  // neighboring plaquettes (sharing two corners) must differ in color
  for (std::size_t i = 0; i < lat.plaquettes.size(); ++i) {
    for (std::size_t k = i + 1; k < lat.plaquettes.size(); ++k) {
      std::set<int> a(lat.plaquettes[i].corners.begin(), lat.plaquettes[i].corners.end());
      int shared = 0;
      for (int c : lat.plaquettes[k].corners) shared += a.count(c) ? 1 : 0;
      if (shared == 2 && lat.plaquettes[i].black == lat.plaquettes[k].black) {
        fail("edge-adjacent plaquettes share a color");
      }
    }
  }
  return d;
}

}  // namespace rubylat
