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

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rubylat {

/// Interaction color of a ruby-lattice edge (red: xx, green: yy, blue: zz).
enum class EdgeColor : std::uint8_t { red, green, blue };

/// Face color of the 3-coloring of hexagons / 2-colex plaquettes.
/// Independent of EdgeColor even though the palette reads the same.
enum class FaceColor : std::uint8_t { red, green, blue };

const char* to_string(EdgeColor c);
const char* to_string(FaceColor c);

/**
 * The ruby lattice on a genus-1 torus: blue triangles joined through squares,
 * one hexagon per primitive cell, coordination number 4.
 *
 * The enlarged unit cell holds 3 primitive cells (18 sites, 6 triangles,
 * 9 squares, 3 hexagons) so the hexagon 3-coloring closes for every Lx, Ly.
 * Site ids are row-major over (cell_x, cell_y, sublattice) with
 * sublattice = 3*j + ... packed as id = ((cell_x*Ly + cell_y)*3 + j)*6 + k,
 * where j in {0,1,2} indexes the primitive cell inside the enlarged cell
 * (equal to the hexagon color) and k in {0..5} walks the hexagon ring.
 */
struct RubyLattice {
  int lx = 0, ly = 0;

  struct Site {
    int cell_x, cell_y;
    int sublattice;  // 6*j + k
  };
  struct Edge {
    int a, b;
    EdgeColor color;
    int wrap_x, wrap_y;  // enlarged-cell winding of b relative to a
  };
  /// Square face: sites in cyclic order [u0, u1, d0, d1]; (u0,u1) and (d0,d1)
  /// are blue edges of the up/down triangle, (u1,d0) and (d1,u0) are the
  /// red/green cross edges.
  struct Square {
    std::array<int, 4> sites;
    int up_triangle, down_triangle;
    std::array<int, 2> hexagons;  // the two hexagon faces it separates
  };
  struct Hexagon {
    std::array<int, 6> sites;  // ring order
    FaceColor color;
  };

  std::vector<Site> sites;
  std::vector<Edge> edges;
  std::vector<std::array<int, 3>> triangles;  // blue triangles, partition of sites
  std::vector<Square> squares;
  std::vector<Hexagon> hexagons;

  std::size_t num_sites() const { return sites.size(); }
};

/// Build the ruby lattice on an Lx-by-Ly torus of enlarged cells.
RubyLattice build_ruby(int lx, int ly);

/**
 * The honeycomb 2-colex obtained by shrinking every blue triangle to a
 * point. Vertex v corresponds to RubyLattice triangle v; face f to
 * hexagon f. Edges come from squares and carry the color complementary to
 * the two faces they separate.
 */
struct TwoColex {
  int num_vertices = 0;
  struct Edge {
    int a, b;            // a = up triangle, b = down triangle
    FaceColor color;
    int square;          // originating ruby square
    int wrap_x, wrap_y;  // winding of b relative to a
  };
  struct Face {
    std::array<int, 6> vertex_walk;  // boundary walk (vertices may repeat on small tori)
    std::array<int, 6> edge_walk;    // edge_walk[i] joins vertex_walk[i] -> [i+1]
    std::vector<int> vertices;       // unique, ascending
    FaceColor color;
    int hexagon;  // originating ruby hexagon
  };
  std::vector<Edge> edges;
  std::vector<Face> faces;
  int genus = 1;
};

TwoColex contract_triangles(const RubyLattice& lat);

/**
 * Square lattice on a torus for the plaquette toric code, one spin per
 * vertex. Plaquette corners are ordered [1,2,3,4] = [SW, NE, SE, NW]; the
 * stabilizer acts as x on corners 1,2 and z on corners 3,4. L must be even
 * so the chessboard plaquette coloring closes.
 */
struct SquareLattice {
  int l = 0;
  struct Plaquette {
    std::array<int, 4> corners;  // [SW, NE, SE, NW]
    bool black;
  };
  std::vector<Plaquette> plaquettes;
  std::size_t num_sites() const { return static_cast<std::size_t>(l) * l; }
};

SquareLattice build_square(int l);

/// Diagnostics from structural validation; empty violations == all good.
struct LatticeDiagnostics {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

LatticeDiagnostics validate(const RubyLattice& lat);
LatticeDiagnostics validate(const TwoColex& colex);
LatticeDiagnostics validate(const SquareLattice& lat);

}  // namespace rubylat
