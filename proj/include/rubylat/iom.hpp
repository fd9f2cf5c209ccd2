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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rubylat/hamiltonian.hpp"
#include "rubylat/lattice.hpp"
#include "rubylat/pauli.hpp"

namespace rubylat {

/// Raised when a construction that is supposed to be guaranteed by the
/// model's algebra fails; always a bug, never a user error.
struct InvariantError : std::logic_error {
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

struct PlaquetteProvenance {
  int face;
  char label;  // 'A', 'B' or 'C'
};

struct StringProvenance {
  FaceColor color;
  std::array<int, 2> homology;  // Z2 x Z2 class on the torus
  std::vector<int> vertices;    // triangle walk in the colex
  std::vector<int> edges;
  char label;
};

struct StringnetProvenance {
  std::vector<std::string> components;
  std::array<int, 2> homology;
};

/// A Pauli operator commuting with every Hamiltonian term, plus where it
/// came from. Operators are Hermitian and square to +identity.
struct IntegralOfMotion {
  PauliOperator op;
  std::variant<PlaquetteProvenance, StringProvenance, StringnetProvenance> provenance;
};

/// Exact symplectic test against every term; independent of couplings.
bool commutes_with_all(const PauliOperator& op, const HamiltonianTerms& h);

/**
 * Basis of the Pauli operators supported on the given sites that commute
 * with every term of h, found as the GF(2) nullspace of the symplectic
 * commutation constraints. Identity excluded; phases fixed to Hermitian
 * representatives with leading +. Support is capped at 64 sites.
 */
std::vector<PauliOperator> find_local_ioms(const HamiltonianTerms& h,
                                           std::span<const int> support);

struct PlaquetteTriple {
  IntegralOfMotion a, b, c;
  int face;
};

/**
 * The three plaquette IOMs of a hexagonal face: A carries x letters on the
 * hexagon ring with the dangling-edge dressing on the six surrounding
 * triangles, B the y counterpart with the same dressing, and C the bare z
 * ring. Exactly two are independent and multiply(A, B) == -C holds with
 * exact phase. Everything is verified on construction.
 */
PlaquetteTriple plaquette_ioms(const RubyLattice& lat, const HamiltonianTerms& h, int face);

/// A closed walk in the colex: edges[i] joins vertices[i] to
/// vertices[(i+1) % size]. Walks are simple cycles here.
struct ColexWalk {
  std::vector<int> vertices;
  std::vector<int> edges;
};

/// All simple closed walks up to max_len edges, deterministically ordered.
std::vector<ColexWalk> closed_walks(const TwoColex& colex, int max_len);

/// True when the walk is a color-kappa string: its kappa-colored edges
/// alternate with arcs that each run along a single kappa-colored face.
/// A walk with no kappa edges must lie entirely on one kappa face.
bool walk_matches_color(const TwoColex& colex, const ColexWalk& walk, FaceColor kappa);

/// The unique matching color, when exactly one exists.
std::optional<FaceColor> walk_color(const TwoColex& colex, const ColexWalk& walk);

/// Z2 x Z2 homology class from accumulated torus windings.
std::array<int, 2> walk_homology(const TwoColex& colex, const ColexWalk& walk);

/// Algebraic crossing parity of two homology classes on the torus.
int crossing_parity(const std::array<int, 2>& ha, const std::array<int, 2>& hb);

struct StringTriple {
  IntegralOfMotion a, b, c;
  FaceColor color;
  std::array<int, 2> homology;
  /// Exact signs s in multiply(A,B) = s*C, multiply(B,C) = s*A,
  /// multiply(A,C) = s*B.
  int sign_ab_c, sign_bc_a, sign_ac_b;
};

/**
 * The three string IOMs living on the strip of ruby sites along a closed
 * colex walk of the stated color. The strip commutant must have GF(2)
 * dimension exactly 2; its three nontrivial elements are labeled A (x-rich),
 * B (y-rich), C (the remaining product).
 */
StringTriple string_ioms(const RubyLattice& lat, const TwoColex& colex,
                         const HamiltonianTerms& h, const ColexWalk& walk, FaceColor color);

/// Product of string IOMs; branchings sit at shared blue triangles.
IntegralOfMotion make_stringnet(const std::vector<IntegralOfMotion>& components);

struct StringnetReport {
  bool commutes_all = false;
  bool decomposes = false;  // over the plaquette-IOM span (GF(2) solve)
  std::vector<std::pair<int, char>> plaquette_combination;  // (face, 'A'/'B')
  int sign = 0;  // net == sign * product of the combination, exact
};

/// Verify a string-net: commutation with every term, and decomposition over
/// plaquette IOMs with the exact sign whenever the net lies in their span.
StringnetReport stringnet_verify(const RubyLattice& lat, const HamiltonianTerms& h,
                                 const IntegralOfMotion& net,
                                 const std::vector<PlaquetteTriple>& plaquettes);

struct LogicalAlgebra {
  IntegralOfMotion x1, z1, x2, z2;
};

/**
 * Four torus string IOMs forming the two-qubit Pauli algebra: all cross
 * pairs commute except {Z1,X1} = {Z2,X2} = 0, and all four square to
 * +identity. Found by a deterministic search over colored nontrivial string
 * candidates, preferring x-type/z-type pairs of homology (0,1)/(1,0).
 */
LogicalAlgebra logical_algebra(const RubyLattice& lat, const TwoColex& colex,
                               const HamiltonianTerms& h);

}  // namespace rubylat
