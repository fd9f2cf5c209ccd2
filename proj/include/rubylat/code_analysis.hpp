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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rubylat/gf2.hpp"
#include "rubylat/hamiltonian.hpp"
#include "rubylat/pauli.hpp"

namespace rubylat {

/// An abelian subgroup of the Pauli group given by Hermitian generators.
struct StabilizerGroup {
  std::size_t n = 0;
  std::vector<PauliOperator> generators;

  /// Symplectic check matrix, one row [x|z] per generator.
  std::vector<Gf2Vec> check_matrix() const;
};

/// Wrap Hamiltonian terms as a stabilizer group (coefficients dropped).
/// Throws when two term operators fail to commute; the message names the
/// offending pair.
StabilizerGroup from_terms(const HamiltonianTerms& h);

struct GroupAnalysis {
  std::size_t rank = 0;
  std::size_t k = 0;              // logical qubits, n - rank
  std::uint64_t degeneracy = 0;   // 2^k
  /// Generator index sets whose product is the identity (sign +1) --
  /// the relation basis found during elimination.
  std::vector<std::vector<std::size_t>> relations;
  /// True when some subset multiplies to -identity; the group is then not
  /// a valid stabilizer group.
  bool contains_minus_identity = false;
};

/// GF(2) elimination with exact phase tracking along every row operation.
GroupAnalysis rank_and_logicals(const StabilizerGroup& g);

/// Bit i set iff the error anticommutes with generator i.
std::vector<bool> syndrome(const StabilizerGroup& g, const PauliOperator& error);

enum class CodeFamily { toric, color };

/**
 * A topological charge. Fusion is XOR on bits. For the toric family bits
 * are (e, m); for the color family bits are two color classes in Z2xZ2
 * (violations of the x-type and y-type face stabilizers), encoded
 * (cx << 2) | cy with r=1, g=2, b=3.
 */
struct ChargeLabel {
  std::uint8_t bits;
  std::string name;
  bool fermion;
  int fermion_family;  // 1..3 for color-family fermions, 0 otherwise
};

/// The full charge table: 4 entries for toric, 16 for color (including the
/// trivial charge). Statistics tags are bookkeeping, not computed braiding.
std::vector<ChargeLabel> charge_table(CodeFamily family);

ChargeLabel fuse(CodeFamily family, const ChargeLabel& a, const ChargeLabel& b);

/**
 * Exact spectrum of a pairwise-commuting Pauli Hamiltonian by joint-sector
 * sign enumeration: each independent generator takes eigenvalues +-1
 * subject to the group relations, every consistent sign pattern carries a
 * 2^(n-rank)-dimensional eigenspace. Returns (energy, multiplicity) sorted
 * by energy. Requires rank <= 26.
 */
std::vector<std::pair<double, std::uint64_t>> stabilizer_spectrum(const HamiltonianTerms& h);

}  // namespace rubylat
