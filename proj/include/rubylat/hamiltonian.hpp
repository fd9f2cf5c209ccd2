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

#include <string>
#include <vector>

#include "rubylat/lattice.hpp"
#include "rubylat/pauli.hpp"

namespace rubylat {

/// Exchange couplings of the two-body model (energy units).
struct Couplings {
  double jx = 1.0, jy = 1.0, jz = 1.0;
};

/// One weighted term; op is always a Hermitian canonical Pauli. Terms with
/// coefficient zero are kept so term lists stay in bijection with their
/// lattice source, and can be spotted via is_zero().
struct WeightedPauli {
  double coefficient;
  PauliOperator op;
  bool is_zero() const { return coefficient == 0.0; }
};

/// A Hamiltonian as an explicit weighted sum of Pauli strings.
struct HamiltonianTerms {
  std::size_t n = 0;
  std::vector<WeightedPauli> terms;
};

/**
 * H = sum over edges of J_w sigma^w_i sigma^w_j, with w = x on red links,
 * y on green links, z on blue links. One term per edge, in edge order, sign
 * +1 on every coefficient.
 */
HamiltonianTerms build_two_body(const RubyLattice& lat, const Couplings& c);

/// Plaquette toric code H = -sum_p A_p, A_p = x1 x2 z3 z4 on the fixed
/// corner order [SW, NE, SE, NW].
HamiltonianTerms build_toric(const SquareLattice& lat);

/// Color code H = -sum_p (Bx_p + By_p), two terms per colex face over the
/// face's vertex set. Faces with an odd vertex count are rejected.
HamiltonianTerms build_color_code(const TwoColex& colex);

/// Which reading of the printed ninth-order coefficient relation to use.
/// The symmetric reading restores the x<->y symmetry of the couplings; the
/// literal reading keeps the printed |J_z|^3 in k_y.
enum class EffectiveReading { symmetric, literal };

struct EffectiveCoefficients {
  double kx, ky, kz;
  EffectiveReading reading;
};

/// Ninth-order effective couplings: kz = (3/8)|jx*jy|^3 and
/// kx : ky = |jy|^3 : |jx|^3 scaled by (55489/13824)|jx*jy|^3 under the
/// symmetric reading (literal substitutes |jz|^3 for |jx|^3 in ky).
EffectiveCoefficients effective_coefficients(const Couplings& c,
                                             EffectiveReading reading = EffectiveReading::symmetric);

/// Effective model H_eff = -sum_p (kx Bx_p + ky By_p + kz Bx_p By_p); the
/// BxBy product is computed phase-exactly and its sign folded into the
/// coefficient.
HamiltonianTerms build_effective(const TwoColex& colex, const Couplings& c,
                                 EffectiveReading reading = EffectiveReading::symmetric);

/// One JSON object per line: {"coefficient": c, "pauli": "X0 Z1"}.
std::string terms_to_jsonl(const HamiltonianTerms& h);

/// Sparse matrix in coordinate text form, "row col real imag" per line,
/// rows/cols 0-based over the 2^n computational basis. Requires n <= 14.
std::string terms_to_coo(const HamiltonianTerms& h);

}  // namespace rubylat
