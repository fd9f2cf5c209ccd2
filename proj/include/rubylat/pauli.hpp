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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rubylat {

/// Single-site Pauli kind.
enum class PauliKind : std::uint8_t { x, y, z };

/**
 * An n-qubit Pauli string in binary symplectic form with an exact phase.
 *
 * The operator represented is
 *
 *     i^phase_exp * prod_j X_j^{x_j} Z_j^{z_j}
 *
 * with the fixed normal ordering X left of Z on every site. Operators on
 * different sites commute, so the ordering across sites is immaterial.
 * The phase exponent lives in Z_4 and is never stored as floating point,
 * which keeps the whole group algebra exact.
 *
 * Values are immutable after construction; all operations are pure.
 */
class PauliOperator {
 public:
  PauliOperator() = default;

  /// Identity on n qubits.
  explicit PauliOperator(std::size_t n);

  /// i^phase * prod X^x Z^z from explicit bit masks (words little-endian,
  /// bit j of word w is site 64*w + j).
  PauliOperator(std::size_t n, std::vector<std::uint64_t> xbits,
                std::vector<std::uint64_t> zbits, unsigned phase_exp);

  /// Hermitian single-site Pauli. For kind y the stored phase is 1 (Y = iXZ).
  static PauliOperator single(std::size_t n, std::size_t site, PauliKind kind);

  std::size_t num_qubits() const { return n_; }
  unsigned phase_exp() const { return phase_; }
  const std::vector<std::uint64_t>& xbits() const { return x_; }
  const std::vector<std::uint64_t>& zbits() const { return z_; }

  bool x_bit(std::size_t site) const { return (x_[site >> 6] >> (site & 63)) & 1; }
  bool z_bit(std::size_t site) const { return (z_[site >> 6] >> (site & 63)) & 1; }

  /// True when xbits and zbits are all zero (operator is i^phase * identity).
  bool is_identity_bits() const;

  /// Number of sites carrying a non-identity letter.
  std::size_t weight() const;

  /// Sites carrying a non-identity letter, ascending.
  std::vector<std::size_t> support() const;

  /// Number of sites with both x and z set (Y letters).
  std::size_t y_count() const;

  /// P is Hermitian iff phase_exp + |x & z| is even.
  bool is_hermitian() const;

  /**
   * The Hermitian representative with leading +1 when written as a product
   * of X/Y/Z letters, i.e. phase_exp == y_count() mod 4. Requires a
   * Hermitian operator.
   */
  PauliOperator hermitian_canonical() const;

  /// Sign s in {+1,-1} with *this == s * hermitian_canonical().
  int canonical_sign() const;

  /**
   * Action on a computational basis state: P |b> = i^k |b ^ xbits> with
   * k = phase_exp + 2*parity(zbits & b). Sites are bits of b, |0> is the
   * +1 eigenstate of Z. Only valid for n <= 64.
   */
  struct BasisImage {
    std::uint64_t index;
    unsigned phase_quarter;  // scalar is i^phase_quarter
  };
  BasisImage apply_to_basis(std::uint64_t basis_index) const;

  /// Scalar of apply_to_basis as a complex number.
  static std::complex<double> quarter_to_scalar(unsigned k);

  /**
   * Canonical text form, e.g. "X0 Z3 Y7", "-iX0 Z0", "I". The prefix is one
   * of {"", "-", "+i", "-i"} relative to the product of letters.
   */
  std::string to_text() const;

  /**
   * Parse the text form. Accepts prefixes {+, -, +i, -i, i} (ASCII '-' or
   * U+2212), letters X/Y/Z/I with site indices. Letters repeated on one
   * site are resolved by exact multiplication in the written order, so
   * "-iX0 Z0" equals -i * X0 * Z0.
   */
  static PauliOperator parse(std::string_view text, std::size_t n);

  bool operator==(const PauliOperator& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> x_, z_;
  std::uint8_t phase_ = 0;

  void set_x(std::size_t site) { x_[site >> 6] |= std::uint64_t{1} << (site & 63); }
  void set_z(std::size_t site) { z_[site >> 6] |= std::uint64_t{1} << (site & 63); }
  friend PauliOperator multiply(const PauliOperator&, const PauliOperator&);
};

/// Exact group product P*Q with full phase tracking.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

/// Symplectic commutation test: true iff |P.x & Q.z| + |P.z & Q.x| is even.
bool commutes(const PauliOperator& p, const PauliOperator& q);

}  // namespace rubylat
