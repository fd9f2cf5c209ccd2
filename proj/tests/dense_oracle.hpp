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

// Test-only dense oracle. Builds operators by Kronecker products of 2x2
// matrices, on purpose sharing no code with the bit-level implementation
// it cross-checks.

#include <Eigen/Dense>
#include <complex>

#include "rubylat/hamiltonian.hpp"
#include "rubylat/pauli.hpp"

namespace oracle {

inline Eigen::Matrix2cd letter(char c) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  const std::complex<double> i(0.0, 1.0);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    default:  m << 1, 0, 0, -1; break;
  }
  return m;
}

/// Dense matrix of a Pauli string; site 0 is the least significant bit of
/// the basis index, hence the rightmost Kronecker factor.
inline Eigen::MatrixXcd dense_pauli(const rubylat::PauliOperator& p) {
  const std::size_t n = p.num_qubits();
  std::complex<double> pref = 1.0;
  {
    const unsigned rel = (p.phase_exp() - (p.y_count() & 3)) & 3;
    const std::complex<double> i(0.0, 1.0);
    for (unsigned k = 0; k < rel; ++k) pref *= i;
  }
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = pref;
  for (std::size_t s = 0; s < n; ++s) {
    const char c = p.x_bit(s) ? (p.z_bit(s) ? 'Y' : 'X') : (p.z_bit(s) ? 'Z' : 'I');
    const Eigen::Matrix2cd l = letter(c);
    Eigen::MatrixXcd out(m.rows() * 2, m.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int q = 0; q < 2; ++q) out.block(r * m.rows(), q * m.cols(), m.rows(), m.cols()) = l(r, q) * m;
    }
    m.swap(out);
  }
  return m;
}

inline Eigen::MatrixXcd dense_hamiltonian(const rubylat::HamiltonianTerms& h) {
  const long dim = 1L << h.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms) {
    if (t.is_zero()) continue;
    m += t.coefficient * dense_pauli(t.op);
  }
  return m;
}

/// Dimension of the joint +1 eigenspace of the generators, by explicit
/// projector products.
inline long joint_plus_one_dim(const std::vector<rubylat::PauliOperator>& gens, std::size_t n) {
  const long dim = 1L << n;
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : gens) {
    proj = proj * (Eigen::MatrixXcd::Identity(dim, dim) + dense_pauli(g)) / 2.0;
  }
  return std::lround(proj.trace().real());
}

}  // namespace oracle
