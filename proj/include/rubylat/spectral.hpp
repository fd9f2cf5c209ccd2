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

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rubylat/code_analysis.hpp"
#include "rubylat/hamiltonian.hpp"
#include "rubylat/pauli.hpp"

namespace rubylat {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using BlockMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr std::size_t kMaxSpectralQubits = 24;

/// Thrown when the iterative eigensolver fails to reach the residual target.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// True when every term has an even number of Y letters, so the matrix is
/// real symmetric in the computational basis.
inline bool is_real_representable(const HamiltonianTerms& h) {
  for (const auto& t : h.terms) {
    if (!t.is_zero() && (t.op.y_count() & 1)) return false;
  }
  return true;
}

namespace detail {

template <typename Scalar>
Scalar quarter_scalar(unsigned k);

template <>
inline double quarter_scalar<double>(unsigned k) {
  if (k == 0) return 1.0;
  if (k == 2) return -1.0;
  throw std::invalid_argument("real scalar requested for a complex term");
}

template <>
inline std::complex<double> quarter_scalar<std::complex<double>>(unsigned k) {
  return PauliOperator::quarter_to_scalar(k);
}

}  // namespace detail

/**
 * Matrix-free action of a term list on state vectors. Gather form:
 *
 *   out[r] = sum_t coeff_t * i^{k_t(r ^ x_t)} * in[r ^ x_t]
 *
 * which is race-free and parallelizes over output indices.
 */
template <typename Scalar>
class MatvecEngine {
 public:
  explicit MatvecEngine(const HamiltonianTerms& h) : n_(h.n) {
    if (h.n > kMaxSpectralQubits) {
      throw std::invalid_argument("MatvecEngine: qubit count exceeds the n <= 24 cap");
    }
    dim_ = std::uint64_t{1} << h.n;
    for (const auto& t : h.terms) {
      if (t.is_zero()) continue;
      const auto& xw = t.op.xbits();
      const auto& zw = t.op.zbits();
      Term term;
      term.x = xw.empty() ? 0 : xw[0];
      term.z = zw.empty() ? 0 : zw[0];
      term.base = t.coefficient * detail::quarter_scalar<Scalar>(t.op.phase_exp() & 3);
      norm_bound_ += std::abs(t.coefficient);
      terms_.push_back(term);
    }
  }

  std::uint64_t dimension() const { return dim_; }
  std::size_t num_qubits() const { return n_; }
  /// 1-norm of the coefficients; a bound on the spectral radius.
  double norm_bound() const { return norm_bound_; }

  void apply(const Vector<Scalar>& in, Vector<Scalar>& out) const {
    out.setZero(static_cast<Eigen::Index>(dim_));
    for (const auto& t : terms_) {
#pragma omp parallel for schedule(static)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim_); ++r) {
        const std::uint64_t src = static_cast<std::uint64_t>(r) ^ t.x;
        const Scalar v = (std::popcount(t.z & src) & 1) ? -t.base : t.base;
        out[r] += v * in[static_cast<Eigen::Index>(src)];
      }
    }
  }

  void apply_block(const BlockMatrix<Scalar>& in, BlockMatrix<Scalar>& out) const {
    out.setZero(in.rows(), in.cols());
    for (const auto& t : terms_) {
#pragma omp parallel for schedule(static)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim_); ++r) {
        const std::uint64_t src = static_cast<std::uint64_t>(r) ^ t.x;
        const Scalar v = (std::popcount(t.z & src) & 1) ? -t.base : t.base;
        out.row(r) += v * in.row(static_cast<Eigen::Index>(src));
      }
    }
  }

  /// True when every term is diagonal (no X content).
  bool is_diagonal() const {
    for (const auto& t : terms_) {
      if (t.x) return false;
    }
    return true;
  }

  /// Exact diagonal of the matrix (cheap when is_diagonal()).
  Vector<Scalar> diagonal() const {
    Vector<Scalar> d = Vector<Scalar>::Zero(static_cast<Eigen::Index>(dim_));
    for (const auto& t : terms_) {
      if (t.x) continue;
#pragma omp parallel for schedule(static)
      for (std::int64_t r = 0; r < static_cast<std::int64_t>(dim_); ++r) {
        d[r] += (std::popcount(t.z & static_cast<std::uint64_t>(r)) & 1) ? -t.base : t.base;
      }
    }
    return d;
  }

 private:
  struct Term {
    std::uint64_t x, z;
    Scalar base;
  };
  std::size_t n_;
  std::uint64_t dim_ = 0;
  double norm_bound_ = 0.0;
  std::vector<Term> terms_;
};

/// Convenience single matvec used by tests and invariants.
template <typename Scalar>
Vector<Scalar> matvec(const HamiltonianTerms& h, const Vector<Scalar>& v) {
  MatvecEngine<Scalar> engine(h);
  if (static_cast<std::uint64_t>(v.size()) != engine.dimension()) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vector<Scalar> out;
  engine.apply(v, out);
  return out;
}

/// <v|P|v> for a normalized state; exact phase arithmetic per basis state.
inline std::complex<double> expectation(const PauliOperator& p,
                                        const Vector<std::complex<double>>& v) {
  const std::uint64_t dim = std::uint64_t{1} << p.num_qubits();
  if (static_cast<std::uint64_t>(v.size()) != dim) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  std::complex<double> acc = 0.0;
  for (std::uint64_t b = 0; b < dim; ++b) {
    const auto img = p.apply_to_basis(b);
    acc += std::conj(v[static_cast<Eigen::Index>(img.index)]) *
           PauliOperator::quarter_to_scalar(img.phase_quarter) * v[static_cast<Eigen::Index>(b)];
  }
  return acc;
}

inline std::complex<double> expectation(const PauliOperator& p, const Vector<double>& v) {
  Vector<std::complex<double>> vc = v.cast<std::complex<double>>();
  return expectation(p, vc);
}

/// A group of nearly equal eigenvalues.
struct EigenCluster {
  double mean;
  int multiplicity;
};

/// Merge adjacent sorted eigenvalues lying within rel_tol * (spectral width).
std::vector<EigenCluster> cluster(const std::vector<double>& sorted_eigs, double rel_tol);

struct EigsOptions {
  int m = 1;                  // how many lowest eigenvalues
  double tol = 1e-10;         // residual target relative to the norm bound
  std::uint64_t seed = 1;     // starting-block seed
  double cluster_tol = 1e-8;  // relative clustering tolerance for the report
  int max_rounds = 200;
  int block_extra = 0;        // 0 = automatic
  int cheb_degree = 0;        // 0 = automatic
  std::size_t dense_cutoff = 12;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;   // ascending, m of them
  std::vector<EigenCluster> clusters;
  double gap = 0.0;                  // spacing between the first two clusters
  std::vector<double> residuals;     // per eigenpair, ||Hv - lambda v||
  std::string method;                // "dense", "diagonal", "chebfsi"
  int iterations = 0;
};

namespace detail {

/// Dense matrix of the term list (n <= dense cutoff sizes).
inline Eigen::MatrixXcd dense_matrix(const HamiltonianTerms& h) {
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& t : h.terms) {
    if (t.is_zero()) continue;
    for (std::uint64_t col = 0; col < dim; ++col) {
      const auto img = t.op.apply_to_basis(col);
      m(static_cast<Eigen::Index>(img.index), static_cast<Eigen::Index>(col)) +=
          t.coefficient * PauliOperator::quarter_to_scalar(img.phase_quarter);
    }
  }
  return m;
}

template <typename Scalar>
SpectrumReport chebfsi_lowest(const MatvecEngine<Scalar>& engine, const EigsOptions& opt,
                              Eigen::MatrixXcd* vectors);

}  // namespace detail

/**
 * The m lowest eigenvalues. Dispatches on structure: exact diagonal read-off
 * for x-free Hamiltonians, dense solve for n <= dense_cutoff, and otherwise
 * Chebyshev-filtered subspace iteration with Rayleigh-Ritz extraction, which
 * resolves degenerate clusters correctly (the whole near-ground invariant
 * subspace is converged, not one Krylov copy per eigenvalue).
 *
 * When `vectors` is non-null it receives the m eigenvectors as columns.
 */
SpectrumReport lowest_eigs(const HamiltonianTerms& h, const EigsOptions& opt,
                           Eigen::MatrixXcd* vectors = nullptr);

/// Exact full spectrum for x-free (diagonal) Hamiltonians.
std::vector<double> diagonal_spectrum(const HamiltonianTerms& h);

struct CompareEffectiveOptions {
  double tol = 1e-12;         // eigensolver residual target (relative)
  std::uint64_t seed = 1;
  double cluster_tol = 1e-4;  // relative, within the low sector / effective spectrum
  /// Ground-sector mode runs the two-body model with ferromagnetic blue
  /// coupling -|jz| so the vortex-free triangle sector is lowest; literal
  /// keeps jz as passed.
  bool ground_sector = true;
  EffectiveReading reading = EffectiveReading::symmetric;
};

struct EffectiveComparison {
  std::vector<double> two_body_low;    // lowest 2^T of the two-body model
  double next_above = 0.0;             // first eigenvalue above the low sector
  std::vector<double> effective_full;  // full 2^T spectrum of the effective model
  std::vector<EigenCluster> low_clusters, effective_clusters;
  double sector_gap = 0.0;   // next_above - max(two_body_low)
  double low_spread = 0.0;   // max - min of the low sector
  double effective_spread = 0.0;
  double alpha = 0.0;        // least-squares scale, two_body ~ alpha * effective
  double pattern_deviation = 0.0;        // max |low~ - alpha*eff~| after mean removal
  double effective_spread_scaled = 0.0;  // |alpha| * effective_spread
  bool multiplicity_match = false;
  Couplings couplings_used;  // after ground-sector adjustment
};

/**
 * Strong-coupling comparison: lowest 2^T eigenvalues of the two-body model
 * against the exact 2^T spectrum of the ninth-order effective color code,
 * after mean subtraction and least-squares rescaling.
 */
EffectiveComparison compare_effective(const RubyLattice& lat, const TwoColex& colex,
                                      const Couplings& c, const CompareEffectiveOptions& opt);

}  // namespace rubylat
