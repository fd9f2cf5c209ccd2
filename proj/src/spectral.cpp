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

#include "rubylat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rubylat {

std::vector<EigenCluster> cluster(const std::vector<double>& sorted_eigs, double rel_tol) {
  std::vector<EigenCluster> out;
  if (sorted_eigs.empty()) return out;
  const double scale = std::max(sorted_eigs.back() - sorted_eigs.front(), 1e-300);
  const double tol = rel_tol * scale;
  double sum = sorted_eigs[0], last = sorted_eigs[0];
  int count = 1;
  for (std::size_t i = 1; i < sorted_eigs.size(); ++i) {
    if (sorted_eigs[i] - last <= tol) {
      sum += sorted_eigs[i];
      ++count;
    } else {
      out.push_back({sum / count, count});
      sum = sorted_eigs[i];
      count = 1;
    }
    last = sorted_eigs[i];
  }
  out.push_back({sum / count, count});
  return out;
}

std::vector<double> diagonal_spectrum(const HamiltonianTerms& h) {
  MatvecEngine<double> engine(h);
  if (!engine.is_diagonal()) {
    throw std::invalid_argument("diagonal_spectrum: Hamiltonian has off-diagonal terms");
  }
  const auto d = engine.diagonal();
  std::vector<double> out(d.data(), d.data() + d.size());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

template <typename Scalar>
SpectrumReport chebfsi_lowest(const MatvecEngine<Scalar>& engine, const EigsOptions& opt,
                              Eigen::MatrixXcd* vectors) {
  using Block = BlockMatrix<Scalar>;
  const Eigen::Index dim = static_cast<Eigen::Index>(engine.dimension());
  const int m = opt.m;
  const int extra = opt.block_extra > 0 ? opt.block_extra : std::max(8, m / 2);
  const int p = std::min<int>(m + extra, static_cast<int>(dim));
  const int deg = opt.cheb_degree > 0 ? opt.cheb_degree : 40;
  const double bound = engine.norm_bound() * 1.001 + 1e-12;
  const double res_target = opt.tol * std::max(engine.norm_bound(), 1.0);

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Block v(dim, p);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (int j = 0; j < p; ++j) {
      if constexpr (std::is_same_v<Scalar, double>) {
        v(i, j) = gauss(rng);
      } else {
        v(i, j) = Scalar(gauss(rng), gauss(rng));
      }
    }
  }

  auto orthonormalize = [&](Block& b) {
    using ColMaj = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    ColMaj tmp = b;
    Eigen::HouseholderQR<ColMaj> qr(tmp);
    ColMaj q = qr.householderQ() * ColMaj::Identity(dim, p);
    b = q;
  };

  // chunked three-term Chebyshev recurrence; damps [cut, bound]
  auto filter = [&](Block& b, double cut, int degree) {
    const double e = (bound - cut) / 2.0;
    const double c = (bound + cut) / 2.0;
    const int chunk = 32;
    for (int j0 = 0; j0 < p; j0 += chunk) {
      const int w = std::min(chunk, p - j0);
      Block t0 = b.middleCols(j0, w);
      Block t1(dim, w), tmp(dim, w);
      engine.apply_block(t0, t1);
      t1 = (t1 - c * t0) / e;
      for (int k = 2; k <= degree; ++k) {
        engine.apply_block(t1, tmp);
        tmp = 2.0 * (tmp - c * t1) / e - t0;
        t0.swap(t1);
        t1.swap(tmp);
      }
      b.middleCols(j0, w) = t1;
    }
  };

  orthonormalize(v);
  SpectrumReport report;
  report.method = "chebfsi";
  double cut = 0.0;
  bool have_cut = false;
  Eigen::VectorXd ritz;
  Block hv(dim, p);
  for (int round = 0; round < opt.max_rounds; ++round) {
    if (have_cut) {
      filter(v, cut, deg);
      orthonormalize(v);
    }
    engine.apply_block(v, hv);
    using ColMaj = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    ColMaj small = v.adjoint() * hv;
    small = Scalar(0.5) * (small + ColMaj(small.adjoint()));
    Eigen::SelfAdjointEigenSolver<ColMaj> es(small);
    ritz = es.eigenvalues();
    const ColMaj rot = es.eigenvectors();
    Block vr = v * rot;
    Block hvr = hv * rot;
    v.swap(vr);
    hv.swap(hvr);

    double max_res = 0.0;
    report.residuals.assign(static_cast<std::size_t>(m), 0.0);
    for (int i = 0; i < m; ++i) {
      const double r = (hv.col(i) - ritz[i] * v.col(i)).norm();
      report.residuals[static_cast<std::size_t>(i)] = r;
      max_res = std::max(max_res, r);
    }
    report.iterations = round + 1;
    // damp everything above a cushion beyond the wanted part
    cut = ritz[std::min<int>(m + std::max(1, extra / 2), p - 1)];
    if (cut <= ritz[m - 1]) cut = ritz[m - 1] + 1e-8 * std::max(1.0, bound);
    have_cut = true;
    if (max_res <= res_target) {
      report.eigenvalues.assign(ritz.data(), ritz.data() + m);
      if (vectors) {
        vectors->resize(dim, m);
        for (int i = 0; i < m; ++i) {
          vectors->col(i) = v.col(i).template cast<std::complex<double>>();
        }
      }
      return report;
    }
  }
  std::ostringstream os;
  os << "chebfsi: no convergence after " << opt.max_rounds << " rounds; residuals:";
  for (double r : report.residuals) os << ' ' << r;
  throw ConvergenceError(os.str());
}

template SpectrumReport chebfsi_lowest<double>(const MatvecEngine<double>&, const EigsOptions&,
                                               Eigen::MatrixXcd*);
template SpectrumReport chebfsi_lowest<std::complex<double>>(
    const MatvecEngine<std::complex<double>>&, const EigsOptions&, Eigen::MatrixXcd*);

}  // namespace detail

SpectrumReport lowest_eigs(const HamiltonianTerms& h, const EigsOptions& opt,
                           Eigen::MatrixXcd* vectors) {
  if (h.n > kMaxSpectralQubits) {
    throw std::invalid_argument("lowest_eigs: qubit count exceeds the n <= 24 cap");
  }
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  if (opt.m < 1 || static_cast<std::uint64_t>(opt.m) > dim) {
    throw std::invalid_argument("lowest_eigs: m out of range");
  }
  SpectrumReport report;
  const bool real = is_real_representable(h);

  bool diagonal = true;
  for (const auto& t : h.terms) {
    if (!t.is_zero() && (t.op.xbits().empty() ? false : t.op.xbits()[0] != 0)) {
      diagonal = false;
      break;
    }
  }

  if (diagonal) {
    MatvecEngine<double> engine(h);
    const auto d = engine.diagonal();
    std::vector<std::uint64_t> order(dim);
    for (std::uint64_t i = 0; i < dim; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::uint64_t a, std::uint64_t b) { return d[static_cast<Eigen::Index>(a)] < d[static_cast<Eigen::Index>(b)]; });
    report.method = "diagonal";
    report.eigenvalues.resize(static_cast<std::size_t>(opt.m));
    for (int i = 0; i < opt.m; ++i) {
      report.eigenvalues[static_cast<std::size_t>(i)] =
          d[static_cast<Eigen::Index>(order[static_cast<std::size_t>(i)])];
    }
    report.residuals.assign(static_cast<std::size_t>(opt.m), 0.0);
    if (vectors) {
      vectors->setZero(static_cast<Eigen::Index>(dim), opt.m);
      for (int i = 0; i < opt.m; ++i) {
        (*vectors)(static_cast<Eigen::Index>(order[static_cast<std::size_t>(i)]), i) = 1.0;
      }
    }
  } else if (h.n <= opt.dense_cutoff) {
    const auto mat = detail::dense_matrix(h);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat);
    report.method = "dense";
    report.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + opt.m);
    report.residuals.assign(static_cast<std::size_t>(opt.m), 0.0);
    if (vectors) *vectors = es.eigenvectors().leftCols(opt.m);
  } else if (real) {
    MatvecEngine<double> engine(h);
    report = detail::chebfsi_lowest(engine, opt, vectors);
  } else {
    MatvecEngine<std::complex<double>> engine(h);
    report = detail::chebfsi_lowest(engine, opt, vectors);
  }

  report.clusters = cluster(report.eigenvalues, opt.cluster_tol);
  report.gap = report.clusters.size() > 1 ? report.clusters[1].mean - report.clusters[0].mean : 0.0;
  return report;
}

EffectiveComparison compare_effective(const RubyLattice& lat, const TwoColex& colex,
                                      const Couplings& c, const CompareEffectiveOptions& opt) {
  const std::size_t t_count = lat.triangles.size();
  if (t_count > 6) {
    throw std::invalid_argument("compare_effective: torus with more than 6 triangles");
  }
  EffectiveComparison cmp;
  Couplings used = c;
  if (opt.ground_sector) used.jz = -std::abs(c.jz);
  cmp.couplings_used = used;

  const int low_count = 1 << t_count;
  const auto h2 = build_two_body(lat, used);
  EigsOptions eopt;
  eopt.m = low_count + 4;  // a few extras expose the sector gap
  eopt.tol = opt.tol;
  eopt.seed = opt.seed;
  eopt.cluster_tol = opt.cluster_tol;
  const auto low = lowest_eigs(h2, eopt);
  cmp.two_body_low.assign(low.eigenvalues.begin(), low.eigenvalues.begin() + low_count);
  cmp.next_above = low.eigenvalues[static_cast<std::size_t>(low_count)];
  cmp.low_spread = cmp.two_body_low.back() - cmp.two_body_low.front();
  cmp.sector_gap = cmp.next_above - cmp.two_body_low.back();

  const auto heff = build_effective(colex, c, opt.reading);
  for (const auto& [e, mult] : stabilizer_spectrum(heff)) {
    for (std::uint64_t i = 0; i < mult; ++i) cmp.effective_full.push_back(e);
  }
  std::sort(cmp.effective_full.begin(), cmp.effective_full.end());
  cmp.effective_spread = cmp.effective_full.back() - cmp.effective_full.front();

  // cluster both spectra relative to their own spreads
  cmp.low_clusters = cluster(cmp.two_body_low, opt.cluster_tol);
  cmp.effective_clusters = cluster(cmp.effective_full, opt.cluster_tol);
  cmp.multiplicity_match = cmp.low_clusters.size() == cmp.effective_clusters.size();
  if (cmp.multiplicity_match) {
    for (std::size_t i = 0; i < cmp.low_clusters.size(); ++i) {
      if (cmp.low_clusters[i].multiplicity != cmp.effective_clusters[i].multiplicity) {
        cmp.multiplicity_match = false;
        break;
      }
    }
  }

  // least-squares alignment after mean subtraction
  const double mean_a =
      std::accumulate(cmp.two_body_low.begin(), cmp.two_body_low.end(), 0.0) / low_count;
  const double mean_b =
      std::accumulate(cmp.effective_full.begin(), cmp.effective_full.end(), 0.0) / low_count;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < low_count; ++i) {
    const double a = cmp.two_body_low[static_cast<std::size_t>(i)] - mean_a;
    const double b = cmp.effective_full[static_cast<std::size_t>(i)] - mean_b;
    num += a * b;
    den += b * b;
  }
  cmp.alpha = den > 0.0 ? num / den : 0.0;
  double dev = 0.0;
  for (int i = 0; i < low_count; ++i) {
    const double a = cmp.two_body_low[static_cast<std::size_t>(i)] - mean_a;
    const double b = cmp.effective_full[static_cast<std::size_t>(i)] - mean_b;
    dev = std::max(dev, std::abs(a - cmp.alpha * b));
  }
  cmp.pattern_deviation = dev;
  cmp.effective_spread_scaled = std::abs(cmp.alpha) * cmp.effective_spread;
  return cmp;
}

}  // namespace rubylat
