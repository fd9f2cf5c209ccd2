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

#include <doctest.h>

#include <random>

#include "dense_oracle.hpp"
#include "rubylat/iom.hpp"

using namespace rubylat;

namespace {

HamiltonianTerms triangle_zz(double jz) {
  HamiltonianTerms h;
  h.n = 3;
  for (const auto [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
    const auto op = multiply(PauliOperator::single(3, a, PauliKind::z),
                             PauliOperator::single(3, b, PauliKind::z));
    h.terms.push_back({jz, op.hermitian_canonical()});
  }
  return h;
}

Vector<std::complex<double>> random_state(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Vector<std::complex<double>> v(static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = {g(rng), g(rng)};
  v.normalize();
  return v;
}

// multiset convolution of per-triangle levels {-jz x6, +3jz x2}
std::vector<double> tensor_triangle_spectrum(int triangles, double jz) {
  std::vector<double> spec = {0.0};
  for (int t = 0; t < triangles; ++t) {
    std::vector<double> next;
    next.reserve(spec.size() * 8);
    for (double e : spec) {
      for (int i = 0; i < 6; ++i) next.push_back(e - jz);
      for (int i = 0; i < 2; ++i) next.push_back(e + 3 * jz);
    }
    spec.swap(next);
  }
  std::sort(spec.begin(), spec.end());
  return spec;
}

}  // namespace

TEST_CASE("matvec basics") {
  HamiltonianTerms h;
  h.n = 1;
  h.terms.push_back({1.0, PauliOperator::single(1, 0, PauliKind::z)});
  Vector<double> v(2);
  v << 1, 0;
  const auto out = matvec(h, v);
  CHECK(out[0] == 1.0);
  CHECK(out[1] == 0.0);

  const auto tri = triangle_zz(1.0);
  Vector<double> e0 = Vector<double>::Zero(8);
  e0[0] = 1.0;  // |000>
  const auto te = matvec(tri, e0);
  CHECK(te[0] == doctest::Approx(3.0));
  for (int i = 1; i < 8; ++i) CHECK(te[i] == 0.0);
}

TEST_CASE("matvec is linear and Hermitian and matches the dense oracle") {
  const auto lat = build_ruby(1, 1);
  auto h = build_two_body(lat, {0.3, -0.7, 1.1});
  h.n = 18;
  MatvecEngine<double> engine(h);

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  const auto dim = static_cast<Eigen::Index>(engine.dimension());
  Vector<double> u(dim), v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    u[i] = g(rng);
    v[i] = g(rng);
  }
  Vector<double> hu, hv, hsum;
  engine.apply(u, hu);
  engine.apply(v, hv);
  Vector<double> sum = u + v;
  engine.apply(sum, hsum);
  CHECK((hsum - hu - hv).norm() <= 1e-12 * hsum.norm());
  // symmetric: <u, Hv> == <v, Hu>
  CHECK(u.dot(hv) == doctest::Approx(v.dot(hu)).epsilon(1e-12));

  // small-system agreement with the independent Kronecker oracle
  const auto tri = triangle_zz(0.8);
  const auto dense = oracle::dense_hamiltonian(tri);
  for (int col = 0; col < 8; ++col) {
    Vector<std::complex<double>> e = Vector<std::complex<double>>::Zero(8);
    e[col] = 1.0;
    const auto out = matvec(tri, e);
    for (int row = 0; row < 8; ++row) {
      CHECK(std::abs(out[row] - dense(row, col)) <= 1e-14);
    }
  }
}

TEST_CASE("complex matvec path") {
  HamiltonianTerms h;
  h.n = 2;
  h.terms.push_back({0.5, PauliOperator::single(2, 0, PauliKind::y)});
  h.terms.push_back({1.0, PauliOperator::parse("X0 Z1", 2)});
  CHECK_FALSE(is_real_representable(h));
  const auto dense = oracle::dense_hamiltonian(h);
  for (int col = 0; col < 4; ++col) {
    Vector<std::complex<double>> e = Vector<std::complex<double>>::Zero(4);
    e[col] = 1.0;
    const auto out = matvec(h, e);
    for (int row = 0; row < 4; ++row) CHECK(std::abs(out[row] - dense(row, col)) <= 1e-14);
  }
  // all four model Hamiltonians are real in the computational basis
  CHECK(is_real_representable(build_two_body(build_ruby(1, 1), {1, 1, 1})));
  CHECK(is_real_representable(build_toric(build_square(2))));
  const auto colex = contract_triangles(build_ruby(1, 1));
  CHECK(is_real_representable(build_color_code(colex)));
  CHECK(is_real_representable(build_effective(colex, {0.05, 0.05, 0.25})));
}

TEST_CASE("clustering") {
  const auto c1 = cluster({-1.0 - 1e-12, -1.0 + 1e-12, 3.0}, 1e-9);
  REQUIRE(c1.size() == 2);
  CHECK(c1[0].mean == doctest::Approx(-1.0));
  CHECK(c1[0].multiplicity == 2);
  CHECK(c1[1].multiplicity == 1);

  const auto c2 = cluster({2.5, 2.5, 2.5}, 1e-9);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].multiplicity == 3);

  CHECK(cluster({}, 1e-9).empty());
}

TEST_CASE("triangle spectrum and dense path") {
  EigsOptions opt;
  opt.m = 8;
  const auto rep = lowest_eigs(triangle_zz(1.0), opt);
  CHECK(rep.method == "diagonal");  // zz terms only
  REQUIRE(rep.eigenvalues.size() == 8);
  for (int i = 0; i < 6; ++i) CHECK(rep.eigenvalues[static_cast<std::size_t>(i)] ==
                                    doctest::Approx(-1.0));
  CHECK(rep.eigenvalues[6] == doctest::Approx(3.0));
  CHECK(rep.eigenvalues[7] == doctest::Approx(3.0));

  // toric L=2 through the dense path: ground -4, fourfold
  EigsOptions topt;
  topt.m = 8;
  const auto trep = lowest_eigs(build_toric(build_square(2)), topt);
  CHECK(trep.method == "dense");
  CHECK(trep.eigenvalues[0] == doctest::Approx(-4.0));
  CHECK(trep.clusters.front().multiplicity == 4);
  CHECK(trep.gap == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("decoupled triangles match the analytic tensor spectrum") {
  const auto lat = build_ruby(1, 1);
  const auto h = build_two_body(lat, {0.0, 0.0, 1.0});
  const auto spec = diagonal_spectrum(h);
  const auto expected = tensor_triangle_spectrum(6, 1.0);
  REQUIRE(spec.size() == expected.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    CHECK(spec[i] == doctest::Approx(expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("chebfsi matches the exact stabilizer spectrum on toric L=4") {
  const auto h = build_toric(build_square(4));
  EigsOptions opt;
  opt.m = 8;
  opt.tol = 1e-11;
  opt.seed = 42;
  opt.dense_cutoff = 8;  // force the iterative path at n=16
  const auto rep = lowest_eigs(h, opt);
  CHECK(rep.method == "chebfsi");
  std::vector<double> exact;
  for (const auto& [e, m] : stabilizer_spectrum(h)) {
    for (std::uint64_t i = 0; i < m && exact.size() < 8; ++i) exact.push_back(e);
  }
  REQUIRE(rep.eigenvalues.size() == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(rep.eigenvalues[static_cast<std::size_t>(i)] ==
          doctest::Approx(exact[static_cast<std::size_t>(i)]).epsilon(1e-9));
  }
  for (double r : rep.residuals) CHECK(r <= opt.tol * 16.001);

  // reproducible with the same seed
  const auto rep2 = lowest_eigs(h, opt);
  for (int i = 0; i < 8; ++i) {
    CHECK(rep.eigenvalues[static_cast<std::size_t>(i)] ==
          rep2.eigenvalues[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("expectation values") {
  const std::size_t n = 4;
  Vector<std::complex<double>> ground = Vector<std::complex<double>>::Zero(16);
  ground[0] = 1.0;  // |0000>
  CHECK(expectation(PauliOperator::single(n, 0, PauliKind::z), ground).real() ==
        doctest::Approx(1.0));
  CHECK(expectation(PauliOperator(n), ground).real() == doctest::Approx(1.0));

  const auto v = random_state(16, 9);
  const auto idv = expectation(PauliOperator(n), v);
  CHECK(idv.real() == doctest::Approx(1.0));
  const auto herm = expectation(PauliOperator::parse("X0 Y1 Z2", n), v);
  CHECK(std::abs(herm.imag()) <= 1e-10);
}

TEST_CASE("IOMs commute with the Hamiltonian action on random states") {
  const auto lat = build_ruby(1, 1);
  const auto h = build_two_body(lat, {0.9, 0.4, 1.3});
  MatvecEngine<std::complex<double>> hop(h);
  const auto triple = plaquette_ioms(lat, h, 1);
  for (const auto* iom : {&triple.a, &triple.b, &triple.c}) {
    HamiltonianTerms wrap;
    wrap.n = h.n;
    wrap.terms.push_back({1.0, iom->op});
    MatvecEngine<std::complex<double>> iop(wrap);
    const auto v = random_state(hop.dimension(), 17);
    Vector<std::complex<double>> hv, ihv, iv, hiv;
    hop.apply(v, hv);
    iop.apply(hv, ihv);
    iop.apply(v, iv);
    hop.apply(iv, hiv);
    CHECK((ihv - hiv).norm() <= 1e-10);
  }
}

TEST_CASE("eigenvectors carry definite IOM eigenvalues") {
  // on the toric code the plaquette terms are themselves IOMs; check the
  // dense ground states give expectation +-1 for one plaquette
  const auto h = build_toric(build_square(2));
  const auto dense = oracle::dense_hamiltonian(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
  Vector<std::complex<double>> gs = es.eigenvectors().col(0);
  const auto val = expectation(h.terms[0].op, gs);
  CHECK(std::abs(std::abs(val.real()) - 1.0) <= 1e-6);
  CHECK(std::abs(val.imag()) <= 1e-10);
}

TEST_CASE("preconditions") {
  HamiltonianTerms h;
  h.n = 30;  // above the cap
  CHECK_THROWS_AS(lowest_eigs(h, EigsOptions{}), std::invalid_argument);
  HamiltonianTerms small;
  small.n = 2;
  small.terms.push_back({1.0, PauliOperator::single(2, 0, PauliKind::z)});
  EigsOptions opt;
  opt.m = 5;  // > 2^2
  CHECK_THROWS_AS(lowest_eigs(small, opt), std::invalid_argument);
}
