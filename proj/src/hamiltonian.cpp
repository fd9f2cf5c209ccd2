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

#include "rubylat/hamiltonian.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rubylat {

namespace {

void require_finite(const Couplings& c) {
  if (!std::isfinite(c.jx) || !std::isfinite(c.jy) || !std::isfinite(c.jz)) {
    throw std::invalid_argument("couplings must be finite");
  }
}

PauliOperator face_product(std::size_t n, const std::vector<int>& vertices, PauliKind kind) {
  PauliOperator op(n);
  for (int v : vertices) {
    op = multiply(op, PauliOperator::single(n, static_cast<std::size_t>(v), kind));
  }
  return op;
}

}  // namespace

HamiltonianTerms build_two_body(const RubyLattice& lat, const Couplings& c) {
  require_finite(c);
  HamiltonianTerms h;
  h.n = lat.num_sites();
  h.terms.reserve(lat.edges.size());
  for (const auto& e : lat.edges) {
    PauliKind kind;
    double coeff;
    switch (e.color) {
      case EdgeColor::red: kind = PauliKind::x; coeff = c.jx; break;
      case EdgeColor::green: kind = PauliKind::y; coeff = c.jy; break;
      default: kind = PauliKind::z; coeff = c.jz; break;
    }
    auto op = multiply(PauliOperator::single(h.n, static_cast<std::size_t>(e.a), kind),
                       PauliOperator::single(h.n, static_cast<std::size_t>(e.b), kind));
    h.terms.push_back({coeff, op.hermitian_canonical()});
  }
  return h;
}

HamiltonianTerms build_toric(const SquareLattice& lat) {
  auto diag = validate(lat);
  if (!diag.ok()) throw std::invalid_argument("build_toric: " + diag.violations.front());
  HamiltonianTerms h;
  h.n = lat.num_sites();
  for (const auto& p : lat.plaquettes) {
    PauliOperator op(h.n);
    op = multiply(op, PauliOperator::single(h.n, static_cast<std::size_t>(p.corners[0]), PauliKind::x));
    op = multiply(op, PauliOperator::single(h.n, static_cast<std::size_t>(p.corners[1]), PauliKind::x));
    op = multiply(op, PauliOperator::single(h.n, static_cast<std::size_t>(p.corners[2]), PauliKind::z));
    op = multiply(op, PauliOperator::single(h.n, static_cast<std::size_t>(p.corners[3]), PauliKind::z));
    h.terms.push_back({-1.0, op.hermitian_canonical()});
  }
  return h;
}

HamiltonianTerms build_color_code(const TwoColex& colex) {
  HamiltonianTerms h;
  h.n = static_cast<std::size_t>(colex.num_vertices);
  for (const auto& f : colex.faces) {
    if (f.vertices.size() % 2 != 0) {
      throw std::invalid_argument("build_color_code: face with odd vertex count");
    }
    h.terms.push_back({-1.0, face_product(h.n, f.vertices, PauliKind::x).hermitian_canonical()});
    h.terms.push_back({-1.0, face_product(h.n, f.vertices, PauliKind::y).hermitian_canonical()});
  }
  return h;
}

EffectiveCoefficients effective_coefficients(const Couplings& c, EffectiveReading reading) {
  require_finite(c);
  const double base = std::pow(std::abs(c.jx * c.jy), 3);
  const double ratio = 55489.0 / 13824.0;
  EffectiveCoefficients k{};
  k.reading = reading;
  k.kz = (3.0 / 8.0) * base;
  k.kx = ratio * base * std::pow(std::abs(c.jy), 3);
  k.ky = ratio * base *
         std::pow(std::abs(reading == EffectiveReading::symmetric ? c.jx : c.jz), 3);
  return k;
}

HamiltonianTerms build_effective(const TwoColex& colex, const Couplings& c,
                                 EffectiveReading reading) {
  const auto k = effective_coefficients(c, reading);
  HamiltonianTerms h;
  h.n = static_cast<std::size_t>(colex.num_vertices);
  for (const auto& f : colex.faces) {
    if (f.vertices.size() % 2 != 0) {
      throw std::invalid_argument("build_effective: face with odd vertex count");
    }
    const auto bx = face_product(h.n, f.vertices, PauliKind::x).hermitian_canonical();
    const auto by = face_product(h.n, f.vertices, PauliKind::y).hermitian_canonical();
    const auto bxy = multiply(bx, by);
    const int sign = bxy.canonical_sign();
    h.terms.push_back({-k.kx, bx});
    h.terms.push_back({-k.ky, by});
    h.terms.push_back({-k.kz * sign, bxy.hermitian_canonical()});
  }
  return h;
}

std::string terms_to_jsonl(const HamiltonianTerms& h) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& t : h.terms) {
    out << "{\"coefficient\": " << t.coefficient << ", \"pauli\": \"" << t.op.to_text()
        << "\"}\n";
  }
  return out.str();
}

std::string terms_to_coo(const HamiltonianTerms& h) {
  if (h.n > 14) throw std::invalid_argument("terms_to_coo: n too large for dense enumeration");
  const std::uint64_t dim = std::uint64_t{1} << h.n;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> entries;
  for (const auto& t : h.terms) {
    if (t.is_zero()) continue;
    for (std::uint64_t col = 0; col < dim; ++col) {
      const auto img = t.op.apply_to_basis(col);
      entries[{img.index, col}] += t.coefficient * PauliOperator::quarter_to_scalar(img.phase_quarter);
    }
  }
  std::ostringstream out;
  out.precision(17);
  for (const auto& [rc, v] : entries) {
    if (v == std::complex<double>{0.0, 0.0}) continue;
    out << rc.first << ' ' << rc.second << ' ' << v.real() << ' ' << v.imag() << '\n';
  }
  return out.str();
}

}  // namespace rubylat
