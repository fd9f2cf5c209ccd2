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

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace rubylat;

TEST_CASE("two-body terms follow the edge coloring") {
  const auto lat = build_ruby(1, 1);
  const auto h = build_two_body(lat, {1.0, 1.0, 1.0});
  CHECK(h.n == 18);
  CHECK(h.terms.size() == 36);
  for (std::size_t i = 0; i < h.terms.size(); ++i) {
    const auto& t = h.terms[i];
    CHECK(t.coefficient == 1.0);
    CHECK(t.op.is_hermitian());
    CHECK(t.op.weight() == 2);
    const auto& e = lat.edges[i];
    // letter kind matches the edge color on both endpoints
    for (int s : {e.a, e.b}) {
      const auto su = static_cast<std::size_t>(s);
      switch (e.color) {
        case EdgeColor::red:
          CHECK(t.op.x_bit(su));
          CHECK_FALSE(t.op.z_bit(su));
          break;
        case EdgeColor::green:
          CHECK(t.op.x_bit(su));
          CHECK(t.op.z_bit(su));
          break;
        case EdgeColor::blue:
          CHECK_FALSE(t.op.x_bit(su));
          CHECK(t.op.z_bit(su));
          break;
      }
    }
  }
}

TEST_CASE("two-body zero couplings are retained and flagged") {
  const auto lat = build_ruby(1, 1);
  const auto h = build_two_body(lat, {0.0, 0.7, 0.3});
  CHECK(h.terms.size() == 36);
  int zeros = 0;
  for (const auto& t : h.terms) zeros += t.is_zero() ? 1 : 0;
  CHECK(zeros == 9);  // the red edges
  CHECK_THROWS_AS(build_two_body(lat, {std::nan(""), 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("toric plaquette operators") {
  const auto h = build_toric(build_square(2));
  CHECK(h.n == 4);
  CHECK(h.terms.size() == 4);
  for (const auto& t : h.terms) {
    CHECK(t.coefficient == -1.0);
    CHECK(t.op.weight() == 4);
    CHECK(t.op.is_hermitian());
    const auto sq = multiply(t.op, t.op);
    CHECK(sq.is_identity_bits());
    CHECK(sq.phase_exp() == 0);
  }
  for (const auto& a : h.terms) {
    for (const auto& b : h.terms) CHECK(commutes(a.op, b.op));
  }

  const auto h4 = build_toric(build_square(4));
  CHECK(h4.terms.size() == 16);
  for (const auto& a : h4.terms) {
    for (const auto& b : h4.terms) CHECK(commutes(a.op, b.op));
  }
}

TEST_CASE("color code stabilizers") {
  const auto colex = contract_triangles(build_ruby(1, 1));
  const auto h = build_color_code(colex);
  CHECK(h.n == 6);
  CHECK(h.terms.size() == 6);  // two per plaquette
  for (const auto& t : h.terms) {
    CHECK(t.coefficient == -1.0);
    CHECK(t.op.is_hermitian());
  }
  for (const auto& a : h.terms) {
    for (const auto& b : h.terms) CHECK(commutes(a.op, b.op));
  }
  // a By over six vertices is six Y letters
  CHECK(h.terms[1].op.y_count() == 6);
}

TEST_CASE("effective coefficients") {
  // jx = jy = t gives kz = (3/8) t^6
  const auto k1 = effective_coefficients({0.05, 0.05, 0.25});
  CHECK(k1.kz == doctest::Approx(5.859375e-9).epsilon(1e-14));
  CHECK(k1.kx == k1.ky);  // symmetric reading restores x<->y symmetry

  const auto k0 = effective_coefficients({0.0, 0.3, 0.25});
  CHECK(k0.kz == 0.0);
  CHECK(k0.kx == 0.0);

  const auto t2 = effective_coefficients({0.2, 0.2, 0.25});
  CHECK(t2.kz == doctest::Approx((3.0 / 8.0) * std::pow(0.2, 6)).epsilon(1e-14));

  // literal reading uses |jz|^3 inside ky
  const auto kl = effective_coefficients({0.05, 0.05, 0.25}, EffectiveReading::literal);
  CHECK(kl.kx == k1.kx);
  CHECK(kl.ky == doctest::Approx((55489.0 / 13824.0) * std::pow(0.05 * 0.05, 3) *
                                 std::pow(0.25, 3)));
}

TEST_CASE("effective model terms") {
  const auto colex = contract_triangles(build_ruby(1, 1));
  const Couplings c{0.05, 0.05, 0.25};
  const auto h = build_effective(colex, c);
  CHECK(h.terms.size() == 9);  // three per face
  const auto k = effective_coefficients(c);
  for (std::size_t f = 0; f < 3; ++f) {
    const auto& bx = h.terms[3 * f];
    const auto& by = h.terms[3 * f + 1];
    const auto& bxy = h.terms[3 * f + 2];
    CHECK(bx.coefficient == -k.kx);
    CHECK(by.coefficient == -k.ky);
    // Bx By = (i)^6 Z^6 = -Z^6, so the z-string term enters with +kz
    CHECK(bxy.coefficient == k.kz);
    CHECK(bxy.op.y_count() == 0);
    CHECK(bxy.op.weight() == 6);
    CHECK(multiply(bx.op, by.op).canonical_sign() == -1);
    CHECK(bx.op.is_hermitian());
    CHECK(by.op.is_hermitian());
    CHECK(bxy.op.is_hermitian());
  }
  // pairwise commuting
  for (const auto& a : h.terms) {
    for (const auto& b : h.terms) CHECK(commutes(a.op, b.op));
  }
}

TEST_CASE("term exports") {
  const auto h = build_toric(build_square(2));
  const auto jsonl = terms_to_jsonl(h);
  CHECK(std::count(jsonl.begin(), jsonl.end(), '\n') == 4);
  CHECK(jsonl.find("\"coefficient\": -1") != std::string::npos);

  const auto coo = terms_to_coo(h);
  // every line is "row col real imag"
  std::istringstream in(coo);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    long r, c;
    double re, im;
    CHECK((ls >> r >> c >> re >> im));
    CHECK(r >= 0);
    CHECK(r < 16);
    CHECK(c >= 0);
    CHECK(c < 16);
    CHECK(im == 0.0);  // the toric code is real in the computational basis
    ++lines;
  }
  CHECK(lines > 0);
}
