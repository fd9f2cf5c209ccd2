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

#include "rubylat/pauli.hpp"

#include <doctest.h>

#include <random>

using namespace rubylat;

namespace {

PauliOperator random_pauli(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint64_t> x((n + 63) / 64, 0), z((n + 63) / 64, 0);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (auto& w : x) w = bits(rng);
  for (auto& w : z) w = bits(rng);
  if (n & 63) {
    const std::uint64_t tail = (std::uint64_t{1} << (n & 63)) - 1;
    x.back() &= tail;
    z.back() &= tail;
  }
  return PauliOperator(n, x, z, static_cast<unsigned>(rng() & 3));
}

}  // namespace

TEST_CASE("single-site constructors") {
  const auto x = PauliOperator::single(1, 0, PauliKind::x);
  CHECK(x.xbits()[0] == 1);
  CHECK(x.zbits()[0] == 0);
  CHECK(x.phase_exp() == 0);

  const auto y = PauliOperator::single(1, 0, PauliKind::y);
  CHECK(y.xbits()[0] == 1);
  CHECK(y.zbits()[0] == 1);
  CHECK(y.phase_exp() == 1);  // Y = i X Z

  const auto z = PauliOperator::single(1, 0, PauliKind::z);
  CHECK(z.xbits()[0] == 0);
  CHECK(z.zbits()[0] == 1);
  CHECK(z.phase_exp() == 0);

  CHECK(x.is_hermitian());
  CHECK(y.is_hermitian());
  CHECK(z.is_hermitian());
  CHECK_THROWS_AS(PauliOperator::single(1, 1, PauliKind::x), std::invalid_argument);
}

TEST_CASE("multiplication phases") {
  const auto x = PauliOperator::single(1, 0, PauliKind::x);
  const auto y = PauliOperator::single(1, 0, PauliKind::y);
  const auto z = PauliOperator::single(1, 0, PauliKind::z);

  // X Z = -i Y
  const auto xz = multiply(x, z);
  CHECK(xz == PauliOperator::parse("-iY0", 1));
  CHECK(xz.phase_exp() == 0);  // stored as the bare normal-ordered product

  // Z X = +i Y
  CHECK(multiply(z, x) == PauliOperator::parse("iY0", 1));
  // X Y = i Z, Y X = -i Z
  CHECK(multiply(x, y) == PauliOperator::parse("iZ0", 1));
  CHECK(multiply(y, x) == PauliOperator::parse("-iZ0", 1));

  // involution
  const auto xx = multiply(x, x);
  CHECK(xx.is_identity_bits());
  CHECK(xx.phase_exp() == 0);

  CHECK_THROWS_AS(multiply(x, PauliOperator(2)), std::invalid_argument);
}

TEST_CASE("commutation") {
  const auto xx = PauliOperator::parse("X0 X1", 2);
  const auto zz = PauliOperator::parse("Z0 Z1", 2);
  CHECK(commutes(xx, zz));  // two anticommuting sites

  const auto xi = PauliOperator::parse("X0", 2);
  const auto zi = PauliOperator::parse("Z0", 2);
  CHECK_FALSE(commutes(xi, zi));
}

TEST_CASE("basis action") {
  const auto x = PauliOperator::single(1, 0, PauliKind::x);
  auto img = x.apply_to_basis(0);
  CHECK(img.index == 1);
  CHECK(img.phase_quarter == 0);  // +1

  const auto z = PauliOperator::single(1, 0, PauliKind::z);
  img = z.apply_to_basis(1);
  CHECK(img.index == 1);
  CHECK(img.phase_quarter == 2);  // -1

  const auto y = PauliOperator::single(1, 0, PauliKind::y);
  img = y.apply_to_basis(0);
  CHECK(img.index == 1);
  CHECK(img.phase_quarter == 1);  // +i
  img = y.apply_to_basis(1);
  CHECK(img.index == 0);
  CHECK(img.phase_quarter == 3);  // -i

  CHECK_THROWS_AS(x.apply_to_basis(2), std::invalid_argument);
}

TEST_CASE("text round-trip") {
  auto p = PauliOperator::parse("X0 Z1", 2);
  CHECK(p.xbits()[0] == 0b01);
  CHECK(p.zbits()[0] == 0b10);
  CHECK(p.phase_exp() == 0);

  CHECK(PauliOperator::single(2, 0, PauliKind::y).to_text() == "Y0");
  CHECK(PauliOperator(3).to_text() == "I");

  // duplicate sites resolve by multiplication: -i X0 Z0 = -i(-i Y0) = -Y0
  const auto q = PauliOperator::parse("-iX0 Z0", 1);
  CHECK(q == multiply(PauliOperator::parse("-i", 1),
                      multiply(PauliOperator::single(1, 0, PauliKind::x),
                               PauliOperator::single(1, 0, PauliKind::z))));
  CHECK(q.to_text() == "-Y0");

  // unicode minus accepted
  CHECK(PauliOperator::parse("−iX0 Z0", 1) == q);

  CHECK_THROWS_AS(PauliOperator::parse("Q0", 1), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::parse("X9", 2), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::parse("X", 2), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const auto r = random_pauli(9, rng);
    CHECK(PauliOperator::parse(r.to_text(), 9) == r);
  }
}

TEST_CASE("hermitian representatives") {
  const auto y = PauliOperator::single(4, 2, PauliKind::y);
  CHECK(y.hermitian_canonical() == y);
  CHECK(y.canonical_sign() == 1);

  const auto minus_y = PauliOperator::parse("-Y2", 4);
  CHECK(minus_y.canonical_sign() == -1);
  CHECK(minus_y.hermitian_canonical() == y);

  CHECK_THROWS_AS(PauliOperator::parse("iX0", 2).hermitian_canonical(), std::invalid_argument);
}

TEST_CASE("group properties on random triples") {
  std::mt19937_64 rng(2024);
  const std::size_t n = 7;
  for (int it = 0; it < 1000; ++it) {
    const auto p = random_pauli(n, rng);
    const auto q = random_pauli(n, rng);
    const auto r = random_pauli(n, rng);

    // associativity, bit- and phase-exact
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));

    // commutation test agrees with full products
    CHECK(commutes(p, q) == (multiply(p, q) == multiply(q, p)));

    // squares are +-identity; Hermitian squares are +identity
    const auto p2 = multiply(p, p);
    CHECK(p2.is_identity_bits());
    CHECK((p2.phase_exp() == 0 || p2.phase_exp() == 2));
    const auto hp = p.is_hermitian() ? p : PauliOperator(n, p.xbits(), p.zbits(),
                                                         p.phase_exp() + 1);
    CHECK(multiply(hp, hp).phase_exp() == 0);
  }
}

TEST_CASE("hermitian closure under commuting products") {
  std::mt19937_64 rng(99);
  const std::size_t n = 6;
  int seen = 0;
  while (seen < 300) {
    auto p = random_pauli(n, rng);
    auto q = random_pauli(n, rng);
    if (!p.is_hermitian()) p = PauliOperator(n, p.xbits(), p.zbits(), p.phase_exp() + 1);
    if (!q.is_hermitian()) q = PauliOperator(n, q.xbits(), q.zbits(), q.phase_exp() + 1);
    if (!commutes(p, q)) continue;
    CHECK(multiply(p, q).is_hermitian());
    ++seen;
  }
}

TEST_CASE("apply composes like multiplication") {
  std::mt19937_64 rng(5);
  const std::size_t n = 8;
  std::uniform_int_distribution<std::uint64_t> basis(0, (std::uint64_t{1} << n) - 1);
  for (int it = 0; it < 1000; ++it) {
    const auto p = random_pauli(n, rng);
    const auto q = random_pauli(n, rng);
    const std::uint64_t b = basis(rng);
    // apply P then Q == apply multiply(Q, P)
    const auto i1 = p.apply_to_basis(b);
    const auto i2 = q.apply_to_basis(i1.index);
    const auto ic = multiply(q, p).apply_to_basis(b);
    CHECK(i2.index == ic.index);
    CHECK(((i1.phase_quarter + i2.phase_quarter) & 3) == ic.phase_quarter);
  }
}
