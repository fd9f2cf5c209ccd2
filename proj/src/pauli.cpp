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

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rubylat {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::size_t popcount_and(const std::vector<std::uint64_t>& a,
                         const std::vector<std::uint64_t>& b) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n)
    : n_(n), x_(word_count(n), 0), z_(word_count(n), 0), phase_(0) {}

PauliOperator::PauliOperator(std::size_t n, std::vector<std::uint64_t> xbits,
                             std::vector<std::uint64_t> zbits, unsigned phase_exp)
    : n_(n), x_(std::move(xbits)), z_(std::move(zbits)),
      phase_(static_cast<std::uint8_t>(phase_exp & 3)) {
  if (x_.size() != word_count(n) || z_.size() != word_count(n)) {
    throw std::invalid_argument("PauliOperator: bit vector size mismatch");
  }
  if (n & 63) {
    const std::uint64_t tail = (std::uint64_t{1} << (n & 63)) - 1;
    if (!x_.empty() && ((x_.back() & ~tail) || (z_.back() & ~tail))) {
      throw std::invalid_argument("PauliOperator: bits set beyond qubit count");
    }
  }
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t site, PauliKind kind) {
  if (site >= n) throw std::invalid_argument("PauliOperator::single: site out of range");
  PauliOperator p(n);
  switch (kind) {
    case PauliKind::x: p.set_x(site); break;
    case PauliKind::z: p.set_z(site); break;
    case PauliKind::y:
      p.set_x(site);
      p.set_z(site);
      p.phase_ = 1;  // Y = i X Z
      break;
  }
  return p;
}

bool PauliOperator::is_identity_bits() const {
  for (std::size_t w = 0; w < x_.size(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::size_t PauliOperator::weight() const {
  std::size_t c = 0;
  for (std::size_t w = 0; w < x_.size(); ++w) c += std::popcount(x_[w] | z_[w]);
  return c;
}

std::vector<std::size_t> PauliOperator::support() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < n_; ++s) {
    if (x_bit(s) || z_bit(s)) out.push_back(s);
  }
  return out;
}

std::size_t PauliOperator::y_count() const { return popcount_and(x_, z_); }

bool PauliOperator::is_hermitian() const {
  return ((phase_ + y_count()) & 1) == 0;
}

PauliOperator PauliOperator::hermitian_canonical() const {
  if (!is_hermitian()) {
    throw std::invalid_argument("hermitian_canonical: operator is not Hermitian");
  }
  PauliOperator p = *this;
  p.phase_ = static_cast<std::uint8_t>(y_count() & 3);
  return p;
}

int PauliOperator::canonical_sign() const {
  const unsigned d = (phase_ - (y_count() & 3)) & 3;
  if (d == 0) return +1;
  if (d == 2) return -1;
  throw std::invalid_argument("canonical_sign: operator is not Hermitian");
}

PauliOperator::BasisImage PauliOperator::apply_to_basis(std::uint64_t basis_index) const {
  if (n_ > 64) throw std::invalid_argument("apply_to_basis: n > 64");
  if (n_ < 64 && (basis_index >> n_) != 0) {
    throw std::invalid_argument("apply_to_basis: basis index out of range");
  }
  const std::uint64_t x = x_.empty() ? 0 : x_[0];
  const std::uint64_t z = z_.empty() ? 0 : z_[0];
  const unsigned k = (phase_ + 2 * (std::popcount(z & basis_index) & 1)) & 3;
  return BasisImage{basis_index ^ x, k};
}

std::complex<double> PauliOperator::quarter_to_scalar(unsigned k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::string PauliOperator::to_text() const {
  static const char* prefix[4] = {"", "+i", "-", "-i"};
  std::ostringstream out;
  out << prefix[(phase_ - (y_count() & 3)) & 3];
  bool any = false;
  for (std::size_t s = 0; s < n_; ++s) {
    const bool xb = x_bit(s), zb = z_bit(s);
    if (!xb && !zb) continue;
    if (any) out << ' ';
    out << (xb && zb ? 'Y' : xb ? 'X' : 'Z') << s;
    any = true;
  }
  if (!any) out << 'I';
  return out.str();
}

PauliOperator PauliOperator::parse(std::string_view text, std::size_t n) {
  PauliOperator acc(n);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  // optional prefix: +, -, +i, -i, i; also U+2212 minus (0xE2 0x88 0x92)
  unsigned phase = 0;
  if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
      static_cast<unsigned char>(text[i + 1]) == 0x88 &&
      static_cast<unsigned char>(text[i + 2]) == 0x92) {
    phase = 2;
    i += 3;
  } else if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') phase = 2;
    ++i;
  }
  if (i < text.size() && text[i] == 'i' &&
      (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
    phase = (phase + 1) & 3;
    ++i;
  }
  acc = PauliOperator(n);
  acc.phase_ = static_cast<std::uint8_t>(phase);
  skip_ws();
  while (i < text.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c != 'X' && c != 'Y' && c != 'Z' && c != 'I') {
      throw std::invalid_argument("PauliOperator::parse: bad letter at '" +
                                  std::string(text.substr(i)) + "'");
    }
    ++i;
    if (c == 'I' && (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))) {
      skip_ws();
      continue;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("PauliOperator::parse: missing site index");
    }
    std::size_t site = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      site = site * 10 + static_cast<std::size_t>(text[i] - '0');
      ++i;
    }
    if (site >= n) throw std::invalid_argument("PauliOperator::parse: site out of range");
    if (c != 'I') {
      const PauliKind k = c == 'X' ? PauliKind::x : c == 'Y' ? PauliKind::y : PauliKind::z;
      acc = multiply(acc, single(n, site, k));
    }
    skip_ws();
  }
  return acc;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("multiply: qubit count mismatch");
  }
  PauliOperator r(p.num_qubits());
  std::size_t cross = 0;
  for (std::size_t w = 0; w < r.x_.size(); ++w) {
    r.x_[w] = p.x_[w] ^ q.x_[w];
    r.z_[w] = p.z_[w] ^ q.z_[w];
    cross += std::popcount(p.z_[w] & q.x_[w]);
  }
  r.phase_ = static_cast<std::uint8_t>((p.phase_ + q.phase_ + 2 * (cross & 1)) & 3);
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("commutes: qubit count mismatch");
  }
  std::size_t c = 0;
  for (std::size_t w = 0; w < p.xbits().size(); ++w) {
    c += std::popcount(p.xbits()[w] & q.zbits()[w]);
    c += std::popcount(p.zbits()[w] & q.xbits()[w]);
  }
  return (c & 1) == 0;
}

}  // namespace rubylat
