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

#include <cstdint>
#include <optional>
#include <vector>

namespace rubylat {

/// Dense GF(2) row vector packed into 64-bit words.
class Gf2Vec {
 public:
  Gf2Vec() = default;
  explicit Gf2Vec(std::size_t ncols) : n_(ncols), w_((ncols + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void operator^=(const Gf2Vec& o);
  bool any() const;
  /// Index of the lowest set bit; size() when empty.
  std::size_t lowest_set() const;
  /// Parity of the AND with another vector (GF(2) dot product).
  bool dot(const Gf2Vec& o) const;
  std::size_t popcount() const;
  bool operator==(const Gf2Vec& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Rank of the span of the given rows.
std::size_t gf2_rank(const std::vector<Gf2Vec>& rows);

/**
 * Basis of { v : rows[i] . v = 0 for all i }, i.e. the nullspace of the
 * constraint matrix. Deterministic: Gaussian elimination with lowest-set-bit
 * pivoting, one basis vector per free column in ascending order.
 */
std::vector<Gf2Vec> gf2_nullspace(const std::vector<Gf2Vec>& rows, std::size_t ncols);

/**
 * Solve rows[i] . v = rhs[i]. Returns a particular solution (free columns
 * zero) plus a basis of the homogeneous nullspace, or nullopt when
 * inconsistent.
 */
struct Gf2AffineSolution {
  Gf2Vec particular;
  std::vector<Gf2Vec> homogeneous;
};
std::optional<Gf2AffineSolution> gf2_solve(const std::vector<Gf2Vec>& rows,
                                           const std::vector<bool>& rhs,
                                           std::size_t ncols);

/**
 * Express target as a XOR combination of the given basis rows. Returns the
 * indices used, or nullopt when target is outside the span.
 */
std::optional<std::vector<std::size_t>> gf2_express(const Gf2Vec& target,
                                                    const std::vector<Gf2Vec>& basis);

}  // namespace rubylat
