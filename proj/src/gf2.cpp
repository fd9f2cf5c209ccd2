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

#include "rubylat/gf2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace rubylat {

void Gf2Vec::operator^=(const Gf2Vec& o) {
  if (o.n_ != n_) throw std::invalid_argument("Gf2Vec: size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool Gf2Vec::any() const {
  for (auto w : w_) {
    if (w) return true;
  }
  return false;
}

std::size_t Gf2Vec::lowest_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (w_[i]) return 64 * i + static_cast<std::size_t>(std::countr_zero(w_[i]));
  }
  return n_;
}

bool Gf2Vec::dot(const Gf2Vec& o) const {
  if (o.n_ != n_) throw std::invalid_argument("Gf2Vec: size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) acc ^= (w_[i] & o.w_[i]);
  return std::popcount(acc) & 1;
}

std::size_t Gf2Vec::popcount() const {
  std::size_t c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

namespace {

// pivot-column -> reduced row, built incrementally
using PivotMap = std::map<std::size_t, Gf2Vec>;

Gf2Vec reduce(Gf2Vec r, const PivotMap& piv) {
  for (const auto& [c, row] : piv) {
    if (r.get(c)) r ^= row;
  }
  return r;
}

}  // namespace

std::size_t gf2_rank(const std::vector<Gf2Vec>& rows) {
  PivotMap piv;
  for (const auto& r0 : rows) {
    Gf2Vec r = reduce(r0, piv);
    if (r.any()) piv.emplace(r.lowest_set(), std::move(r));
  }
  return piv.size();
}

std::vector<Gf2Vec> gf2_nullspace(const std::vector<Gf2Vec>& rows, std::size_t ncols) {
  PivotMap piv;
  for (const auto& r0 : rows) {
    if (r0.size() != ncols) throw std::invalid_argument("gf2_nullspace: row size mismatch");
    Gf2Vec r = reduce(r0, piv);
    if (r.any()) piv.emplace(r.lowest_set(), std::move(r));
  }
  std::vector<Gf2Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (piv.count(free)) continue;
    Gf2Vec v(ncols);
    v.set(free, true);
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      if (it->second.dot(v)) v.flip(it->first);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Gf2AffineSolution> gf2_solve(const std::vector<Gf2Vec>& rows,
                                           const std::vector<bool>& rhs,
                                           std::size_t ncols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("gf2_solve: rhs size mismatch");
  PivotMap piv;
  std::map<std::size_t, bool> pivrhs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Gf2Vec r = rows[i];
    bool b = rhs[i];
    for (const auto& [c, row] : piv) {
      if (r.get(c)) {
        r ^= row;
        b = b != pivrhs.at(c);
      }
    }
    if (r.any()) {
      const std::size_t c = r.lowest_set();
      piv.emplace(c, std::move(r));
      pivrhs.emplace(c, b);
    } else if (b) {
      return std::nullopt;
    }
  }
  Gf2AffineSolution sol;
  sol.particular = Gf2Vec(ncols);
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    const bool val = pivrhs.at(it->first) != it->second.dot(sol.particular);
    if (val != sol.particular.get(it->first)) sol.particular.flip(it->first);
  }
  for (std::size_t free = 0; free < ncols; ++free) {
    if (piv.count(free)) continue;
    Gf2Vec v(ncols);
    v.set(free, true);
    for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
      if (it->second.dot(v)) v.flip(it->first);
    }
    sol.homogeneous.push_back(std::move(v));
  }
  return sol;
}

std::optional<std::vector<std::size_t>> gf2_express(const Gf2Vec& target,
                                                    const std::vector<Gf2Vec>& basis) {
  // Eliminate while tracking membership of original rows.
  struct Row {
    Gf2Vec v;
    std::vector<bool> mem;
  };
  PivotMap piv;
  std::map<std::size_t, std::vector<bool>> mem;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Gf2Vec r = basis[i];
    std::vector<bool> m(basis.size(), false);
    m[i] = true;
    for (const auto& [c, row] : piv) {
      if (r.get(c)) {
        r ^= row;
        const auto& pm = mem.at(c);
        for (std::size_t k = 0; k < m.size(); ++k) m[k] = m[k] != pm[k];
      }
    }
    if (r.any()) {
      const std::size_t c = r.lowest_set();
      piv.emplace(c, std::move(r));
      mem.emplace(c, std::move(m));
    }
  }
  Gf2Vec r = target;
  std::vector<bool> m(basis.size(), false);
  for (const auto& [c, row] : piv) {
    if (r.get(c)) {
      r ^= row;
      const auto& pm = mem.at(c);
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = m[k] != pm[k];
    }
  }
  if (r.any()) return std::nullopt;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (m[k]) idx.push_back(k);
  }
  return idx;
}

}  // namespace rubylat
