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

#include "rubylat/code_analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace rubylat {

namespace {

Gf2Vec symplectic_row(const PauliOperator& op) {
  const std::size_t n = op.num_qubits();
  Gf2Vec row(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    if (op.x_bit(s)) row.set(s, true);
    if (op.z_bit(s)) row.set(n + s, true);
  }
  return row;
}

struct TrackedRow {
  Gf2Vec bits;
  PauliOperator op;
  std::vector<std::size_t> members;  // original generator indices (XOR set)
};

void fold_members(std::vector<std::size_t>& into, const std::vector<std::size_t>& other) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(into.begin(), into.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  into = std::move(out);
}

// Phase-tracked elimination. Returns pivot rows (by pivot column) and the
// relation rows (bits fully cancelled, operator = +-identity).
struct Eliminated {
  std::map<std::size_t, TrackedRow> pivots;
  std::vector<TrackedRow> relations;
};

Eliminated eliminate(const std::vector<PauliOperator>& gens) {
  Eliminated e;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    TrackedRow r{symplectic_row(gens[i]), gens[i], {i}};
    for (auto& [c, piv] : e.pivots) {
      if (r.bits.get(c)) {
        r.bits ^= piv.bits;
        r.op = multiply(r.op, piv.op);
        fold_members(r.members, piv.members);
      }
    }
    if (r.bits.any()) {
      const std::size_t c = r.bits.lowest_set();
      e.pivots.emplace(c, std::move(r));
    } else {
      e.relations.push_back(std::move(r));
    }
  }
  return e;
}

}  // namespace

std::vector<Gf2Vec> StabilizerGroup::check_matrix() const {
  std::vector<Gf2Vec> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back(symplectic_row(g));
  return rows;
}

StabilizerGroup from_terms(const HamiltonianTerms& h) {
  StabilizerGroup g;
  g.n = h.n;
  for (const auto& t : h.terms) {
    if (!t.op.is_hermitian()) {
      throw std::invalid_argument("from_terms: non-Hermitian term " + t.op.to_text());
    }
    g.generators.push_back(t.op.hermitian_canonical());
  }
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < g.generators.size(); ++j) {
      if (!commutes(g.generators[i], g.generators[j])) {
        throw std::invalid_argument("from_terms: non-commuting pair (term " + std::to_string(i) +
                                    ": " + g.generators[i].to_text() + ", term " +
                                    std::to_string(j) + ": " + g.generators[j].to_text() + ")");
      }
    }
  }
  return g;
}

GroupAnalysis rank_and_logicals(const StabilizerGroup& g) {
  GroupAnalysis out;
  const auto e = eliminate(g.generators);
  out.rank = e.pivots.size();
  out.k = g.n - out.rank;
  out.degeneracy = std::uint64_t{1} << out.k;
  for (const auto& r : e.relations) {
    const unsigned ph = r.op.phase_exp();
    if (ph == 2) out.contains_minus_identity = true;
    out.relations.push_back(r.members);
  }
  return out;
}

std::vector<bool> syndrome(const StabilizerGroup& g, const PauliOperator& error) {
  if (error.num_qubits() != g.n) throw std::invalid_argument("syndrome: size mismatch");
  std::vector<bool> s;
  s.reserve(g.generators.size());
  for (const auto& gen : g.generators) s.push_back(!commutes(gen, error));
  return s;
}

namespace {

const char* color_letter(unsigned c) {
  switch (c) {
    case 1: return "r";
    case 2: return "g";
    default: return "b";
  }
}

ChargeLabel make_color_charge(unsigned cx, unsigned cy) {
  ChargeLabel l{};
  l.bits = static_cast<std::uint8_t>((cx << 2) | cy);
  if (cx == 0 && cy == 0) {
    l.name = "1";
  } else {
    std::string name;
    if (cx) name += std::string(color_letter(cx)) + "x";
    if (cy) {
      if (!name.empty()) name += "·";
      name += std::string(color_letter(cy)) + "y";
    }
    l.name = name;
  }
  l.fermion = cx != 0 && cy != 0;
  l.fermion_family = 0;
  if (l.fermion) {
    // families close under fusion: {(r,r),(g,g),(b,b)}, {(r,g),(g,b),(b,r)},
    // {(r,b),(g,r),(b,g)} with colors in Z2xZ2 (r=1, g=2, b=3)
    if (cx == cy) l.fermion_family = 1;
    else if ((cx == 1 && cy == 2) || (cx == 2 && cy == 3) || (cx == 3 && cy == 1)) l.fermion_family = 2;
    else l.fermion_family = 3;
  }
  return l;
}

}  // namespace

std::vector<ChargeLabel> charge_table(CodeFamily family) {
  std::vector<ChargeLabel> table;
  if (family == CodeFamily::toric) {
    table.push_back({0b00, "1", false, 0});
    table.push_back({0b01, "e", false, 0});  // black-plaquette violation
    table.push_back({0b10, "m", false, 0});  // white-plaquette violation
    table.push_back({0b11, "f", true, 1});   // e x m
  } else {
    for (unsigned cx = 0; cx < 4; ++cx) {
      for (unsigned cy = 0; cy < 4; ++cy) table.push_back(make_color_charge(cx, cy));
    }
  }
  return table;
}

ChargeLabel fuse(CodeFamily family, const ChargeLabel& a, const ChargeLabel& b) {
  const std::uint8_t bits = a.bits ^ b.bits;
  for (const auto& l : charge_table(family)) {
    if (l.bits == bits) return l;
  }
  throw std::logic_error("fuse: charge outside table");
}

std::vector<std::pair<double, std::uint64_t>> stabilizer_spectrum(const HamiltonianTerms& h) {
  std::vector<PauliOperator> ops;
  ops.reserve(h.terms.size());
  for (const auto& t : h.terms) {
    if (!t.op.is_hermitian()) {
      throw std::invalid_argument("stabilizer_spectrum: non-Hermitian term");
    }
    ops.push_back(t.op.hermitian_canonical());
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!commutes(ops[i], ops[j])) {
        throw std::invalid_argument("stabilizer_spectrum: terms do not all commute");
      }
    }
  }
  const auto e = eliminate(ops);
  const std::size_t rank = e.pivots.size();
  if (rank > 26) throw std::invalid_argument("stabilizer_spectrum: rank too large to enumerate");

  // pivot order and index
  std::vector<const TrackedRow*> pivots;
  for (const auto& [c, r] : e.pivots) pivots.push_back(&r);

  // expand each term over the pivot set: term = sign * prod(pivots in mask)
  struct Expansion {
    std::uint32_t mask;
    int sign;
    double coeff;
  };
  std::vector<Expansion> expansions;
  for (const auto& t : h.terms) {
    Gf2Vec bits = symplectic_row(t.op.hermitian_canonical());
    PauliOperator op = t.op.hermitian_canonical();
    std::uint32_t mask = 0;
    std::size_t pi = 0;
    for (const auto& [c, piv] : e.pivots) {
      if (bits.get(c)) {
        bits ^= piv.bits;
        op = multiply(op, piv.op);
        mask |= (std::uint32_t{1} << pi);
      }
      ++pi;
    }
    if (bits.any()) throw std::logic_error("stabilizer_spectrum: expansion failed");
    const int sign = op.phase_exp() == 0 ? +1 : -1;
    expansions.push_back({mask, sign, t.coefficient});
  }

  const std::uint64_t sectors = std::uint64_t{1} << rank;
  const std::uint64_t mult = std::uint64_t{1} << (h.n - rank);
  std::map<double, std::uint64_t> spectrum;
  for (std::uint64_t s = 0; s < sectors; ++s) {
    double energy = 0.0;
    for (const auto& ex : expansions) {
      const bool flip = std::popcount(static_cast<std::uint64_t>(ex.mask) & s) & 1;
      energy += ex.coeff * ex.sign * (flip ? -1.0 : 1.0);
    }
    spectrum[energy] += mult;
  }
  return {spectrum.begin(), spectrum.end()};
}

}  // namespace rubylat
