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

#include "rubylat/iom.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "rubylat/gf2.hpp"

namespace rubylat {

namespace {

Gf2Vec symplectic_vector(const PauliOperator& op) {
  const std::size_t n = op.num_qubits();
  Gf2Vec row(2 * n);
  for (std::size_t s = 0; s < n; ++s) {
    if (op.x_bit(s)) row.set(s, true);
    if (op.z_bit(s)) row.set(n + s, true);
  }
  return row;
}

int score_xy(const PauliOperator& p) {
  int nx = 0, ny = 0;
  for (std::size_t s = 0; s < p.num_qubits(); ++s) {
    const bool xb = p.x_bit(s), zb = p.z_bit(s);
    if (xb && zb) ++ny;
    else if (xb) ++nx;
  }
  return nx - ny;
}

}  // namespace

bool commutes_with_all(const PauliOperator& op, const HamiltonianTerms& h) {
  for (const auto& t : h.terms) {
    if (!commutes(op, t.op)) return false;
  }
  return true;
}

std::vector<PauliOperator> find_local_ioms(const HamiltonianTerms& h,
                                           std::span<const int> support) {
  if (support.size() > 64) {
    throw std::invalid_argument("find_local_ioms: support larger than 64 sites");
  }
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] < 0 || static_cast<std::size_t>(support[i]) >= h.n) {
      throw std::invalid_argument("find_local_ioms: site out of range");
    }
    index[support[i]] = i;
  }
  const std::size_t m = index.size();
  // unknowns: v = (x_0..x_{m-1}, z_0..z_{m-1}); constraint per overlapping
  // term: sum_s x_s t.z(s) + z_s t.x(s) = 0
  std::vector<Gf2Vec> rows;
  for (const auto& t : h.terms) {
    Gf2Vec row(2 * m);
    bool touched = false;
    for (const auto& [site, i] : index) {
      const auto s = static_cast<std::size_t>(site);
      if (t.op.z_bit(s)) row.set(i, true);
      if (t.op.x_bit(s)) row.set(m + i, true);
      if (t.op.x_bit(s) || t.op.z_bit(s)) touched = true;
    }
    if (touched) rows.push_back(std::move(row));
  }
  std::vector<PauliOperator> out;
  for (const auto& v : gf2_nullspace(rows, 2 * m)) {
    std::vector<std::uint64_t> xw((h.n + 63) / 64, 0), zw((h.n + 63) / 64, 0);
    for (const auto& [site, i] : index) {
      if (v.get(i)) xw[static_cast<std::size_t>(site) >> 6] |= std::uint64_t{1} << (site & 63);
      if (v.get(m + i)) zw[static_cast<std::size_t>(site) >> 6] |= std::uint64_t{1} << (site & 63);
    }
    out.push_back(PauliOperator(h.n, std::move(xw), std::move(zw), 0).hermitian_canonical());
  }
  return out;
}

PlaquetteTriple plaquette_ioms(const RubyLattice& lat, const HamiltonianTerms& h, int face) {
  if (face < 0 || static_cast<std::size_t>(face) >= lat.hexagons.size()) {
    throw std::invalid_argument("plaquette_ioms: face id out of range");
  }
  const std::size_t n = lat.num_sites();
  const auto& ring = lat.hexagons[static_cast<std::size_t>(face)].sites;
  const std::set<int> ring_set(ring.begin(), ring.end());

  // the six squares around the face and the surrounding triangles
  std::vector<std::set<int>> ring_squares;
  for (const auto& sq : lat.squares) {
    if (sq.hexagons[0] == face || sq.hexagons[1] == face) {
      ring_squares.emplace_back(sq.sites.begin(), sq.sites.end());
    }
  }
  if (ring_squares.size() != 6) throw InvariantError("plaquette_ioms: face has != 6 squares");
  std::set<int> outer;
  for (const auto& tri : lat.triangles) {
    bool touches = false;
    for (int s : tri) touches = touches || ring_set.count(s);
    if (!touches) continue;
    for (int s : tri) {
      if (!ring_set.count(s)) outer.insert(s);
    }
  }

  // dressing: each outer site carries the color of its red/green edge that
  // leaves the ring of squares (x for red, y for green)
  std::map<int, EdgeColor> dangling;
  for (const auto& e : lat.edges) {
    if (e.color == EdgeColor::blue) continue;
    bool in_ring_square = false;
    for (const auto& sq : ring_squares) {
      if (sq.count(e.a) && sq.count(e.b)) {
        in_ring_square = true;
        break;
      }
    }
    if (in_ring_square) continue;
    for (int s : {e.a, e.b}) {
      if (outer.count(s)) {
        if (dangling.count(s)) throw InvariantError("plaquette_ioms: two dangling edges at site");
        dangling[s] = e.color;
      }
    }
  }
  if (dangling.size() != outer.size()) {
    throw InvariantError("plaquette_ioms: dressing incomplete");
  }

  std::vector<std::uint64_t> xa((n + 63) / 64, 0), za((n + 63) / 64, 0), zc((n + 63) / 64, 0);
  auto set_bit = [](std::vector<std::uint64_t>& w, int s) {
    w[static_cast<std::size_t>(s) >> 6] |= std::uint64_t{1} << (s & 63);
  };
  for (int s : ring) {
    set_bit(xa, s);
    set_bit(zc, s);
  }
  for (const auto& [s, col] : dangling) {
    set_bit(xa, s);
    if (col == EdgeColor::green) set_bit(za, s);
  }
  auto zb = za;
  for (int s : ring) set_bit(zb, s);

  PlaquetteTriple triple;
  triple.face = face;
  triple.a = {PauliOperator(n, xa, za, 0).hermitian_canonical(), PlaquetteProvenance{face, 'A'}};
  triple.b = {PauliOperator(n, xa, zb, 0).hermitian_canonical(), PlaquetteProvenance{face, 'B'}};
  triple.c = {PauliOperator(n, std::vector<std::uint64_t>((n + 63) / 64, 0), zc, 0)
                  .hermitian_canonical(),
              PlaquetteProvenance{face, 'C'}};

  for (const auto* iom : {&triple.a, &triple.b, &triple.c}) {
    if (!iom->op.is_hermitian() || !commutes_with_all(iom->op, h)) {
      throw InvariantError("plaquette_ioms: constructed operator fails verification");
    }
  }
  const auto ab = multiply(triple.a.op, triple.b.op);
  if (ab.xbits() != triple.c.op.xbits() || ab.zbits() != triple.c.op.zbits() ||
      ab.canonical_sign() != -1) {
    throw InvariantError("plaquette_ioms: A*B != -C");
  }
  const std::vector<Gf2Vec> bits = {symplectic_vector(triple.a.op),
                                    symplectic_vector(triple.b.op),
                                    symplectic_vector(triple.c.op)};
  if (gf2_rank(bits) != 2) throw InvariantError("plaquette_ioms: independence rank != 2");
  return triple;
}

std::vector<ColexWalk> closed_walks(const TwoColex& colex, int max_len) {
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<std::size_t>(colex.num_vertices));  // (edge, other endpoint)
  for (std::size_t e = 0; e < colex.edges.size(); ++e) {
    const auto& ed = colex.edges[e];
    adj[static_cast<std::size_t>(ed.a)].push_back({static_cast<int>(e), ed.b});
    adj[static_cast<std::size_t>(ed.b)].push_back({static_cast<int>(e), ed.a});
  }
  std::set<std::vector<int>> seen;  // sorted edge sets
  std::vector<ColexWalk> out;
  std::vector<int> pv, pe;
  auto dfs = [&](auto&& self, int v) -> void {
    if (static_cast<int>(pe.size()) >= max_len) return;
    for (const auto& [ei, w] : adj[static_cast<std::size_t>(v)]) {
      if (!pe.empty() && ei == pe.back()) continue;
      if (w == pv.front() && pe.size() >= 1) {
        std::vector<int> cyc = pe;
        cyc.push_back(ei);
        if (cyc.size() < 2) continue;
        std::vector<int> key = cyc;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
        if (seen.insert(key).second) {
          out.push_back({pv, cyc});
        }
        continue;
      }
      if (std::find(pv.begin(), pv.end(), w) != pv.end()) continue;
      pv.push_back(w);
      pe.push_back(ei);
      self(self, w);
      pv.pop_back();
      pe.pop_back();
    }
  };
  for (int v0 = 0; v0 < colex.num_vertices; ++v0) {
    pv = {v0};
    pe.clear();
    dfs(dfs, v0);
  }
  std::sort(out.begin(), out.end(), [](const ColexWalk& a, const ColexWalk& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.vertices < b.vertices;
  });
  return out;
}

bool walk_matches_color(const TwoColex& colex, const ColexWalk& walk, FaceColor kappa) {
  const int len = static_cast<int>(walk.edges.size());
  std::vector<int> kappa_pos;
  for (int i = 0; i < len; ++i) {
    if (colex.edges[static_cast<std::size_t>(walk.edges[i])].color == kappa) kappa_pos.push_back(i);
  }
  // faces (of color kappa) bordered by each edge
  auto kappa_faces_of_edge = [&](int e) {
    std::set<int> fs;
    for (std::size_t f = 0; f < colex.faces.size(); ++f) {
      if (colex.faces[f].color != kappa) continue;
      for (int fe : colex.faces[f].edge_walk) {
        if (fe == e) fs.insert(static_cast<int>(f));
      }
    }
    return fs;
  };
  auto run_on_common_face = [&](int begin, int count) {
    if (count <= 0) return true;
    std::set<int> common = kappa_faces_of_edge(walk.edges[static_cast<std::size_t>(begin % len)]);
    for (int k = 1; k < count && !common.empty(); ++k) {
      const auto fs = kappa_faces_of_edge(walk.edges[static_cast<std::size_t>((begin + k) % len)]);
      std::set<int> inter;
      std::set_intersection(common.begin(), common.end(), fs.begin(), fs.end(),
                            std::inserter(inter, inter.begin()));
      common = inter;
    }
    return !common.empty();
  };
  if (kappa_pos.empty()) {
    return run_on_common_face(0, len);
  }
  for (std::size_t k = 0; k < kappa_pos.size(); ++k) {
    const int cur = kappa_pos[k];
    const int nxt = kappa_pos[(k + 1) % kappa_pos.size()];
    int gap = (nxt - cur - 1 + len) % len;
    if (gap == 0 && kappa_pos.size() > 1) return false;  // kappa edges are a matching
    if (!run_on_common_face(cur + 1, gap)) return false;
  }
  return true;
}

std::optional<FaceColor> walk_color(const TwoColex& colex, const ColexWalk& walk) {
  std::optional<FaceColor> found;
  for (int k = 0; k < 3; ++k) {
    const auto col = static_cast<FaceColor>(k);
    if (walk_matches_color(colex, walk, col)) {
      if (found) return std::nullopt;
      found = col;
    }
  }
  return found;
}

std::array<int, 2> walk_homology(const TwoColex& colex, const ColexWalk& walk) {
  int hx = 0, hy = 0;
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const auto& e = colex.edges[static_cast<std::size_t>(walk.edges[i])];
    const int from = walk.vertices[i];
    if (from == e.a) {
      hx += e.wrap_x;
      hy += e.wrap_y;
    } else {
      hx -= e.wrap_x;
      hy -= e.wrap_y;
    }
  }
  return {((hx % 2) + 2) % 2, ((hy % 2) + 2) % 2};
}

int crossing_parity(const std::array<int, 2>& ha, const std::array<int, 2>& hb) {
  return (ha[0] * hb[1] + ha[1] * hb[0]) % 2;
}

StringTriple string_ioms(const RubyLattice& lat, const TwoColex& colex,
                         const HamiltonianTerms& h, const ColexWalk& walk, FaceColor color) {
  const std::size_t len = walk.edges.size();
  if (len < 2 || walk.vertices.size() != len) {
    throw std::invalid_argument("string_ioms: open or degenerate path rejected");
  }
  for (std::size_t i = 0; i < len; ++i) {
    const auto& e = colex.edges[static_cast<std::size_t>(walk.edges[i])];
    const int a = walk.vertices[i];
    const int b = walk.vertices[(i + 1) % len];
    if (!((e.a == a && e.b == b) || (e.a == b && e.b == a))) {
      throw std::invalid_argument("string_ioms: walk edges do not join consecutive vertices");
    }
  }
  if (!walk_matches_color(colex, walk, color)) {
    throw std::invalid_argument("string_ioms: walk is not a string of the stated color");
  }

  std::set<int> strip_set;
  for (int v : walk.vertices) {
    for (int s : lat.triangles[static_cast<std::size_t>(v)]) strip_set.insert(s);
  }
  const std::vector<int> strip(strip_set.begin(), strip_set.end());
  auto basis = find_local_ioms(h, strip);
  if (basis.size() != 2) {
    std::ostringstream os;
    os << "string_ioms: strip commutant has dimension " << basis.size()
       << " (want 2); the strip may cover the whole torus";
    throw std::invalid_argument(os.str());
  }
  std::array<PauliOperator, 3> elems = {basis[0], basis[1],
                                        multiply(basis[0], basis[1]).hermitian_canonical()};
  std::array<int, 3> scores = {score_xy(elems[0]), score_xy(elems[1]), score_xy(elems[2])};
  const int ia = static_cast<int>(std::max_element(scores.begin(), scores.end()) - scores.begin());
  const int ib = static_cast<int>(std::min_element(scores.begin(), scores.end()) - scores.begin());
  if (ia == ib) throw InvariantError("string_ioms: letter-histogram labeling is ambiguous");
  const int ic = 3 - ia - ib;

  StringTriple t;
  t.color = color;
  t.homology = walk_homology(colex, walk);
  auto prov = [&](char label) {
    return StringProvenance{color, t.homology, walk.vertices, walk.edges, label};
  };
  t.a = {elems[static_cast<std::size_t>(ia)], prov('A')};
  t.b = {elems[static_cast<std::size_t>(ib)], prov('B')};
  t.c = {elems[static_cast<std::size_t>(ic)], prov('C')};
  for (const auto* iom : {&t.a, &t.b, &t.c}) {
    if (!iom->op.is_hermitian() || !commutes_with_all(iom->op, h)) {
      throw InvariantError("string_ioms: triple fails verification");
    }
  }
  auto rel_sign = [](const PauliOperator& p, const PauliOperator& q, const PauliOperator& r) {
    const auto pq = multiply(p, q);
    if (pq.xbits() != r.xbits() || pq.zbits() != r.zbits()) {
      throw InvariantError("string_ioms: pairwise product leaves the triple");
    }
    return pq.canonical_sign();
  };
  t.sign_ab_c = rel_sign(t.a.op, t.b.op, t.c.op);
  t.sign_bc_a = rel_sign(t.b.op, t.c.op, t.a.op);
  t.sign_ac_b = rel_sign(t.a.op, t.c.op, t.b.op);
  return t;
}

IntegralOfMotion make_stringnet(const std::vector<IntegralOfMotion>& components) {
  if (components.empty()) throw std::invalid_argument("make_stringnet: no components");
  PauliOperator op(components.front().op.num_qubits());
  StringnetProvenance prov;
  prov.homology = {0, 0};
  for (const auto& c : components) {
    op = multiply(op, c.op);
    std::ostringstream os;
    if (const auto* sp = std::get_if<StringProvenance>(&c.provenance)) {
      os << "string(" << to_string(sp->color) << ", h=[" << sp->homology[0] << ","
         << sp->homology[1] << "], " << sp->label << ")";
      prov.homology[0] = (prov.homology[0] + sp->homology[0]) % 2;
      prov.homology[1] = (prov.homology[1] + sp->homology[1]) % 2;
    } else if (const auto* pp = std::get_if<PlaquetteProvenance>(&c.provenance)) {
      os << "plaquette(face " << pp->face << ", " << pp->label << ")";
    } else {
      os << "stringnet";
    }
    prov.components.push_back(os.str());
  }
  if (!op.is_hermitian()) {
    // components that anticommute would break hermiticity; callers only
    // combine commuting strings
    throw std::invalid_argument("make_stringnet: product is not Hermitian");
  }
  return {op.hermitian_canonical(), prov};
}

StringnetReport stringnet_verify(const RubyLattice& lat, const HamiltonianTerms& h,
                                 const IntegralOfMotion& net,
                                 const std::vector<PlaquetteTriple>& plaquettes) {
  (void)lat;
  StringnetReport report;
  report.commutes_all = commutes_with_all(net.op, h);
  std::vector<Gf2Vec> basis;
  std::vector<std::pair<int, char>> labels;
  for (const auto& p : plaquettes) {
    basis.push_back(symplectic_vector(p.a.op));
    labels.push_back({p.face, 'A'});
    basis.push_back(symplectic_vector(p.b.op));
    labels.push_back({p.face, 'B'});
  }
  const auto combo = gf2_express(symplectic_vector(net.op), basis);
  if (!combo) {
    report.decomposes = false;
    return report;
  }
  report.decomposes = true;
  PauliOperator prod(net.op.num_qubits());
  for (std::size_t idx : *combo) {
    report.plaquette_combination.push_back(labels[idx]);
    const auto& p = plaquettes[idx / 2];
    prod = multiply(prod, (idx % 2 == 0 ? p.a : p.b).op);
  }
  if (prod.xbits() != net.op.xbits() || prod.zbits() != net.op.zbits()) {
    throw InvariantError("stringnet_verify: GF(2) decomposition mismatch");
  }
  report.sign = multiply(prod, net.op).phase_exp() == 0 ? +1 : -1;
  return report;
}

LogicalAlgebra logical_algebra(const RubyLattice& lat, const TwoColex& colex,
                               const HamiltonianTerms& h) {
  struct Candidate {
    IntegralOfMotion iom;
    char label;
    FaceColor color;
    std::array<int, 2> homology;
  };
  std::vector<Candidate> cands;
  const int max_len = std::max(4, 2 * (lat.lx + lat.ly) + 2);
  for (const auto& walk : closed_walks(colex, max_len)) {
    const auto hom = walk_homology(colex, walk);
    if (hom[0] == 0 && hom[1] == 0) continue;
    const auto col = walk_color(colex, walk);
    if (!col) continue;
    StringTriple triple;
    try {
      triple = string_ioms(lat, colex, h, walk, *col);
    } catch (const std::invalid_argument&) {
      continue;  // strip too large or otherwise unusable
    }
    cands.push_back({triple.a, 'A', *col, triple.homology});
    cands.push_back({triple.b, 'B', *col, triple.homology});
    cands.push_back({triple.c, 'C', *col, triple.homology});
  }

  auto squares_to_identity = [](const PauliOperator& p) {
    const auto sq = multiply(p, p);
    return sq.is_identity_bits() && sq.phase_exp() == 0;
  };
  auto relations_ok = [&](const PauliOperator& x1, const PauliOperator& z1,
                          const PauliOperator& x2, const PauliOperator& z2) {
    return commutes(z1, z2) && commutes(x1, x2) && commutes(z1, x2) && commutes(z2, x1) &&
           !commutes(z1, x1) && !commutes(z2, x2) && squares_to_identity(x1) &&
           squares_to_identity(z1) && squares_to_identity(x2) && squares_to_identity(z2);
  };

  // prefer the textbook arrangement: x-type strings of homology (0,1) and
  // z-type strings of homology (1,0) for qubit 1, the transpose for qubit 2
  auto pick = [&](char label, const std::array<int, 2>& hom) {
    std::vector<const Candidate*> out;
    for (const auto& c : cands) {
      if (c.label == label && c.homology == hom) out.push_back(&c);
    }
    return out;
  };
  for (int pass = 0; pass < 2; ++pass) {
    const auto x1s = pass == 0 ? pick('A', {0, 1}) : pick('A', {1, 0});
    const auto z1s = pass == 0 ? pick('C', {1, 0}) : pick('C', {0, 1});
    const auto x2s = x1s;  // same class pool, different color/operator
    for (const auto* x1 : x1s) {
      for (const auto* z1 : z1s) {
        for (const auto* x2 : x2s) {
          if (x2 == x1) continue;
          for (const auto* z2 : z1s) {
            if (z2 == z1) continue;
            if (relations_ok(x1->iom.op, z1->iom.op, x2->iom.op, z2->iom.op)) {
              return {x1->iom, z1->iom, x2->iom, z2->iom};
            }
          }
        }
      }
    }
  }
  // fall back to an unconstrained search over all candidates
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = 0; j < cands.size(); ++j) {
      for (std::size_t k = 0; k < cands.size(); ++k) {
        for (std::size_t l = 0; l < cands.size(); ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          if (relations_ok(cands[i].iom.op, cands[j].iom.op, cands[k].iom.op, cands[l].iom.op)) {
            return {cands[i].iom, cands[j].iom, cands[k].iom, cands[l].iom};
          }
        }
      }
    }
  }
  throw InvariantError("logical_algebra: no valid string quadruple found");
}

}  // namespace rubylat
