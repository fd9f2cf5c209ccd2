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

#include <json.hpp>

#include "rubylat/code_analysis.hpp"
#include "rubylat/hamiltonian.hpp"
#include "rubylat/iom.hpp"
#include "rubylat/lattice.hpp"
#include "rubylat/spectral.hpp"

namespace rubylat {

using json = nlohmann::ordered_json;

inline json to_json(const RubyLattice& lat) {
  json j;
  j["type"] = "ruby";
  j["lx"] = lat.lx;
  j["ly"] = lat.ly;
  j["sites"] = json::array();
  for (const auto& s : lat.sites) {
    j["sites"].push_back({{"cell_x", s.cell_x}, {"cell_y", s.cell_y}, {"sublattice", s.sublattice}});
  }
  j["edges"] = json::array();
  for (const auto& e : lat.edges) {
    j["edges"].push_back({{"a", e.a},
                          {"b", e.b},
                          {"color", to_string(e.color)},
                          {"wrap", {e.wrap_x, e.wrap_y}}});
  }
  j["triangles"] = lat.triangles;
  j["squares"] = json::array();
  for (const auto& s : lat.squares) {
    j["squares"].push_back({{"sites", s.sites},
                            {"up_triangle", s.up_triangle},
                            {"down_triangle", s.down_triangle},
                            {"hexagons", s.hexagons}});
  }
  j["hexagons"] = json::array();
  for (const auto& hx : lat.hexagons) {
    j["hexagons"].push_back({{"sites", hx.sites}, {"color", to_string(hx.color)}});
  }
  return j;
}

inline json to_json(const TwoColex& colex) {
  json j;
  j["type"] = "two_colex";
  j["num_vertices"] = colex.num_vertices;
  j["genus"] = colex.genus;
  j["edges"] = json::array();
  for (const auto& e : colex.edges) {
    j["edges"].push_back({{"a", e.a},
                          {"b", e.b},
                          {"color", to_string(e.color)},
                          {"square", e.square},
                          {"wrap", {e.wrap_x, e.wrap_y}}});
  }
  j["faces"] = json::array();
  for (const auto& f : colex.faces) {
    j["faces"].push_back({{"vertex_walk", f.vertex_walk},
                          {"edge_walk", f.edge_walk},
                          {"vertices", f.vertices},
                          {"color", to_string(f.color)},
                          {"hexagon", f.hexagon}});
  }
  return j;
}

inline json to_json(const SquareLattice& lat) {
  json j;
  j["type"] = "square";
  j["l"] = lat.l;
  j["plaquettes"] = json::array();
  for (const auto& p : lat.plaquettes) {
    j["plaquettes"].push_back({{"corners", p.corners}, {"black", p.black}});
  }
  return j;
}

inline json to_json(const LatticeDiagnostics& d) {
  return json{{"ok", d.ok()}, {"violations", d.violations}};
}

inline json to_json(const HamiltonianTerms& h) {
  json terms = json::array();
  for (const auto& t : h.terms) {
    terms.push_back(
        {{"coefficient", t.coefficient}, {"pauli", t.op.to_text()}, {"zero", t.is_zero()}});
  }
  return json{{"n", h.n}, {"terms", terms}};
}

inline json provenance_to_json(const IntegralOfMotion& iom) {
  json j;
  if (const auto* p = std::get_if<PlaquetteProvenance>(&iom.provenance)) {
    j["kind"] = "plaquette";
    j["face"] = p->face;
    j["label"] = std::string(1, p->label);
  } else if (const auto* s = std::get_if<StringProvenance>(&iom.provenance)) {
    j["kind"] = "string";
    j["color"] = to_string(s->color);
    j["homology"] = s->homology;
    j["vertices"] = s->vertices;
    j["edges"] = s->edges;
    j["label"] = std::string(1, s->label);
  } else if (const auto* n = std::get_if<StringnetProvenance>(&iom.provenance)) {
    j["kind"] = "stringnet";
    j["components"] = n->components;
    j["homology"] = n->homology;
  }
  return j;
}

inline json to_json(const IntegralOfMotion& iom) {
  return json{{"pauli", iom.op.to_text()}, {"provenance", provenance_to_json(iom)}};
}

inline json to_json(const EigenCluster& c) {
  return json{{"mean", c.mean}, {"multiplicity", c.multiplicity}};
}

inline json to_json(const SpectrumReport& r) {
  json clusters = json::array();
  for (const auto& c : r.clusters) clusters.push_back(to_json(c));
  return json{{"eigenvalues", r.eigenvalues}, {"clusters", clusters},
              {"gap", r.gap},                 {"residuals", r.residuals},
              {"method", r.method},           {"iterations", r.iterations}};
}

inline json to_json(const GroupAnalysis& a) {
  return json{{"rank", a.rank},
              {"k", a.k},
              {"degeneracy", a.degeneracy},
              {"relations", a.relations},
              {"contains_minus_identity", a.contains_minus_identity}};
}

inline json to_json(const ChargeLabel& c) {
  return json{{"bits", c.bits},
              {"name", c.name},
              {"fermion", c.fermion},
              {"fermion_family", c.fermion_family}};
}

inline json to_json(const EffectiveComparison& c) {
  json low_clusters = json::array(), eff_clusters = json::array();
  for (const auto& cl : c.low_clusters) low_clusters.push_back(to_json(cl));
  for (const auto& cl : c.effective_clusters) eff_clusters.push_back(to_json(cl));
  return json{{"two_body_low", c.two_body_low},
              {"next_above", c.next_above},
              {"effective_full", c.effective_full},
              {"low_clusters", low_clusters},
              {"effective_clusters", eff_clusters},
              {"sector_gap", c.sector_gap},
              {"low_spread", c.low_spread},
              {"effective_spread", c.effective_spread},
              {"alpha", c.alpha},
              {"pattern_deviation", c.pattern_deviation},
              {"effective_spread_scaled", c.effective_spread_scaled},
              {"multiplicity_match", c.multiplicity_match},
              {"couplings_used",
               {{"jx", c.couplings_used.jx}, {"jy", c.couplings_used.jy}, {"jz", c.couplings_used.jz}}}};
}

}  // namespace rubylat
