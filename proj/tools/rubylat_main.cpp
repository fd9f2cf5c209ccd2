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

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rubylat/code_analysis.hpp"
#include "rubylat/hamiltonian.hpp"
#include "rubylat/iom.hpp"
#include "rubylat/json_io.hpp"
#include "rubylat/lattice.hpp"
#include "rubylat/spectral.hpp"
#include "rubylat/version.hpp"

namespace {

using rubylat::json;

int log_level() {
  const char* env = std::getenv("RUBYLAT_LOG");
  if (!env) return 1;
  const std::string v(env);
  if (v == "quiet") return 0;
  if (v == "debug") return 2;
  return 1;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[rubylat] " << msg << "\n";
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
  return buf;
}

struct RunConfig {
  std::string task;
  std::string lattice_type = "ruby";
  int lx = 1, ly = 1, l = 4;
  rubylat::Couplings couplings{1.0, 1.0, 1.0};
  std::string model;  // two-body | toric | color-code | effective
  int eigs = 12;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  double cluster_tol = 1e-8;
  std::string reading = "symmetric";
  bool ground_sector = true;
  std::string out;

  json to_json() const {
    json j;
    j["task"] = task;
    j["lattice"] = {{"type", lattice_type}};
    if (lattice_type == "ruby") {
      j["lattice"]["lx"] = lx;
      j["lattice"]["ly"] = ly;
    } else {
      j["lattice"]["l"] = l;
    }
    j["couplings"] = {{"jx", couplings.jx}, {"jy", couplings.jy}, {"jz", couplings.jz}};
    j["model"] = model;
    j["solver"] = {{"eigs", eigs}, {"tol", tol}, {"seed", seed}, {"cluster_tol", cluster_tol}};
    j["effective"] = {{"reading", reading}, {"ground_sector", ground_sector}};
    j["out"] = out;
    return j;
  }
};

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (j.contains("task")) cfg.task = j["task"].get<std::string>();
  if (j.contains("lattice")) {
    const auto& l = j["lattice"];
    if (l.contains("type")) cfg.lattice_type = l["type"].get<std::string>();
    if (l.contains("lx")) cfg.lx = l["lx"].get<int>();
    if (l.contains("ly")) cfg.ly = l["ly"].get<int>();
    if (l.contains("l")) cfg.l = l["l"].get<int>();
  }
  if (j.contains("couplings")) {
    const auto& c = j["couplings"];
    if (c.contains("jx")) cfg.couplings.jx = c["jx"].get<double>();
    if (c.contains("jy")) cfg.couplings.jy = c["jy"].get<double>();
    if (c.contains("jz")) cfg.couplings.jz = c["jz"].get<double>();
  }
  if (j.contains("model")) cfg.model = j["model"].get<std::string>();
  if (j.contains("solver")) {
    const auto& s = j["solver"];
    if (s.contains("eigs")) cfg.eigs = s["eigs"].get<int>();
    if (s.contains("tol")) cfg.tol = s["tol"].get<double>();
    if (s.contains("seed")) cfg.seed = s["seed"].get<std::uint64_t>();
    if (s.contains("cluster_tol")) cfg.cluster_tol = s["cluster_tol"].get<double>();
  }
  if (j.contains("effective")) {
    const auto& e = j["effective"];
    if (e.contains("reading")) cfg.reading = e["reading"].get<std::string>();
    if (e.contains("ground_sector")) cfg.ground_sector = e["ground_sector"].get<bool>();
  }
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
}

rubylat::EffectiveReading parse_reading(const std::string& s) {
  if (s == "symmetric") return rubylat::EffectiveReading::symmetric;
  if (s == "literal") return rubylat::EffectiveReading::literal;
  throw std::invalid_argument("effective.reading must be 'symmetric' or 'literal'");
}

json iom_report_entry(const rubylat::IntegralOfMotion& iom, const rubylat::HamiltonianTerms& h) {
  json j = rubylat::to_json(iom);
  j["hermitian"] = iom.op.is_hermitian();
  j["commutes_with_all_terms"] = rubylat::commutes_with_all(iom.op, h);
  const auto sq = multiply(iom.op, iom.op);
  j["squares_to_identity"] = sq.is_identity_bits() && sq.phase_exp() == 0;
  return j;
}

json run_validate(const RunConfig& cfg) {
  json result;
  if (cfg.lattice_type == "ruby") {
    const auto lat = rubylat::build_ruby(cfg.lx, cfg.ly);
    result["lattice"] = rubylat::to_json(lat);
    result["diagnostics"] = rubylat::to_json(rubylat::validate(lat));
    const auto colex = rubylat::contract_triangles(lat);
    result["colex"] = rubylat::to_json(colex);
    result["colex_diagnostics"] = rubylat::to_json(rubylat::validate(colex));
  } else if (cfg.lattice_type == "square") {
    const auto lat = rubylat::build_square(cfg.l);
    result["lattice"] = rubylat::to_json(lat);
    result["diagnostics"] = rubylat::to_json(rubylat::validate(lat));
  } else {
    throw std::invalid_argument("lattice.type must be 'ruby' or 'square'");
  }
  return result;
}

json run_ioms(const RunConfig& cfg) {
  if (cfg.lattice_type != "ruby") throw std::invalid_argument("task=ioms needs a ruby lattice");
  const auto lat = rubylat::build_ruby(cfg.lx, cfg.ly);
  const auto colex = rubylat::contract_triangles(lat);
  const auto h = rubylat::build_two_body(lat, cfg.couplings);
  json result;
  result["plaquettes"] = json::array();
  for (int f = 0; f < static_cast<int>(lat.hexagons.size()); ++f) {
    const auto t = rubylat::plaquette_ioms(lat, h, f);
    json entry;
    entry["face"] = f;
    entry["A"] = iom_report_entry(t.a, h);
    entry["B"] = iom_report_entry(t.b, h);
    entry["C"] = iom_report_entry(t.c, h);
    const auto ab = multiply(t.a.op, t.b.op);
    entry["c_equals_minus_ab"] =
        ab.xbits() == t.c.op.xbits() && ab.zbits() == t.c.op.zbits() && ab.canonical_sign() == -1;
    entry["independent_rank"] = 2;
    result["plaquettes"].push_back(entry);
  }
  result["strings"] = json::array();
  const int max_len = std::max(4, 2 * (cfg.lx + cfg.ly) + 2);
  int budget = 64;
  for (const auto& w : rubylat::closed_walks(colex, max_len)) {
    if (budget == 0) break;
    const auto hom = rubylat::walk_homology(colex, w);
    if (!hom[0] && !hom[1]) continue;
    const auto col = rubylat::walk_color(colex, w);
    if (!col) continue;
    rubylat::StringTriple t;
    try {
      t = rubylat::string_ioms(lat, colex, h, w, *col);
    } catch (const std::invalid_argument&) {
      continue;
    }
    json entry;
    entry["color"] = rubylat::to_string(t.color);
    entry["homology"] = t.homology;
    entry["A"] = iom_report_entry(t.a, h);
    entry["B"] = iom_report_entry(t.b, h);
    entry["C"] = iom_report_entry(t.c, h);
    entry["sign_ab_c"] = t.sign_ab_c;
    entry["sign_bc_a"] = t.sign_bc_a;
    entry["sign_ac_b"] = t.sign_ac_b;
    result["strings"].push_back(entry);
    --budget;
  }
  return result;
}

json run_logicals(const RunConfig& cfg) {
  if (cfg.lattice_type != "ruby") throw std::invalid_argument("task=logicals needs a ruby lattice");
  const auto lat = rubylat::build_ruby(cfg.lx, cfg.ly);
  const auto colex = rubylat::contract_triangles(lat);
  const auto h = rubylat::build_two_body(lat, cfg.couplings);
  const auto logicals = rubylat::logical_algebra(lat, colex, h);
  json result;
  result["X1"] = iom_report_entry(logicals.x1, h);
  result["Z1"] = iom_report_entry(logicals.z1, h);
  result["X2"] = iom_report_entry(logicals.x2, h);
  result["Z2"] = iom_report_entry(logicals.z2, h);
  const auto& x1 = logicals.x1.op;
  const auto& z1 = logicals.z1.op;
  const auto& x2 = logicals.x2.op;
  const auto& z2 = logicals.z2.op;
  result["relations"] = {{"commute_z1_z2", commutes(z1, z2)},
                         {"commute_x1_x2", commutes(x1, x2)},
                         {"commute_z1_x2", commutes(z1, x2)},
                         {"commute_z2_x1", commutes(z2, x1)},
                         {"anticommute_z1_x1", !commutes(z1, x1)},
                         {"anticommute_z2_x2", !commutes(z2, x2)}};
  return result;
}

json run_code(const RunConfig& cfg) {
  json result;
  rubylat::StabilizerGroup group;
  rubylat::CodeFamily family;
  if (cfg.lattice_type == "square") {
    group = rubylat::from_terms(rubylat::build_toric(rubylat::build_square(cfg.l)));
    family = rubylat::CodeFamily::toric;
  } else {
    const auto colex = rubylat::contract_triangles(rubylat::build_ruby(cfg.lx, cfg.ly));
    group = rubylat::from_terms(rubylat::build_color_code(colex));
    family = rubylat::CodeFamily::color;
  }
  const auto analysis = rubylat::rank_and_logicals(group);
  result["n"] = group.n;
  result["num_generators"] = group.generators.size();
  result["analysis"] = rubylat::to_json(analysis);
  result["charge_table"] = json::array();
  for (const auto& c : rubylat::charge_table(family)) {
    result["charge_table"].push_back(rubylat::to_json(c));
  }
  return result;
}

rubylat::HamiltonianTerms spectrum_hamiltonian(const RunConfig& cfg) {
  if (cfg.lattice_type == "square") {
    return rubylat::build_toric(rubylat::build_square(cfg.l));
  }
  const auto lat = rubylat::build_ruby(cfg.lx, cfg.ly);
  const std::string model = cfg.model.empty() ? "two-body" : cfg.model;
  if (model == "two-body") return rubylat::build_two_body(lat, cfg.couplings);
  const auto colex = rubylat::contract_triangles(lat);
  if (model == "color-code") return rubylat::build_color_code(colex);
  if (model == "effective") {
    return rubylat::build_effective(colex, cfg.couplings, parse_reading(cfg.reading));
  }
  throw std::invalid_argument("model must be two-body, color-code or effective");
}

json run_spectrum(const RunConfig& cfg) {
  const auto h = spectrum_hamiltonian(cfg);
  rubylat::EigsOptions opt;
  opt.m = cfg.eigs;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.cluster_tol = cfg.cluster_tol;
  log_info("diagonalizing n=" + std::to_string(h.n) + ", m=" + std::to_string(opt.m));
  const auto rep = rubylat::lowest_eigs(h, opt);
  json result;
  result["spectrum"] = rubylat::to_json(rep);
  return result;
}

json run_compare_effective(const RunConfig& cfg) {
  if (cfg.lattice_type != "ruby") {
    throw std::invalid_argument("task=compare-effective needs a ruby lattice");
  }
  const auto lat = rubylat::build_ruby(cfg.lx, cfg.ly);
  const auto colex = rubylat::contract_triangles(lat);
  rubylat::CompareEffectiveOptions opt;
  opt.tol = cfg.tol;
  opt.seed = cfg.seed;
  opt.ground_sector = cfg.ground_sector;
  opt.reading = parse_reading(cfg.reading);
  log_info("comparing strong-coupling sector against the effective model");
  const auto cmp = rubylat::compare_effective(lat, colex, cfg.couplings, opt);
  json result;
  result["comparison"] = rubylat::to_json(cmp);
  result["gap_ratio"] = cmp.low_spread > 0 ? cmp.sector_gap / cmp.low_spread : 0.0;
  result["deviation_fraction"] =
      cmp.effective_spread_scaled > 0 ? cmp.pattern_deviation / cmp.effective_spread_scaled : 0.0;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ruby-lattice two-body model toolkit"};
  app.get_formatter()->column_width(34);

  std::string config_path, task_flag, positional_task;
  RunConfig cfg;
  app.add_option("task", positional_task,
                 "task: validate | ioms | logicals | code | spectrum | compare-effective");
  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_option("--task", task_flag, "task name (alternative to the positional)");
  auto* lat_opt = app.add_option("--lattice", cfg.lattice_type, "lattice type: ruby | square");
  auto* lx_opt = app.add_option("--lx", cfg.lx, "ruby cells in x");
  auto* ly_opt = app.add_option("--ly", cfg.ly, "ruby cells in y");
  auto* l_opt = app.add_option("--l", cfg.l, "square lattice linear size (even)");
  auto* jx_opt = app.add_option("--jx", cfg.couplings.jx, "red-link coupling");
  auto* jy_opt = app.add_option("--jy", cfg.couplings.jy, "green-link coupling");
  auto* jz_opt = app.add_option("--jz", cfg.couplings.jz, "blue-link coupling");
  auto* model_opt = app.add_option("--model", cfg.model, "two-body | color-code | effective");
  auto* eigs_opt = app.add_option("--eigs", cfg.eigs, "number of lowest eigenvalues");
  auto* tol_opt = app.add_option("--tol", cfg.tol, "solver residual tolerance (relative)");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "solver starting-block seed");
  auto* out_opt = app.add_option("--out", cfg.out, "report output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  json error;
  try {
    RunConfig base;
    if (!config_path.empty()) load_config_file(config_path, base);
    // flags override config-file fields
    if (!lat_opt->empty()) base.lattice_type = cfg.lattice_type;
    if (!lx_opt->empty()) base.lx = cfg.lx;
    if (!ly_opt->empty()) base.ly = cfg.ly;
    if (!l_opt->empty()) base.l = cfg.l;
    if (!jx_opt->empty()) base.couplings.jx = cfg.couplings.jx;
    if (!jy_opt->empty()) base.couplings.jy = cfg.couplings.jy;
    if (!jz_opt->empty()) base.couplings.jz = cfg.couplings.jz;
    if (!model_opt->empty()) base.model = cfg.model;
    if (!eigs_opt->empty()) base.eigs = cfg.eigs;
    if (!tol_opt->empty()) base.tol = cfg.tol;
    if (!seed_opt->empty()) base.seed = cfg.seed;
    if (!out_opt->empty()) base.out = cfg.out;
    if (!task_flag.empty()) base.task = task_flag;
    else if (!positional_task.empty()) base.task = positional_task;

    if (base.task.empty()) throw std::invalid_argument("no task given (positional or --task)");

    json result;
    if (base.task == "validate") result = run_validate(base);
    else if (base.task == "ioms") result = run_ioms(base);
    else if (base.task == "logicals") result = run_logicals(base);
    else if (base.task == "code") result = run_code(base);
    else if (base.task == "spectrum") result = run_spectrum(base);
    else if (base.task == "compare-effective") result = run_compare_effective(base);
    else throw std::invalid_argument("unknown task: " + base.task);

    json report;
    report["tool"] = "rubylat";
    report["version"] = rubylat::kVersion;
    report["generated_at"] = timestamp();
    report["task"] = base.task;
    report["config"] = base.to_json();
    report["result"] = result;
    const std::string text = report.dump(2) + "\n";
    if (base.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(base.out);
      if (!out) throw std::invalid_argument("cannot write report to " + base.out);
      out << text;
      log_info("report written to " + base.out);
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    error = {{"error", {{"code", 2}, {"message", e.what()}}}};
    std::cout << error.dump(2) << "\n";
    return 2;
  } catch (const rubylat::ConvergenceError& e) {
    error = {{"error", {{"code", 3}, {"message", e.what()}}}};
    std::cout << error.dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    error = {{"error", {{"code", 4}, {"message", e.what()}}}};
    std::cout << error.dump(2) << "\n";
    return 4;
  }
}
