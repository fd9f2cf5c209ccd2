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

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

std::string cli_path() {
  const char* p = std::getenv("RUBYLAT_CLI");
  REQUIRE_MESSAGE(p != nullptr, "RUBYLAT_CLI env var must point at the binary");
  return p;
}

std::string schemas_dir() {
  const char* p = std::getenv("RUBYLAT_SCHEMAS");
  REQUIRE_MESSAGE(p != nullptr, "RUBYLAT_SCHEMAS env var must point at schemas/");
  return p;
}

struct RunResult {
  int exit_code;
  json output;
  std::string raw;
};

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string out_file = "cli_stdout_" + std::to_string(counter++) + ".json";
  const std::string cmd = "RUBYLAT_LOG=quiet " + cli_path() + " " + args + " > " + out_file;
  const int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  RunResult r;
  r.exit_code = WEXITSTATUS(rc);
  r.raw = ss.str();
  if (!r.raw.empty()) r.output = json::parse(r.raw, nullptr, false);
  return r;
}

// minimal JSON-schema checker: type / required / properties / items / enum
void check_schema(const json& value, const json& schema, const std::string& where) {
  if (schema.contains("type")) {
    const std::string t = schema["type"];
    bool ok = (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
              (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
              (t == "integer" && value.is_number_integer()) ||
              (t == "number" && value.is_number());
    CHECK_MESSAGE(ok, where, ": expected type ", t);
    if (!ok) return;
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& e : schema["enum"]) ok = ok || e == value;
    CHECK_MESSAGE(ok, where, ": value not in enum");
  }
  if (schema.contains("required")) {
    for (const auto& key : schema["required"]) {
      CHECK_MESSAGE(value.contains(key.get<std::string>()), where, ": missing required key ",
                    key.get<std::string>());
    }
  }
  if (schema.contains("properties") && value.is_object()) {
    for (const auto& [key, sub] : schema["properties"].items()) {
      if (value.contains(key)) check_schema(value[key], sub, where + "." + key);
    }
  }
  if (schema.contains("items") && value.is_array()) {
    for (const auto& item : value) check_schema(item, schema["items"], where + "[]");
  }
}

void check_report_schema(const json& report) {
  std::ifstream in(schemas_dir() + "/report.schema.json");
  REQUIRE(in.good());
  json schema;
  in >> schema;
  check_schema(report, schema, "report");
}

}  // namespace

TEST_CASE("validate task on ruby(1,1)") {
  const auto r = run_cli("validate --lattice ruby --lx 1 --ly 1");
  CHECK(r.exit_code == 0);
  REQUIRE_FALSE(r.output.is_discarded());
  check_report_schema(r.output);
  CHECK(r.output["result"]["diagnostics"]["ok"] == true);
  CHECK(r.output["result"]["lattice"]["sites"].size() == 18);
  CHECK(r.output["result"]["colex_diagnostics"]["ok"] == true);
}

TEST_CASE("bad config exits 2 with an error object") {
  const auto r = run_cli("validate --lx 0 --ly 1");
  CHECK(r.exit_code == 2);
  REQUIRE_FALSE(r.output.is_discarded());
  CHECK(r.output.contains("error"));
  CHECK(r.output["error"]["code"] == 2);
  const std::string msg = r.output["error"]["message"];
  CHECK(msg.find("Lx") != std::string::npos);

  const auto r2 = run_cli("no-such-task");
  CHECK(r2.exit_code == 2);
}

TEST_CASE("code task: toric L=4 and color code") {
  const auto r = run_cli("code --lattice square --l 4");
  CHECK(r.exit_code == 0);
  check_report_schema(r.output);
  CHECK(r.output["result"]["analysis"]["k"] == 2);
  CHECK(r.output["result"]["analysis"]["degeneracy"] == 4);
  CHECK(r.output["result"]["charge_table"].size() == 4);

  const auto rc = run_cli("code --lattice ruby --lx 1 --ly 1");
  CHECK(rc.exit_code == 0);
  CHECK(rc.output["result"]["analysis"]["k"] == 4);
  CHECK(rc.output["result"]["analysis"]["degeneracy"] == 16);
  CHECK(rc.output["result"]["charge_table"].size() == 16);
}

TEST_CASE("ioms task reports verified triples") {
  const auto r = run_cli("ioms --lx 1 --ly 1");
  CHECK(r.exit_code == 0);
  check_report_schema(r.output);
  const auto& plaquettes = r.output["result"]["plaquettes"];
  CHECK(plaquettes.size() == 3);
  for (const auto& p : plaquettes) {
    CHECK(p["c_equals_minus_ab"] == true);
    for (const char* lbl : {"A", "B", "C"}) {
      CHECK(p[lbl]["hermitian"] == true);
      CHECK(p[lbl]["commutes_with_all_terms"] == true);
      CHECK(p[lbl]["squares_to_identity"] == true);
    }
  }
  CHECK(r.output["result"]["strings"].size() == 9);
}

TEST_CASE("logicals task") {
  const auto r = run_cli("logicals --lx 1 --ly 1");
  CHECK(r.exit_code == 0);
  check_report_schema(r.output);
  const auto& rel = r.output["result"]["relations"];
  for (const auto& [key, val] : rel.items()) {
    CHECK_MESSAGE(val == true, key);
  }
}

TEST_CASE("spectrum task on the small toric code") {
  const auto r = run_cli("spectrum --lattice square --l 2 --eigs 8");
  CHECK(r.exit_code == 0);
  check_report_schema(r.output);
  const auto& spec = r.output["result"]["spectrum"];
  CHECK(spec["eigenvalues"][0].get<double>() == doctest::Approx(-4.0));
  CHECK(spec["clusters"][0]["multiplicity"] == 4);
}

TEST_CASE("config file with flag overrides and deterministic reports") {
  {
    std::ofstream cfg("cli_config.json");
    cfg << R"({"task": "spectrum", "lattice": {"type": "square", "l": 2},
               "solver": {"eigs": 4, "seed": 7}})";
  }
  const auto r1 = run_cli("--config cli_config.json");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output["result"]["spectrum"]["eigenvalues"].size() == 4);

  // flags override the file
  const auto r2 = run_cli("--config cli_config.json --eigs 6");
  CHECK(r2.output["result"]["spectrum"]["eigenvalues"].size() == 6);

  // identical config => byte-identical report modulo the timestamp
  const auto r3 = run_cli("--config cli_config.json");
  auto a = r1.output;
  auto b = r3.output;
  a.erase("generated_at");
  b.erase("generated_at");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("report goes to --out when given") {
  const auto r = run_cli("validate --lattice square --l 2 --out cli_report.json");
  CHECK(r.exit_code == 0);
  std::ifstream in("cli_report.json");
  REQUIRE(in.good());
  json report;
  in >> report;
  check_report_schema(report);
  CHECK(report["result"]["diagnostics"]["ok"] == true);
}
