// Copyright 2026 The sloqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sloqc/report.hpp"
#include "sloqc/selftest.hpp"

namespace {

// JSON experiment file; every CLI flag overrides the matching field.
// Angles (custom gate parameters and nu) are in units of pi.
void load_config_file(const std::string& path, sloqc::ExperimentConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config-file", "cannot open " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  cfg.modes = doc.value("m", cfg.modes);
  if (doc.contains("gate")) {
    const auto& gate = doc.at("gate");
    if (gate.is_string()) {
      cfg.gate = gate.get<std::string>();
    } else {
      cfg.gate = gate.value("name", std::string("custom"));
      cfg.a = gate.value("a", cfg.a);
      cfg.b = gate.value("b", cfg.b);
      cfg.c = gate.value("c", cfg.c);
      cfg.d = gate.value("d", cfg.d);
      cfg.nu = gate.value("nu", cfg.nu);
    }
  }
  cfg.configuration = doc.value("configuration", cfg.configuration);
  cfg.encoding = doc.value("encoding", cfg.encoding);
  cfg.qubit = doc.value("qubit", cfg.qubit);
  if (doc.contains("thresholds")) {
    cfg.thresholds.fidelity = doc["thresholds"].value("fidelity", cfg.thresholds.fidelity);
    cfg.thresholds.success = doc["thresholds"].value("success", cfg.thresholds.success);
  }
  if (doc.contains("sweep")) {
    cfg.sweep_param = doc["sweep"].value("param", cfg.sweep_param);
    cfg.sweep_from = doc["sweep"].value("from", cfg.sweep_from);
    cfg.sweep_to = doc["sweep"].value("to", cfg.sweep_to);
    cfg.sweep_steps = doc["sweep"].value("steps", cfg.sweep_steps);
  }
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-LOQC single-qubit gate synthesis on time/frequency-bin registers"};
  app.require_subcommand(1);

  sloqc::ExperimentConfig cfg;
  std::string config_file;
  std::string out_path;
  std::string figure_name;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config-file", config_file, "JSON experiment file; flags override");
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--m", cfg.modes, "number of modes (even, >= 4)");
    sub->add_option("--f-th", cfg.thresholds.fidelity, "fidelity threshold");
    sub->add_option("--p-th", cfg.thresholds.success, "success threshold");
  };
  auto add_gate = [&](CLI::App* sub) {
    sub->add_option("--gate", cfg.gate,
                    "identity|pauli-x|pauli-y|pauli-z|hadamard|phase|custom");
    sub->add_option("--nu", cfg.nu, "phase-gate angle, units of pi");
    sub->add_option("--a", cfg.a, "custom gate a, units of pi");
    sub->add_option("--b", cfg.b, "custom gate b, units of pi");
    sub->add_option("--c", cfg.c, "custom gate c, units of pi");
    sub->add_option("--d", cfg.d, "custom gate d, units of pi");
  };

  CLI::App* synth = app.add_subcommand("synth", "solve one gate and emit a JSON report");
  add_common(synth);
  add_gate(synth);
  synth->add_option("--config", cfg.configuration, "epe|pep");
  synth->add_option("--encoding", cfg.encoding, "time|freq");
  synth->add_option("--qubit", cfg.qubit, "qubit index in [0, M/2)");

  CLI::App* figure = app.add_subcommand("figure", "emit a named dataset as CSV");
  add_common(figure);
  figure->add_option("name", figure_name, "fig2|fig3|fig4|fig5|table1|table2|guardband")
      ->required();

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter and emit CSV");
  add_common(sweep);
  add_gate(sweep);
  sweep->add_option("--config", cfg.configuration, "epe|pep");
  sweep->add_option("--encoding", cfg.encoding, "time|freq");
  sweep->add_option("--param", cfg.sweep_param,
                    "mu|theta|f_th|nu|n_tones|guard_spacing");
  sweep->add_option("--from", cfg.sweep_from, "sweep start");
  sweep->add_option("--to", cfg.sweep_to, "sweep end");
  sweep->add_option("--steps", cfg.sweep_steps, "number of points");

  CLI::App* selftest = app.add_subcommand("selftest", "run the structural invariant suite");
  add_common(selftest);

  // Parse twice so a config file loads first and explicit flags win.
  try {
    app.parse(argc, argv);
    if (!config_file.empty()) {
      load_config_file(config_file, cfg);
      app.clear();
      app.parse(argc, argv);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (synth->parsed()) {
      return write_output(sloqc::synth_report_json(cfg), out_path);
    }
    if (figure->parsed()) {
      if (!sloqc::is_known_figure(figure_name)) {
        std::cerr << "error: unknown figure '" << figure_name << "'\n";
        return 1;
      }
      return write_output(sloqc::figure_csv(figure_name, cfg), out_path);
    }
    if (sweep->parsed()) {
      return write_output(sloqc::sweep_csv(cfg), out_path);
    }
    if (selftest->parsed()) {
      const auto results = sloqc::run_selftest();
      bool all_pass = true;
      std::ostringstream out;
      for (const auto& check : results) {
        all_pass = all_pass && check.pass;
        char line[160];
        std::snprintf(line, sizeof(line), "[%s] %-36s metric=%.3e tol=%.3e\n",
                      check.pass ? "PASS" : "FAIL", check.name.c_str(), check.metric,
                      check.tolerance);
        out << line;
      }
      out << (all_pass ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
      const int rc = write_output(out.str(), out_path);
      if (rc != 0) return rc;
      return all_pass ? 0 : 2;
    }
  } catch (const sloqc::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
