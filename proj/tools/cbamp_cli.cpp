// Copyright 2026 The cbamp Authors
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

// cbamp: design and analysis of cloning-based qubit amplifiers.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cbamp/commands.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> out;
  std::optional<std::string> dist;
  std::optional<double> param;
  std::optional<std::string> file;
  std::optional<double> epsilon;
  std::optional<std::string> regime;
  std::optional<double> eta_h;
  std::optional<double> eta_v;
  std::optional<std::string> filters;
  bool dump_config = false;
};

cbamp::RunConfig resolve(std::optional<cbamp::Command> command, const Overrides& o) {
  if (!command && o.config_path.empty()) throw std::invalid_argument("a subcommand or --config is required");
  cbamp::RunConfig c = o.config_path.empty() ? cbamp::RunConfig{} : cbamp::load_config(o.config_path);
  if (command) c.command = *command;
  if (o.seed) c.seed = *o.seed;
  if (o.samples) c.samples = *o.samples;
  if (o.out) c.output_path = *o.out;
  if (o.dist) c.distribution.kind = *o.dist;
  if (o.param) c.distribution.parameter = *o.param;
  if (o.file) c.distribution.file = *o.file;
  if (o.epsilon) c.epsilon = *o.epsilon;
  if (o.regime) {
    if (*o.regime != "mirror" && *o.regime != "pc") throw std::invalid_argument("--regime must be mirror or pc");
    c.regime = *o.regime == "mirror" ? cbamp::Regime::mirror : cbamp::Regime::pc;
  }
  if (o.eta_h) c.pdbs_eta_h = *o.eta_h;
  if (o.eta_v) c.pdbs_eta_v = *o.eta_v;
  if (o.filters) c.filters = *o.filters;
  c.validate();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cloning-based amplifier toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path, "Run configuration file")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--samples", o.samples, "Monte Carlo sample count");
  app.add_option("--out", o.out, "CSV output path (default: stdout)");
  app.add_flag("--dump-config", o.dump_config, "Print the effective configuration and exit");

  const std::pair<cbamp::Command, const char*> commands[] = {
      {cbamp::Command::design, "Optimal cloner for a distribution"},
      {cbamp::Command::sweep_epsilon, "Hybrid figures over the mixing parameter"},
      {cbamp::Command::sweep_distribution, "Hybrid figures over <cos^2 theta>"},
      {cbamp::Command::tables, "Amplifier comparison tables"},
      {cbamp::Command::verify, "Run every oracle check"},
      {cbamp::Command::simulate_optics, "Linear-optics simulation on a state grid"},
  };
  std::optional<cbamp::Command> chosen;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(cbamp::to_string(cmd), help);
    sub->add_option("--dist", o.dist, "Distribution kind");
    sub->add_option("--param", o.param, "Distribution parameter (theta0, kappa or g)");
    sub->add_option("--file", o.file, "Table file for tabulated/brosseau");
    sub->add_option("--epsilon", o.epsilon, "Mixing parameter");
    sub->add_option("--regime", o.regime, "mirror or pc");
    sub->add_option("--eta-h", o.eta_h, "PDBS H transmissivity");
    sub->add_option("--eta-v", o.eta_v, "PDBS V transmissivity");
    sub->add_option("--filters", o.filters, "auto or none");
    sub->callback([&chosen, cmd = cmd] { chosen = cmd; });
  }
  CLI11_PARSE(app, argc, argv);

  try {
    const cbamp::RunConfig c = resolve(chosen, o);
    if (o.dump_config) {
      cbamp::write_config(std::cout, c);
      return 0;
    }
    if (c.output_path.empty()) return cbamp::run_command(c, std::cout, std::cerr);
    std::ofstream out(c.output_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << c.output_path << '\n';
      return 2;
    }
    return cbamp::run_command(c, out, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
