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

#include "cbamp/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>

namespace cbamp {

namespace {

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::design, "design"},
    {Command::sweep_epsilon, "sweep-epsilon"},
    {Command::sweep_distribution, "sweep-distribution"},
    {Command::tables, "tables"},
    {Command::verify, "verify"},
    {Command::simulate_optics, "simulate-optics"},
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double to_double(const std::string& v, int line, const std::string& field) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(line, field, "not a number: '" + v + "'");
  return out;
}

template <class Int>
Int to_int(const std::string& v, int line, const std::string& field) {
  Int out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ConfigError(line, field, "not an integer: '" + v + "'");
  return out;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

Command parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  throw std::invalid_argument("unknown command '" + name + "'");
}

AxialDistribution DistributionSpec::build() const {
  if (kind == "uniform") return AxialDistribution::uniform();
  if (kind == "equatorial") return AxialDistribution::equatorial();
  if (kind == "polar") return AxialDistribution::polar(Pole::north);
  if (kind == "south-polar") return AxialDistribution::polar(Pole::south);
  if (kind == "mirror-polar") return AxialDistribution::mirror_polar();
  if (kind == "delta") return AxialDistribution::delta(parameter);
  if (kind == "fisher") return AxialDistribution::fisher(parameter);
  if (kind == "henyey-greenstein") return AxialDistribution::henyey_greenstein(parameter);
  if (kind == "tabulated") return AxialDistribution::load_tabulated(file, DistributionKind::tabulated);
  if (kind == "brosseau") return AxialDistribution::load_tabulated(file, DistributionKind::brosseau);
  throw std::invalid_argument("unknown distribution kind '" + kind + "'");
}

double Range::at(int i) const { return steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1); }

void Range::validate(const char* what) const {
  if (steps < 1) throw std::invalid_argument(std::string(what) + ": steps must be at least 1");
  if (!(lo <= hi)) throw std::invalid_argument(std::string(what) + ": range must satisfy min <= max");
}

void RunConfig::validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("epsilon must lie in [0, 1]");
  epsilon_sweep.validate("epsilon sweep");
  if (epsilon_sweep.lo < 0.0 || epsilon_sweep.hi > 1.0) throw std::invalid_argument("epsilon sweep must lie in [0, 1]");
  cos2_sweep.validate("cos2 sweep");
  if (cos2_sweep.lo < 0.0 || cos2_sweep.hi > 1.0) throw std::invalid_argument("cos2 sweep must lie in [0, 1]");
  ChannelScenario(eta_a, eta_b);
  if (ha_g_squared) HeraldedAmplifierModel(*ha_g_squared, ha_p_success);
  PdbsSpec(pdbs_eta_h, pdbs_eta_v);
  if (distribution.kind == "tabulated" || distribution.kind == "brosseau") {
    if (distribution.file.empty()) throw std::invalid_argument(distribution.kind + " distribution needs a file");
  } else {
    distribution.build();
  }
  if (filters != "auto" && filters != "none") throw std::invalid_argument("filters must be 'auto' or 'none'");
  if (theta_steps < 1 || phi_steps < 1) throw std::invalid_argument("optics grid needs at least one point");
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
}

ConfigError::ConfigError(int line, const std::string& field, const std::string& message)
    : std::runtime_error("config line " + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") + ": " +
                         message),
      line_(line),
      field_(field) {}

RunConfig parse_config(std::istream& in) {
  RunConfig c;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(std::string_view(raw).substr(0, raw.find('#')));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ConfigError(line, "", "unterminated section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ConfigError(line, "", "expected key = value");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    const std::string field = section.empty() ? key : section + "." + key;
    auto num = [&] { return to_double(value, line, field); };

    if (field == "run.command") {
      try {
        c.command = parse_command(value);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(line, field, e.what());
      }
    } else if (field == "run.seed") {
      c.seed = to_int<std::uint64_t>(value, line, field);
    } else if (field == "run.samples") {
      c.samples = to_int<std::uint64_t>(value, line, field);
    } else if (field == "run.output") {
      c.output_path = value;
    } else if (field == "distribution.kind") {
      c.distribution.kind = value;
    } else if (field == "distribution.parameter") {
      c.distribution.parameter = num();
    } else if (field == "distribution.file") {
      c.distribution.file = value;
    } else if (field == "hybrid.epsilon") {
      c.epsilon = num();
    } else if (field == "hybrid.epsilon_min") {
      c.epsilon_sweep.lo = num();
    } else if (field == "hybrid.epsilon_max") {
      c.epsilon_sweep.hi = num();
    } else if (field == "hybrid.epsilon_steps") {
      c.epsilon_sweep.steps = to_int<int>(value, line, field);
    } else if (field == "sweep.regime") {
      if (value == "mirror") {
        c.regime = Regime::mirror;
      } else if (value == "pc") {
        c.regime = Regime::pc;
      } else {
        throw ConfigError(line, field, "expected 'mirror' or 'pc'");
      }
    } else if (field == "sweep.cos2_min") {
      c.cos2_sweep.lo = num();
    } else if (field == "sweep.cos2_max") {
      c.cos2_sweep.hi = num();
    } else if (field == "sweep.cos2_steps") {
      c.cos2_sweep.steps = to_int<int>(value, line, field);
    } else if (field == "scenario.eta_a") {
      c.eta_a = num();
    } else if (field == "scenario.eta_b") {
      c.eta_b = num();
    } else if (field == "ha.g_squared") {
      if (value == "fit") {
        c.ha_g_squared.reset();
      } else {
        c.ha_g_squared = num();
      }
    } else if (field == "ha.p_success") {
      c.ha_p_success = num();
    } else if (field == "optics.eta_h") {
      c.pdbs_eta_h = num();
    } else if (field == "optics.eta_v") {
      c.pdbs_eta_v = num();
    } else if (field == "optics.filters") {
      c.filters = value;
    } else if (field == "optics.theta_steps") {
      c.theta_steps = to_int<int>(value, line, field);
    } else if (field == "optics.phi_steps") {
      c.phi_steps = to_int<int>(value, line, field);
    } else {
      throw ConfigError(line, field, section.empty() ? "key outside any section" : "unknown key");
    }
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(line, "", e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  return parse_config(in);
}

void write_config(std::ostream& out, const RunConfig& c) {
  out << "[run]\n"
      << "command = " << to_string(c.command) << '\n'
      << "seed = " << c.seed << '\n'
      << "samples = " << c.samples << '\n';
  if (!c.output_path.empty()) out << "output = " << c.output_path << '\n';
  out << "\n[distribution]\n"
      << "kind = " << c.distribution.kind << '\n'
      << "parameter = " << num17(c.distribution.parameter) << '\n';
  if (!c.distribution.file.empty()) out << "file = " << c.distribution.file << '\n';
  out << "\n[hybrid]\n"
      << "epsilon = " << num17(c.epsilon) << '\n'
      << "epsilon_min = " << num17(c.epsilon_sweep.lo) << '\n'
      << "epsilon_max = " << num17(c.epsilon_sweep.hi) << '\n'
      << "epsilon_steps = " << c.epsilon_sweep.steps << '\n'
      << "\n[sweep]\n"
      << "regime = " << (c.regime == Regime::mirror ? "mirror" : "pc") << '\n'
      << "cos2_min = " << num17(c.cos2_sweep.lo) << '\n'
      << "cos2_max = " << num17(c.cos2_sweep.hi) << '\n'
      << "cos2_steps = " << c.cos2_sweep.steps << '\n'
      << "\n[scenario]\n"
      << "eta_a = " << num17(c.eta_a) << '\n'
      << "eta_b = " << num17(c.eta_b) << '\n'
      << "\n[ha]\n"
      << "g_squared = " << (c.ha_g_squared ? num17(*c.ha_g_squared) : std::string("fit")) << '\n'
      << "p_success = " << num17(c.ha_p_success) << '\n'
      << "\n[optics]\n"
      << "eta_h = " << num17(c.pdbs_eta_h) << '\n'
      << "eta_v = " << num17(c.pdbs_eta_v) << '\n'
      << "filters = " << c.filters << '\n'
      << "theta_steps = " << c.theta_steps << '\n'
      << "phi_steps = " << c.phi_steps << '\n';
}

}  // namespace cbamp
