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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cbamp/amplifier.hpp"
#include "cbamp/axial.hpp"
#include "cbamp/optics.hpp"

namespace cbamp {

enum class Command { design, sweep_epsilon, sweep_distribution, tables, verify, simulate_optics };

const char* to_string(Command c);
Command parse_command(const std::string& name);

/// Distribution as written in a config: a kind name plus its parameter or
/// table file.
struct DistributionSpec {
  /// uniform, equatorial, polar, south-polar, mirror-polar, delta, fisher,
  /// henyey-greenstein, brosseau, tabulated
  std::string kind = "uniform";
  double parameter = 0.0;
  std::string file;

  AxialDistribution build() const;
  bool operator==(const DistributionSpec&) const = default;
};

/// Closed grid lo, lo + step, ..., hi with `steps` points (steps >= 2) or
/// the single point lo (steps == 1).
struct Range {
  double lo = 0.0;
  double hi = 1.0;
  int steps = 11;

  double at(int i) const;
  void validate(const char* what) const;
  bool operator==(const Range&) const = default;
};

enum class Regime { mirror, pc };

struct RunConfig {
  Command command = Command::design;
  DistributionSpec distribution;
  double epsilon = 0.5;
  Range epsilon_sweep{0.0, 1.0, 11};
  Regime regime = Regime::mirror;
  /// <cos^2 theta> grid for sweep-distribution.
  Range cos2_sweep{0.0, 1.0, 21};
  double eta_a = 0.01;
  double eta_b = 1.0;
  /// g^2 of the heralded amplifier; empty means the value fitted to the
  /// reference gain 1.58 at eta_a = 0.01.
  std::optional<double> ha_g_squared;
  double ha_p_success = 0.09;
  double pdbs_eta_h = PdbsSpec::ideal().eta_h;
  double pdbs_eta_v = PdbsSpec::ideal().eta_v;
  /// auto | none
  std::string filters = "auto";
  int theta_steps = 9;
  int phi_steps = 4;
  std::uint64_t seed = 20260101;
  std::uint64_t samples = 1000000;
  std::string output_path;

  void validate() const;
  bool operator==(const RunConfig&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& field, const std::string& message);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

/// key = value lines grouped under [section] headers; '#' starts a comment.
/// Unknown sections or keys are errors.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config; numbers are written with 17 significant digits.
void write_config(std::ostream& out, const RunConfig& c);

}  // namespace cbamp
