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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "cbamp/config.hpp"

using namespace cbamp;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

void expect_error(const std::string& text, int line, const std::string& field) {
  try {
    parse(text);
    FAIL() << "expected ConfigError for:\n" << text;
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.field(), field) << e.what();
    EXPECT_NE(std::string(e.what()).find("line " + std::to_string(line)), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(Config, DefaultsRoundTrip) {
  const RunConfig c;
  std::ostringstream out;
  write_config(out, c);
  EXPECT_EQ(parse(out.str()), c);
  EXPECT_EQ(parse(""), c);
}

TEST(Config, NonDefaultRoundTrip) {
  RunConfig c;
  c.command = Command::simulate_optics;
  c.distribution = {"fisher", -2.5, ""};
  c.epsilon = 0.1;
  c.epsilon_sweep = {0.2, 0.8, 7};
  c.regime = Regime::pc;
  c.cos2_sweep = {0.1, 0.9, 5};
  c.eta_a = 0.3;
  c.eta_b = 0.02;
  c.ha_g_squared = 1.0 / 3.0;
  c.ha_p_success = 0.123;
  c.pdbs_eta_h = 0.76;
  c.pdbs_eta_v = 0.18;
  c.filters = "none";
  c.theta_steps = 5;
  c.phi_steps = 2;
  c.seed = 99;
  c.samples = 12345;
  c.output_path = "out.csv";
  std::ostringstream out;
  write_config(out, c);
  EXPECT_EQ(parse(out.str()), c) << out.str();
}

TEST(Config, ParsesCommentsAndSections) {
  const RunConfig c = parse(
      "# run\n"
      "[run]\n"
      "command = tables  # trailing\n"
      "\n"
      "[distribution]\n"
      "kind = delta\n"
      "parameter = 0.4\n"
      "[ha]\n"
      "g_squared = fit\n");
  EXPECT_EQ(c.command, Command::tables);
  EXPECT_EQ(c.distribution.kind, "delta");
  EXPECT_DOUBLE_EQ(c.distribution.parameter, 0.4);
  EXPECT_FALSE(c.ha_g_squared.has_value());
}

TEST(Config, ErrorsNameLineAndField) {
  expect_error("[run]\nseed = 1\nsamples = many\n", 3, "run.samples");
  expect_error("[hybrid]\nepsilon = x\n", 2, "hybrid.epsilon");
  expect_error("[run]\ncolour = red\n", 2, "run.colour");
  expect_error("[nowhere]\nkey = 1\n", 2, "nowhere.key");
  expect_error("seed = 4\n", 1, "seed");
  expect_error("[run]\nseed 4\n", 2, "");
  expect_error("[sweep]\nregime = sideways\n", 2, "sweep.regime");
  expect_error("[run\n", 1, "");
  expect_error("[run]\ncommand = fly\n", 2, "run.command");
}

TEST(Config, ValidationFailuresAreConfigErrors) {
  EXPECT_THROW(parse("[hybrid]\nepsilon = 1.5\n"), ConfigError);
  EXPECT_THROW(parse("[scenario]\neta_a = 0\n"), ConfigError);
  EXPECT_THROW(parse("[optics]\neta_h = 2\n"), ConfigError);
  EXPECT_THROW(parse("[optics]\nfilters = maybe\n"), ConfigError);
  EXPECT_THROW(parse("[distribution]\nkind = cubic\n"), ConfigError);
  EXPECT_THROW(parse("[distribution]\nkind = tabulated\n"), ConfigError);
}

TEST(Config, CommandNames) {
  for (Command c : {Command::design, Command::sweep_epsilon, Command::sweep_distribution, Command::tables,
                    Command::verify, Command::simulate_optics}) {
    EXPECT_EQ(parse_command(to_string(c)), c);
  }
  EXPECT_THROW(parse_command("nope"), std::invalid_argument);
}

TEST(Range, Grid) {
  const Range r{0.0, 1.0, 5};
  EXPECT_DOUBLE_EQ(r.at(0), 0.0);
  EXPECT_DOUBLE_EQ(r.at(2), 0.5);
  EXPECT_DOUBLE_EQ(r.at(4), 1.0);
  EXPECT_DOUBLE_EQ((Range{0.3, 0.3, 1}).at(0), 0.3);
  EXPECT_THROW((Range{0.0, 1.0, 0}).validate("r"), std::invalid_argument);
  EXPECT_THROW((Range{1.0, 0.0, 3}).validate("r"), std::invalid_argument);
}

TEST(DistributionSpec, BuildsEveryKind) {
  for (const DistributionSpec& s : {DistributionSpec{"uniform", 0.0, ""}, DistributionSpec{"equatorial", 0.0, ""},
                                    DistributionSpec{"polar", 0.0, ""}, DistributionSpec{"south-polar", 0.0, ""},
                                    DistributionSpec{"mirror-polar", 0.0, ""}, DistributionSpec{"delta", 1.0, ""},
                                    DistributionSpec{"fisher", 2.0, ""}, DistributionSpec{"henyey-greenstein", 0.3, ""}}) {
    EXPECT_NO_THROW(s.build()) << s.kind;
  }
  EXPECT_THROW((DistributionSpec{"tabulated", 0.0, "/nonexistent/table.txt"}).build(), std::runtime_error);
  EXPECT_THROW((DistributionSpec{"fisher", NAN, ""}).build(), std::invalid_argument);
  EXPECT_THROW((DistributionSpec{"cubic", 0.0, ""}).build(), std::invalid_argument);
}
