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

#include <algorithm>
#include <sstream>

#include "cbamp/commands.hpp"
#include "cbamp/oracle.hpp"

using namespace cbamp;

namespace {

struct Output {
  int status;
  std::string csv;
  std::string info;
};

Output run(const RunConfig& c) {
  std::ostringstream csv, info;
  const int status = run_command(c, csv, info);
  return {status, csv.str(), info.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Commands, EveryCommandIsDeterministic) {
  for (Command cmd : {Command::design, Command::sweep_epsilon, Command::sweep_distribution, Command::tables,
                      Command::verify, Command::simulate_optics}) {
    RunConfig c;
    c.command = cmd;
    c.samples = 20000;
    const Output a = run(c);
    const Output b = run(c);
    EXPECT_EQ(a.status, 0) << to_string(cmd) << '\n' << a.info;
    EXPECT_FALSE(a.csv.empty()) << to_string(cmd);
    EXPECT_EQ(a.csv, b.csv) << to_string(cmd);
  }
}

TEST(Commands, DesignUniform) {
  RunConfig c;
  c.command = Command::design;
  const Output o = run(c);
  ASSERT_EQ(o.status, 0);
  EXPECT_NE(o.csv.find("0.83333333333333"), std::string::npos) << o.csv;
  EXPECT_EQ(line_count(o.csv), 2u) << o.csv;
}

TEST(Commands, SweepEpsilonGrid) {
  RunConfig c;
  c.command = Command::sweep_epsilon;
  const Output o = run(c);
  EXPECT_EQ(first_line(o.csv), "epsilon,P,F,G,SNR_dB,G_dB");
  EXPECT_EQ(line_count(o.csv), 12u);
}

TEST(Commands, SweepDistributionGrid) {
  RunConfig c;
  c.command = Command::sweep_distribution;
  c.cos2_sweep = {0.0, 1.0, 6};
  EXPECT_EQ(line_count(run(c).csv), 7u);
  c.regime = Regime::pc;
  EXPECT_EQ(line_count(run(c).csv), 7u);
}

TEST(Commands, VerifyPasses) {
  RunConfig c;
  c.command = Command::verify;
  c.samples = 200000;
  const Output o = run(c);
  EXPECT_EQ(o.status, 0) << o.csv;
  EXPECT_EQ(first_line(o.csv), "quantity,closed_form,oracle_value,abs_err,tolerance,samples_or_grid,status");
  EXPECT_EQ(o.csv.find(",FAIL"), std::string::npos) << o.csv;
}

TEST(Commands, SimulateOpticsReportsInfeasiblePoints) {
  RunConfig c;
  c.command = Command::simulate_optics;
  c.distribution = {"equatorial", 0.0, ""};
  c.pdbs_eta_h = 0.9;
  c.pdbs_eta_v = 0.1;
  const Output o = run(c);
  EXPECT_EQ(o.status, 0);
  EXPECT_EQ(line_count(o.csv), 1u + static_cast<std::size_t>(c.theta_steps * c.phi_steps));
}

TEST(Commands, SeedChangesMonteCarlo) {
  const MonteCarloEstimate a = monte_carlo_hybrid(AxialDistribution::uniform(), 0.5, 1, 20000);
  const MonteCarloEstimate b = monte_carlo_hybrid(AxialDistribution::uniform(), 0.5, 1, 20000);
  const MonteCarloEstimate c = monte_carlo_hybrid(AxialDistribution::uniform(), 0.5, 2, 20000);
  EXPECT_EQ(a.fidelity, b.fidelity);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_NE(a.fidelity, c.fidelity);
}
