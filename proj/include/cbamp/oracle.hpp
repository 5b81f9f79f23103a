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
#include <iosfwd>
#include <string>
#include <vector>

#include "cbamp/axial.hpp"
#include "cbamp/cloner.hpp"

namespace cbamp {

/// One closed-form value checked against an independent computation.
struct OracleReport {
  std::string quantity;
  double closed_form = 0.0;
  double oracle_value = 0.0;
  double abs_err = 0.0;
  double tolerance = 0.0;
  /// Sample count or grid size behind oracle_value.
  std::uint64_t samples_or_grid = 0;

  OracleReport() = default;
  OracleReport(std::string quantity, double closed_form, double oracle_value, double tolerance,
               std::uint64_t samples_or_grid);
  bool passed() const { return abs_err <= tolerance; }
};

struct MonteCarloEstimate {
  double fidelity;
  double success_rate;
  std::uint64_t successes;
};

/// Hybrid strategy played sample by sample: a Bernoulli draw r <= 1 - eps
/// picks the quantum cloner (which then succeeds with P_A(theta) and yields
/// the clone of clone_state), otherwise the input is swapped with the
/// central state. Fidelity is averaged over successful events.
MonteCarloEstimate monte_carlo_hybrid(const AxialDistribution& dist, double epsilon, std::uint64_t seed,
                                      std::uint64_t samples);

/// F and P reports for one distribution.
std::vector<OracleReport> monte_carlo_oracle(const std::string& label, const AxialDistribution& dist, double epsilon,
                                             std::uint64_t seed, std::uint64_t samples, double tolerance = 3e-3);

/// Effective depolarizing parameter obtained by enumerating the loss
/// patterns of an explicit two-clone state (the first surviving clone is
/// kept), measured against an arbitrary pure reference state.
double effective_eta_enumerated(double eta, double fidelity, double p_success);

std::vector<OracleReport> effective_eta_oracle();

/// simulate_cba with the ideal PDBS against clone_state on a theta grid:
/// largest entrywise deviation of rho12 and of P_A(theta).
std::vector<OracleReport> optics_oracle(const std::string& label, const ClonerDesign& design, int theta_points = 50);
std::vector<OracleReport> optics_oracles();

std::vector<OracleReport> legendre_oracle();

/// g^2 by bisection on the nominal gain, compared with the closed form.
double ha_gain_squared_bisection(double gain_nom, double eta_a);
std::vector<OracleReport> ha_oracle();

/// Every oracle; the Monte Carlo ones use (seed, samples).
std::vector<OracleReport> run_all_oracles(std::uint64_t seed, std::uint64_t samples);

/// Header: quantity,closed_form,oracle_value,abs_err,tolerance,samples_or_grid,status
void write_oracle_csv(std::ostream& out, const std::vector<OracleReport>& reports);

}  // namespace cbamp
