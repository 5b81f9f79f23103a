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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cbamp/cloner.hpp"
#include "cbamp/qubit.hpp"

namespace cbamp {

/// Lossy link with the amplifier between two segments: eta_a before it,
/// eta_b after it. Total transmissivity is eta_a * eta_b.
struct ChannelScenario {
  double eta_a = 1.0;
  double eta_b = 1.0;

  ChannelScenario() = default;
  ChannelScenario(double eta_a, double eta_b);
  double eta() const { return eta_a * eta_b; }
};

/// Heralded noiseless amplifier characterized by its nominal g^2 and an
/// externally supplied heralding probability.
struct HeraldedAmplifierModel {
  double g_squared = 1.0;
  double p_success = 1.0;

  HeraldedAmplifierModel() = default;
  HeraldedAmplifierModel(double g_squared, double p_success);
};

struct AmplifierReport {
  std::string amplifier;
  ChannelScenario scenario;
  double gain_t = 0.0;
  double gain_nom = 0.0;
  double p_success = 0.0;
  double fidelity = 0.0;
  double snr_db = 0.0;
  double capacity_before = 0.0;
  double capacity_after = 0.0;
  bool heralded = false;

  /// Gain used when comparing amplifiers: G_T for the CBA, G_T' for the HA.
  double comparison_gain() const { return heralded ? gain_nom : gain_t; }
};

/// (2 - eta_b) P: probability of at least one of two clones surviving the
/// downstream loss, relative to a bare photon.
double cba_transmission_gain(double eta_b, double p_success);

/// x / (1 - x) with x = 2F - 1. Infinity at F = 1.
double snr_of_fidelity(double fidelity);

/// 10 log10(v); -inf for 0 and +inf for +inf.
double to_db(double value);

/// Product-state capacity 1 - H((1 + eta) / 2) of the depolarizing channel.
double capacity(double eta_eff);

enum class EtaMode { small_eta, exact };

/// Depolarizing parameter seen by the receiver when two clones of fidelity
/// F are sent, each through an erasure channel of transmissivity eta, and
/// the cloner succeeds with probability P. Erased or missing photons are
/// replaced by the maximally mixed state.
///
/// small_eta: 2 P (2F - 1) eta. exact: explicit mixture over the erasure
/// outcomes (the first surviving clone is kept).
double effective_eta_with_cloning(double eta, double fidelity, double p_success, EtaMode mode);

/// G > 1 + 1/SNR.
bool capacity_improves(double gain, double snr);

struct HeraldedOutput {
  MixedWithVacuum heralded_state;
  double gain_nom;
};

/// State delivered after heralding (including downstream loss) and the
/// nominal gain g^2 / (1 - eta_a + eta_a g^2).
HeraldedOutput ha_output(const HeraldedAmplifierModel& m, const ChannelScenario& s, const DensityMatrix& rho);

struct HeraldedGains {
  double g_t;
  double g_t_prime;
};

/// G_T = P G_nom (<= 1) and G_T' = G_nom. Throws if the model would
/// herald more photons than arrive.
HeraldedGains ha_transmission_gains(const HeraldedAmplifierModel& m, const ChannelScenario& s);

/// g^2 such that the nominal gain equals `gain_nom` at upstream
/// transmissivity eta_a.
double ha_gain_squared_for(double gain_nom, double eta_a);

struct OutputFidelities {
  double f_cba;
  double f_ha;
};

/// Preamplification output fidelities in the small eta_b regime:
/// 2 eta_b P F for the two-clone CBA and eta_b P for the HA.
OutputFidelities output_fidelities(double p_success, double fidelity, double eta_b);

/// Amplifier entry of a comparison table.
struct AmplifierSpec {
  enum class Type { cba, ha };
  Type type = Type::cba;
  std::string label;
  /// CBA: success probability and clone fidelity.
  double p_success = 1.0;
  double fidelity = 1.0;
  /// HA only.
  HeraldedAmplifierModel ha;

  static AmplifierSpec cba(std::string label, double p_success, double fidelity);
  /// Hybrid CBA for `dist` at mixing parameter epsilon.
  static AmplifierSpec cba_hybrid(std::string label, const AxialDistribution& dist, double epsilon);
  static AmplifierSpec heralded(std::string label, HeraldedAmplifierModel model);
};

AmplifierReport evaluate(const AmplifierSpec& amp, const ChannelScenario& s);

/// One row per (amplifier, scenario), amplifiers outermost.
std::vector<AmplifierReport> build_table(const std::vector<ChannelScenario>& scenarios,
                                         const std::vector<AmplifierSpec>& amplifiers);

/// Header: amplifier,eta_a,eta_b,G,P,F,SNR_dB,C_before,C_after
void write_report_csv(std::ostream& out, const std::vector<AmplifierReport>& rows);

/// Reference figures for one table row, used for comparison only.
struct ReferenceRow {
  std::string amplifier;
  double eta_a;
  double eta_b;
  double g;
  double p;
  double f;
};

/// Deterministic-cloning CBA vs hybrid linear-optics CBA (epsilon = 1/2).
const std::vector<ReferenceRow>& reference_cba_table();
/// Hybrid CBA vs heralded amplifier. The HA P column is reference data
/// only; it feeds the model but is never derived.
const std::vector<ReferenceRow>& reference_ha_table();

/// The three scenarios with eta_a eta_b = 0.01 used by both tables.
std::vector<ChannelScenario> reference_scenarios();

/// g^2 fitted to the HA row at eta_a = 0.01.
double reference_ha_gain_squared();

}  // namespace cbamp
