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

#include "cbamp/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace cbamp {

namespace {

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

std::string num17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ChannelScenario::ChannelScenario(double a, double b) : eta_a(a), eta_b(b) {
  if (!(a > 0.0 && a <= 1.0) || !(b > 0.0 && b <= 1.0)) {
    throw std::invalid_argument("ChannelScenario: transmissivities must lie in (0, 1]");
  }
}

HeraldedAmplifierModel::HeraldedAmplifierModel(double g2, double p) : g_squared(g2), p_success(p) {
  if (!(g2 > 0.0) || !std::isfinite(g2)) throw std::invalid_argument("HeraldedAmplifierModel: g^2 must be positive");
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("HeraldedAmplifierModel: P must lie in (0, 1]");
}

double cba_transmission_gain(double eta_b, double p_success) {
  require_unit(eta_b, "eta_b");
  require_unit(p_success, "P");
  return (2.0 - eta_b) * p_success;
}

double snr_of_fidelity(double fidelity) {
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) throw std::invalid_argument("snr_of_fidelity: F must lie in [1/2, 1]");
  if (fidelity == 1.0) return std::numeric_limits<double>::infinity();
  const double x = 2.0 * fidelity - 1.0;
  return x / (1.0 - x);
}

double to_db(double value) {
  if (value == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(value);
}

double capacity(double eta_eff) {
  require_unit(eta_eff, "capacity: eta");
  // 1 - H((1 + eta) / 2) rewritten with log1p so small eta keeps its digits.
  const double plus = (1.0 + eta_eff) * std::log1p(eta_eff);
  const double minus = eta_eff == 1.0 ? 0.0 : (1.0 - eta_eff) * std::log1p(-eta_eff);
  return std::max(0.0, (plus + minus) / (2.0 * std::numbers::ln2));
}

double effective_eta_with_cloning(double eta, double fidelity, double p_success, EtaMode mode) {
  require_unit(eta, "eta");
  require_unit(p_success, "P");
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) throw std::invalid_argument("effective_eta: F must lie in [1/2, 1]");
  if (mode == EtaMode::small_eta) return 2.0 * p_success * (2.0 * fidelity - 1.0) * eta;

  const DensityMatrix rho = DensityMatrix::from_ket(Eigen::Vector2cd(1.0, 0.0));
  const DensityMatrix clone = shrink(rho, fidelity);
  const Eigen::MatrixXcd noise = Eigen::MatrixXcd::Identity(2, 2) / 2.0;
  struct Outcome {
    double probability;
    const Eigen::MatrixXcd* state;
  };
  const Outcome outcomes[] = {
      {1.0 - p_success, &noise},                                  // cloner failed, nothing sent
      {p_success * (1.0 - eta) * (1.0 - eta), &noise},            // both clones erased
      {p_success * eta, &clone.matrix()},                         // first clone arrives
      {p_success * (1.0 - eta) * eta, &clone.matrix()},           // only the second arrives
  };
  Eigen::MatrixXcd received = Eigen::MatrixXcd::Zero(2, 2);
  for (const Outcome& o : outcomes) received += o.probability * *o.state;
  const double overlap = cbamp::fidelity(rho, DensityMatrix(received));
  return 2.0 * overlap - 1.0;
}

bool capacity_improves(double gain, double snr) {
  if (!(snr > 0.0)) throw std::invalid_argument("capacity_improves: SNR must be positive");
  return gain > 1.0 + 1.0 / snr;
}

HeraldedOutput ha_output(const HeraldedAmplifierModel& m, const ChannelScenario& s, const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("ha_output: input must be a qubit");
  const double n = 1.0 - s.eta_a + s.eta_a * m.g_squared;
  const double photon_after_herald = m.g_squared * s.eta_a / n;
  const double photon_out = s.eta_b * photon_after_herald;
  return {MixedWithVacuum{1.0 - photon_out, rho}, m.g_squared / n};
}

HeraldedGains ha_transmission_gains(const HeraldedAmplifierModel& m, const ChannelScenario& s) {
  const double n = 1.0 - s.eta_a + s.eta_a * m.g_squared;
  const double g_nom = m.g_squared / n;
  const double g_t = m.p_success * g_nom;
  if (g_t > 1.0 + 1e-12) {
    throw std::invalid_argument("ha_transmission_gains: P * G_nom exceeds 1; the model heralds more photons than arrive");
  }
  return {g_t, g_nom};
}

double ha_gain_squared_for(double gain_nom, double eta_a) {
  if (!(eta_a > 0.0 && eta_a <= 1.0)) throw std::invalid_argument("ha_gain_squared_for: eta_a must lie in (0, 1]");
  if (!(gain_nom > 0.0) || gain_nom * eta_a >= 1.0) {
    if (eta_a == 1.0 && gain_nom == 1.0) {
      throw std::invalid_argument("ha_gain_squared_for: any g^2 gives unit gain at eta_a = 1");
    }
    throw std::invalid_argument("ha_gain_squared_for: nominal gain must lie in (0, 1/eta_a)");
  }
  return gain_nom * (1.0 - eta_a) / (1.0 - gain_nom * eta_a);
}

OutputFidelities output_fidelities(double p_success, double fidelity, double eta_b) {
  require_unit(p_success, "P");
  require_unit(fidelity, "F");
  require_unit(eta_b, "eta_b");
  return {2.0 * eta_b * p_success * fidelity, eta_b * p_success};
}

AmplifierSpec AmplifierSpec::cba(std::string label, double p_success, double fidelity) {
  require_unit(p_success, "P");
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) throw std::invalid_argument("AmplifierSpec: F must lie in [1/2, 1]");
  AmplifierSpec a;
  a.type = Type::cba;
  a.label = std::move(label);
  a.p_success = p_success;
  a.fidelity = fidelity;
  return a;
}

AmplifierSpec AmplifierSpec::cba_hybrid(std::string label, const AxialDistribution& dist, double epsilon) {
  const HybridFigures fig = make_hybrid(dist, epsilon).figures();
  return cba(std::move(label), fig.p_success, fig.fidelity);
}

AmplifierSpec AmplifierSpec::heralded(std::string label, HeraldedAmplifierModel model) {
  AmplifierSpec a;
  a.type = Type::ha;
  a.label = std::move(label);
  a.ha = model;
  a.p_success = model.p_success;
  a.fidelity = 1.0;
  return a;
}

AmplifierReport evaluate(const AmplifierSpec& amp, const ChannelScenario& s) {
  AmplifierReport r;
  r.amplifier = amp.label;
  r.scenario = s;
  r.p_success = amp.p_success;
  r.fidelity = amp.fidelity;
  if (amp.type == AmplifierSpec::Type::cba) {
    r.gain_t = cba_transmission_gain(s.eta_b, amp.p_success);
    r.gain_nom = r.gain_t;
    r.heralded = false;
  } else {
    const HeraldedGains g = ha_transmission_gains(amp.ha, s);
    r.gain_t = g.g_t;
    r.gain_nom = g.g_t_prime;
    r.heralded = true;
  }
  r.snr_db = to_db(snr_of_fidelity(r.fidelity));
  r.capacity_before = capacity(s.eta());
  r.capacity_after = capacity(std::clamp(r.gain_t * s.eta() * (2.0 * r.fidelity - 1.0), 0.0, 1.0));
  return r;
}

std::vector<AmplifierReport> build_table(const std::vector<ChannelScenario>& scenarios,
                                         const std::vector<AmplifierSpec>& amplifiers) {
  std::vector<AmplifierReport> rows;
  rows.reserve(scenarios.size() * amplifiers.size());
  for (const AmplifierSpec& amp : amplifiers) {
    for (const ChannelScenario& s : scenarios) rows.push_back(evaluate(amp, s));
  }
  return rows;
}

void write_report_csv(std::ostream& out, const std::vector<AmplifierReport>& rows) {
  out << "amplifier,eta_a,eta_b,G,P,F,SNR_dB,C_before,C_after\n";
  for (const AmplifierReport& r : rows) {
    out << r.amplifier << ',' << num17(r.scenario.eta_a) << ',' << num17(r.scenario.eta_b) << ','
        << num17(r.comparison_gain()) << ',' << num17(r.p_success) << ',' << num17(r.fidelity) << ','
        << num17(r.snr_db) << ',' << num17(r.capacity_before) << ',' << num17(r.capacity_after) << '\n';
  }
}

const std::vector<ReferenceRow>& reference_cba_table() {
  static const std::vector<ReferenceRow> rows = {
      {"CBA_DQC", 0.01, 1.00, 1.00, 1.00, 0.83},         {"CBA_DQC", 0.50, 0.02, 1.98, 1.00, 0.83},
      {"CBA_DQC", 1.00, 0.01, 1.99, 1.00, 0.83},         {"CBA_LO(eps=0.5)", 0.01, 1.00, 0.62, 0.62, 0.77},
      {"CBA_LO(eps=0.5)", 0.50, 0.02, 1.23, 0.62, 0.77}, {"CBA_LO(eps=0.5)", 1.00, 0.01, 1.23, 0.62, 0.77},
  };
  return rows;
}

const std::vector<ReferenceRow>& reference_ha_table() {
  static const std::vector<ReferenceRow> rows = {
      {"CBA_LO(eps=0.5)", 0.01, 1.00, 0.62, 0.62, 0.77}, {"CBA_LO(eps=0.5)", 0.50, 0.02, 1.23, 0.62, 0.77},
      {"CBA_LO(eps=0.5)", 1.00, 0.01, 1.23, 0.62, 0.77}, {"HA", 0.01, 1.00, 1.58, 0.09, 1.00},
      {"HA", 0.50, 0.02, 1.23, 0.11, 1.00},              {"HA", 1.00, 0.01, 1.00, 0.14, 1.00},
  };
  return rows;
}

std::vector<ChannelScenario> reference_scenarios() { return {{0.01, 1.00}, {0.50, 0.02}, {1.00, 0.01}}; }

double reference_ha_gain_squared() { return ha_gain_squared_for(1.58, 0.01); }

}  // namespace cbamp
