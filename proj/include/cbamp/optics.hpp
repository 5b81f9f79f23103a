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

#include <array>
#include <optional>
#include <stdexcept>

#include "cbamp/cloner.hpp"
#include "cbamp/qubit.hpp"

namespace cbamp {

enum class Polarization { h = 0, v = 1 };

/// Mode index port * 2 + polarization. Port 0 is the signal input (or
/// output 1), port 1 the ancilla input (or output 2).
constexpr int mode_index(int port, Polarization pol) { return 2 * port + static_cast<int>(pol); }

/// Two photons in four modes, stored as the symmetric coefficient matrix of
/// the creation-operator polynomial sum_ij S_ij a_i^dag a_j^dag |0>.
///
/// Fock amplitudes: |1_i 1_j> carries 2 S_ij, |2_i> carries sqrt(2) S_ii.
/// Losses (filters) are kept in the amplitudes, so norm() is the survival
/// probability.
class TwoPhotonAmplitudeState {
 public:
  TwoPhotonAmplitudeState() : s_(Eigen::Matrix4cd::Zero()) {}
  explicit TwoPhotonAmplitudeState(const Eigen::Matrix4cd& coefficients);

  /// One photon in each of two (possibly overlapping) single-photon modes
  /// given by their amplitude vectors over the four modes.
  static TwoPhotonAmplitudeState product(const Eigen::Vector4cd& first, const Eigen::Vector4cd& second);

  const Eigen::Matrix4cd& coefficients() const { return s_; }

  /// Fock amplitude of one photon in mode i and one in mode j (i == j means
  /// both in the same mode).
  Complex amplitude(int i, int j) const;

  /// The 10 occupation amplitudes in the order (0,0) (0,1) .. (0,3) (1,1) .. (3,3).
  std::array<Complex, 10> amplitudes() const;

  double norm() const;

  /// Applies creation-operator map a_i^dag -> sum_k u(k, i) a_k^dag.
  TwoPhotonAmplitudeState transformed(const Eigen::Matrix4cd& u) const;

 private:
  Eigen::Matrix4cd s_;
};

/// Polarization-dependent beam splitter, intensity transmissivities.
struct PdbsSpec {
  double eta_h;
  double eta_v;

  PdbsSpec(double eta_h, double eta_v);

  /// (3 + sqrt 3)/6, (3 - sqrt 3)/6: unfiltered phase-covariant map with P_A = 1/3.
  static PdbsSpec ideal();
  static PdbsSpec experimental();
};

/// Amplitude transmission factors of the output filters.
struct FilterSpec {
  double t_h_out1 = 1.0;
  double t_v_out1 = 1.0;
  double t_h_out2 = 1.0;
  double t_v_out2 = 1.0;

  static FilterSpec identity() { return {}; }
  /// Same factors in both output ports.
  static FilterSpec both_ports(double t_h, double t_v);
  void validate() const;
};

/// Net mode transformation of the interferometer, including the fixed pi
/// phase on the V component of output 2.
Eigen::Matrix4cd pdbs_matrix(const PdbsSpec& spec);

TwoPhotonAmplitudeState apply_pdbs(const TwoPhotonAmplitudeState& state, const PdbsSpec& spec);

/// Half-wave plate at 45 degrees on every mode (H <-> V).
TwoPhotonAmplitudeState apply_hwp_swap(const TwoPhotonAmplitudeState& state);

TwoPhotonAmplitudeState apply_filters(const TwoPhotonAmplitudeState& state, const FilterSpec& f);

struct Coincidence {
  /// Polarization state of (clone 1 in out1, clone 2 in out2); empty when
  /// nothing survives.
  std::optional<DensityMatrix> rho12;
  double p_success = 0.0;
  bool degenerate = false;
};

/// Keeps exactly one photon per output port.
Coincidence postselect_coincidence(const TwoPhotonAmplitudeState& state);

/// Probability of both photons leaving through the same port.
double bunched_probability(const TwoPhotonAmplitudeState& state);

enum class Ancilla { h, v };

/// Signal qubit in port 0, ancilla photon in port 1.
TwoPhotonAmplitudeState prepare(const Eigen::Vector2cd& signal, Ancilla ancilla);

/// One ancilla branch of the cloner: prepare, interfere and filter. The V
/// branch runs the interferometer between two H <-> V wave plates.
TwoPhotonAmplitudeState run_branch(const Eigen::Vector2cd& signal, Ancilla ancilla, const PdbsSpec& pdbs,
                                   const FilterSpec& filters);

class FilterInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filters of one ancilla branch obtained by ratioing the target amplitudes
/// of `design` against the unfiltered outputs. The polarization matching the
/// ancilla keeps factor 1; the other gets the ratio. Throws FilterInfeasible
/// when the ratio exceeds 1 or the branch cannot be realized by attenuation.
/// A closed branch gets all factors 0.
FilterSpec derive_filters(const ClonerDesign& design, Ancilla ancilla, const PdbsSpec& pdbs);

struct FilterPair {
  FilterSpec h_ancilla;
  FilterSpec v_ancilla;

  static FilterPair identity() { return {FilterSpec::identity(), FilterSpec::identity()}; }
};

struct OpticsResult {
  std::optional<DensityMatrix> rho12;
  double p_success = 0.0;
  /// Same input without filters.
  double p_unfiltered = 0.0;
  FilterPair filters;
  bool degenerate = false;
};

/// Full pipeline with the ancilla H or V with probability 1/2 each.
/// `filters` empty means derive_filters for both branches.
OpticsResult simulate_cba(const ClonerDesign& design, const PureQubit& q, const PdbsSpec& pdbs,
                          const std::optional<FilterPair>& filters = std::nullopt);

/// Mean single-clone fidelity of a two-clone state with respect to q.
double clone_fidelity(const DensityMatrix& rho12, const PureQubit& q);

}  // namespace cbamp
