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

#include "cbamp/axial.hpp"
#include "cbamp/qubit.hpp"

namespace cbamp {

enum class ClonerBranch {
  interior,
  /// alpha_plus = 0, alpha_minus = pi/2.
  degenerate_pc_a,
  /// alpha_plus = pi/2, alpha_minus = 0.
  degenerate_pc_b,
};

const char* to_string(ClonerBranch branch);

/// Optimal 1 -> 2 cloner for an axially symmetric input distribution.
///
/// alpha_plus / alpha_minus weight the H- and V-signal branches of the
/// cloning map
///   |H>|H_anc> -> cos(a+) |HH>,    |V>|H_anc> -> sin(a-) |psi+>,
///   |H>|V_anc> -> sin(a+) |psi+>,  |V>|V_anc> -> cos(a-) |VV>.
struct ClonerDesign {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  /// Single parameter that selects the branch; |gamma| >= 1 is degenerate.
  double gamma = 0.0;
  /// Argument of the arcsine in the interior solution (not alpha+ + alpha-).
  double omega_design = 0.0;
  ClonerBranch branch = ClonerBranch::interior;
  double f_quantum = 0.0;
  /// Success probability averaged over the design distribution.
  double p_mean = 0.0;
};

/// Fixed-angle design, e.g. for sweeping alpha directly. gamma and
/// omega_design are left at zero; f_quantum and p_mean are evaluated for `m`.
ClonerDesign make_design(double alpha_plus, double alpha_minus, const MomentSet& m);

ClonerDesign design_cloner(const MomentSet& m);

/// Conditional success probability of the linear-optics cloner for a qubit
/// at polar angle theta (independent of phi).
double p_success_theta(const ClonerDesign& d, double theta);

/// P_A(theta) averaged over `dist` by quadrature (point masses summed).
double p_success_mean(const ClonerDesign& d, const AxialDistribution& dist);

/// P_A(theta) is affine in cos(theta), so its average only needs <cos theta>.
double p_success_mean(const ClonerDesign& d, const MomentSet& m);

/// Distribution-averaged single-clone fidelity of the quantum cloner.
double fidelity_quantum(const ClonerDesign& d, const MomentSet& m);

struct HybridFigures {
  double p_success;
  double fidelity;
  /// Fraction of successful events produced by the classical strategy.
  double classical_share;
};

/// Quantum cloning with probability 1 - epsilon, swap with the central
/// state otherwise.
HybridFigures hybrid(double p_quantum, double f_quantum, const MomentSet& m, double epsilon);

struct HybridAmplifier {
  ClonerDesign design;
  double epsilon;
  DensityMatrix sigma;
  MomentSet distribution;

  HybridFigures figures() const;
};

/// Designs the cloner for `dist` and pairs it with its central state.
HybridAmplifier make_hybrid(const AxialDistribution& dist, double epsilon);

/// Per-copy state of the random-swap strategy: (sigma + rho) / 2.
DensityMatrix classical_clone(const DensityMatrix& rho, const DensityMatrix& sigma);

struct CloneOutput {
  /// Normalized post-selected two-clone state, basis |clone1 clone2> in
  /// order HH, HV, VH, VV.
  DensityMatrix rho12;
  double p_theta;
};

/// Post-selected output of the stochastic two-photon implementation: the
/// ancilla is H or V with probability 1/2, each branch is scaled by the
/// maximal filter transmission, branches are summed incoherently.
CloneOutput clone_state(const ClonerDesign& d, const PureQubit& q);

/// Two-clone state of the deterministic three-photon unitary (ancilla mode
/// traced out). Its distribution-averaged fidelity is exactly f_quantum.
DensityMatrix clone_state_unitary(const ClonerDesign& d, const PureQubit& q);

/// True when cos^2(a-+) >= sin^2(a+-) - tol for both pairings.
bool satisfies_optimality(const ClonerDesign& d, double tol = 1e-9);

}  // namespace cbamp
