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

#include "cbamp/cloner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cbamp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
// Below this |a1| the distribution is treated as mirror symmetric.
constexpr double kMirrorTolerance = 1e-12;
// cos^2(alpha) below this is a closed branch of the stochastic cloner.
constexpr double kClosedBranch = 1e-12;

double sq(double v) { return v * v; }

// Weight 1 / (6 cos^2 alpha) of one ancilla branch. A branch with
// cos(alpha) = 0 is only admissible when the cross amplitude sin(other)
// vanishes too, and is then switched off.
double branch_weight(double alpha_same, double alpha_cross) {
  const double c2 = sq(std::cos(alpha_same));
  if (c2 > kClosedBranch) return 1.0 / (6.0 * c2);
  if (sq(std::sin(alpha_cross)) < kClosedBranch) return 0.0;
  throw std::invalid_argument("cloner design violates the optimality constraint (open branch with cos(alpha) = 0)");
}

// Unnormalized branch kets (basis HH, HV, VH, VV).
Eigen::Vector4cd h_branch(const ClonerDesign& d, Complex c, Complex s) {
  const Complex psi = s * std::sin(d.alpha_minus) / kSqrt2;
  return {c * std::cos(d.alpha_plus), psi, psi, 0.0};
}

Eigen::Vector4cd v_branch(const ClonerDesign& d, Complex c, Complex s) {
  const Complex psi = c * std::sin(d.alpha_plus) / kSqrt2;
  return {0.0, psi, psi, s * std::cos(d.alpha_minus)};
}

ClonerDesign finish(ClonerDesign d, const MomentSet& m) {
  d.f_quantum = fidelity_quantum(d, m);
  d.p_mean = p_success_mean(d, m);
  return d;
}

}  // namespace

const char* to_string(ClonerBranch branch) {
  switch (branch) {
    case ClonerBranch::interior: return "interior";
    case ClonerBranch::degenerate_pc_a: return "degenerate-pc-A";
    case ClonerBranch::degenerate_pc_b: return "degenerate-pc-B";
  }
  return "?";
}

ClonerDesign make_design(double alpha_plus, double alpha_minus, const MomentSet& m) {
  if (!(alpha_plus >= 0.0 && alpha_plus <= kPi / 2) || !(alpha_minus >= 0.0 && alpha_minus <= kPi / 2)) {
    throw std::invalid_argument("make_design: angles must lie in [0, pi/2]");
  }
  ClonerDesign d;
  d.alpha_plus = alpha_plus;
  d.alpha_minus = alpha_minus;
  return finish(d, m);
}

ClonerDesign design_cloner(const MomentSet& m) {
  const double a1 = m.a1;
  const double a2 = m.a2;
  ClonerDesign d;

  if (std::abs(a1) < kMirrorTolerance) {
    // x+ x- = (1 + 2 a2)^2 here; cancelling it removes the 0/0 of the
    // equatorial distribution (a2 = -1/2).
    d.gamma = 0.0;
    d.omega_design = std::min(1.0, 2.0 * kSqrt2 * (1.0 - a2) / std::sqrt(3.0 * (3.0 + 4.0 * a2 * a2 - 4.0 * a2)));
    d.alpha_plus = d.alpha_minus = 0.5 * std::asin(d.omega_design);
    return finish(d, m);
  }

  const double x_plus = 1.0 + 2.0 * a2 + 3.0 * a1;
  const double x_minus = 1.0 + 2.0 * a2 - 3.0 * a1;
  const double x_prod = x_plus * x_minus;
  const double numerator = 6.0 * kSqrt2 * a1 * (a2 - 1.0);
  d.gamma = x_prod != 0.0 ? numerator / x_prod : std::copysign(std::numeric_limits<double>::infinity(), numerator);

  if (std::abs(d.gamma) < 1.0) {
    const double radicand = 3.0 * x_prod * (3.0 + 4.0 * a2 * a2 - 3.0 * a1 * a1 - 4.0 * a2);
    if (radicand > 0.0) {
      d.omega_design = std::clamp(2.0 * kSqrt2 * (1.0 + 2.0 * a2) * (1.0 - a2) / std::sqrt(radicand), -1.0, 1.0);
      const double base = std::asin(d.omega_design);
      const double tilt = std::asin(d.gamma);
      d.alpha_plus = std::clamp(0.5 * (base + tilt), 0.0, kPi / 2);
      d.alpha_minus = std::clamp(0.5 * (base - tilt), 0.0, kPi / 2);
      d.branch = ClonerBranch::interior;
      return finish(d, m);
    }
  }

  // Phase-covariant limit: one branch fully open, the other closed.
  ClonerDesign a = d;
  a.alpha_plus = 0.0;
  a.alpha_minus = kPi / 2;
  a.branch = ClonerBranch::degenerate_pc_a;
  a = finish(a, m);
  ClonerDesign b = d;
  b.alpha_plus = kPi / 2;
  b.alpha_minus = 0.0;
  b.branch = ClonerBranch::degenerate_pc_b;
  b = finish(b, m);
  return b.f_quantum > a.f_quantum ? b : a;
}

double p_success_theta(const ClonerDesign& d, double theta) {
  const double c2 = sq(std::cos(theta / 2.0));
  const double s2 = sq(std::sin(theta / 2.0));
  const double w_h = branch_weight(d.alpha_plus, d.alpha_minus);
  const double w_v = branch_weight(d.alpha_minus, d.alpha_plus);
  const double h = w_h > 0.0 ? w_h * (c2 * sq(std::cos(d.alpha_plus)) + s2 * sq(std::sin(d.alpha_minus))) : 0.0;
  const double v = w_v > 0.0 ? w_v * (s2 * sq(std::cos(d.alpha_minus)) + c2 * sq(std::sin(d.alpha_plus))) : 0.0;
  return h + v;
}

double p_success_mean(const ClonerDesign& d, const AxialDistribution& dist) {
  return expectation(dist, [&d](double theta) { return p_success_theta(d, theta); });
}

double p_success_mean(const ClonerDesign& d, const MomentSet& m) {
  // <cos^2(theta/2)> = (1 + a1) / 2.
  const double c2 = (1.0 + m.a1) / 2.0;
  const double s2 = (1.0 - m.a1) / 2.0;
  const double w_h = branch_weight(d.alpha_plus, d.alpha_minus);
  const double w_v = branch_weight(d.alpha_minus, d.alpha_plus);
  const double h = w_h > 0.0 ? w_h * (c2 * sq(std::cos(d.alpha_plus)) + s2 * sq(std::sin(d.alpha_minus))) : 0.0;
  const double v = w_v > 0.0 ? w_v * (s2 * sq(std::cos(d.alpha_minus)) + c2 * sq(std::sin(d.alpha_plus))) : 0.0;
  return h + v;
}

double fidelity_quantum(const ClonerDesign& d, const MomentSet& m) {
  const double ap = d.alpha_plus;
  const double am = d.alpha_minus;
  return (2.0 * (3.0 + std::cos(2.0 * ap)) * m.mean_cos4_half + 2.0 * (3.0 + std::cos(2.0 * am)) * m.mean_sin4_half +
          (sq(std::sin(ap)) + sq(std::sin(am)) + 2.0 * kSqrt2 * std::sin(ap + am)) * m.mean_sin2) /
         8.0;
}

HybridFigures hybrid(double p_quantum, double f_quantum, const MomentSet& m, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("hybrid: epsilon must lie in [0, 1]");
  if (!(p_quantum >= 0.0 && p_quantum <= 1.0)) throw std::invalid_argument("hybrid: p_quantum must lie in [0, 1]");
  const double p = epsilon + (1.0 - epsilon) * p_quantum;
  const double share = p > 0.0 ? epsilon / p : 0.0;
  const double f = (1.0 - share) * f_quantum + (share / 4.0) * (3.0 + m.a1 * m.a1);
  return {p, f, share};
}

HybridFigures HybridAmplifier::figures() const { return hybrid(design.p_mean, design.f_quantum, distribution, epsilon); }

HybridAmplifier make_hybrid(const AxialDistribution& dist, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw std::invalid_argument("make_hybrid: epsilon must lie in [0, 1]");
  const MomentSet m = moments(dist);
  ClonerDesign design = design_cloner(m);
  design.p_mean = p_success_mean(design, dist);
  return {design, epsilon, central_state(m), m};
}

DensityMatrix classical_clone(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != 2 || sigma.dim() != 2) throw std::invalid_argument("classical_clone: both states must be qubits");
  return mix(rho, sigma, 0.5);
}

CloneOutput clone_state(const ClonerDesign& d, const PureQubit& q) {
  const Eigen::Vector2cd ket = q.ket();
  const double w_h = branch_weight(d.alpha_plus, d.alpha_minus);
  const double w_v = branch_weight(d.alpha_minus, d.alpha_plus);
  const Eigen::Vector4cd a = h_branch(d, ket(0), ket(1));
  const Eigen::Vector4cd b = v_branch(d, ket(0), ket(1));
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  if (w_h > 0.0) m += w_h * a * a.adjoint();
  if (w_v > 0.0) m += w_v * b * b.adjoint();
  const double p = m.trace().real();
  if (!(p > 0.0)) throw std::runtime_error("clone_state: cloner never succeeds for this input");
  return {DensityMatrix(Eigen::MatrixXcd(m / p)), p};
}

DensityMatrix clone_state_unitary(const ClonerDesign& d, const PureQubit& q) {
  const Eigen::Vector2cd ket = q.ket();
  const Eigen::Vector4cd a = h_branch(d, ket(0), ket(1));
  const Eigen::Vector4cd b = v_branch(d, ket(0), ket(1));
  Eigen::Matrix4cd m = a * a.adjoint() + b * b.adjoint();
  return DensityMatrix(Eigen::MatrixXcd(m / m.trace().real()));
}

bool satisfies_optimality(const ClonerDesign& d, double tol) {
  return sq(std::cos(d.alpha_minus)) >= sq(std::sin(d.alpha_plus)) - tol &&
         sq(std::cos(d.alpha_plus)) >= sq(std::sin(d.alpha_minus)) - tol;
}

}  // namespace cbamp
