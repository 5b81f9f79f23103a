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

#include "cbamp/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cbamp {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
// Amplitudes with a smaller imaginary part are taken as real.
constexpr double kRealTolerance = 1e-12;
// Coincidence probability below this is reported as degenerate.
constexpr double kDegenerate = 1e-300;

Eigen::Vector4cd coincidence_vector(const TwoPhotonAmplitudeState& st) {
  Eigen::Vector4cd psi;
  for (int p1 = 0; p1 < 2; ++p1) {
    for (int p2 = 0; p2 < 2; ++p2) {
      psi(2 * p1 + p2) = st.amplitude(mode_index(0, Polarization(p1)), mode_index(1, Polarization(p2)));
    }
  }
  return psi;
}

double real_amplitude(Complex a, const char* what) {
  if (std::abs(a.imag()) > kRealTolerance) {
    throw FilterInfeasible(std::string("derive_filters: ") + what + " amplitude is not real");
  }
  return a.real();
}

}  // namespace

TwoPhotonAmplitudeState::TwoPhotonAmplitudeState(const Eigen::Matrix4cd& coefficients)
    : s_((coefficients + coefficients.transpose()) / 2.0) {}

TwoPhotonAmplitudeState TwoPhotonAmplitudeState::product(const Eigen::Vector4cd& first,
                                                         const Eigen::Vector4cd& second) {
  return TwoPhotonAmplitudeState(Eigen::Matrix4cd(first * second.transpose()));
}

Complex TwoPhotonAmplitudeState::amplitude(int i, int j) const {
  if (i < 0 || i > 3 || j < 0 || j > 3) throw std::out_of_range("TwoPhotonAmplitudeState: mode index out of range");
  return i == j ? kSqrt2 * s_(i, i) : 2.0 * s_(i, j);
}

std::array<Complex, 10> TwoPhotonAmplitudeState::amplitudes() const {
  std::array<Complex, 10> out{};
  std::size_t k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) out[k++] = amplitude(i, j);
  }
  return out;
}

double TwoPhotonAmplitudeState::norm() const {
  double total = 0.0;
  for (const Complex& a : amplitudes()) total += std::norm(a);
  return total;
}

TwoPhotonAmplitudeState TwoPhotonAmplitudeState::transformed(const Eigen::Matrix4cd& u) const {
  TwoPhotonAmplitudeState out;
  out.s_ = u * s_ * u.transpose();
  return out;
}

PdbsSpec::PdbsSpec(double h, double v) : eta_h(h), eta_v(v) {
  if (!(h >= 0.0 && h <= 1.0) || !(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument("PdbsSpec: transmissivities must lie in [0, 1]");
  }
}

PdbsSpec PdbsSpec::ideal() {
  const double r3 = std::sqrt(3.0);
  return {(3.0 + r3) / 6.0, (3.0 - r3) / 6.0};
}

PdbsSpec PdbsSpec::experimental() { return {0.76, 0.18}; }

FilterSpec FilterSpec::both_ports(double t_h, double t_v) {
  FilterSpec f{t_h, t_v, t_h, t_v};
  f.validate();
  return f;
}

void FilterSpec::validate() const {
  for (double t : {t_h_out1, t_v_out1, t_h_out2, t_v_out2}) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("FilterSpec: factors must lie in [0, 1]");
  }
}

Eigen::Matrix4cd pdbs_matrix(const PdbsSpec& spec) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  for (Polarization pol : {Polarization::h, Polarization::v}) {
    const double eta = pol == Polarization::h ? spec.eta_h : spec.eta_v;
    const double t = std::sqrt(eta);
    const double r = std::sqrt(1.0 - eta);
    const double phase = pol == Polarization::v ? -1.0 : 1.0;
    const int in = mode_index(0, pol);
    const int anc = mode_index(1, pol);
    const int out1 = mode_index(0, pol);
    const int out2 = mode_index(1, pol);
    u(out1, in) = t;
    u(out2, in) = -r * phase;
    u(out1, anc) = r;
    u(out2, anc) = t * phase;
  }
  return u;
}

TwoPhotonAmplitudeState apply_pdbs(const TwoPhotonAmplitudeState& state, const PdbsSpec& spec) {
  return state.transformed(pdbs_matrix(spec));
}

TwoPhotonAmplitudeState apply_hwp_swap(const TwoPhotonAmplitudeState& state) {
  Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
  for (int port = 0; port < 2; ++port) {
    u(mode_index(port, Polarization::h), mode_index(port, Polarization::v)) = 1.0;
    u(mode_index(port, Polarization::v), mode_index(port, Polarization::h)) = 1.0;
  }
  return state.transformed(u);
}

TwoPhotonAmplitudeState apply_filters(const TwoPhotonAmplitudeState& state, const FilterSpec& f) {
  f.validate();
  const Eigen::Vector4cd d(f.t_h_out1, f.t_v_out1, f.t_h_out2, f.t_v_out2);
  return state.transformed(d.asDiagonal().toDenseMatrix());
}

Coincidence postselect_coincidence(const TwoPhotonAmplitudeState& state) {
  const Eigen::Vector4cd psi = coincidence_vector(state);
  Coincidence c;
  c.p_success = psi.squaredNorm();
  if (!(c.p_success > kDegenerate)) {
    c.degenerate = true;
    c.p_success = 0.0;
    return c;
  }
  c.rho12 = DensityMatrix(Eigen::MatrixXcd(psi * psi.adjoint() / c.p_success));
  return c;
}

double bunched_probability(const TwoPhotonAmplitudeState& state) {
  double total = 0.0;
  for (int port = 0; port < 2; ++port) {
    const int h = mode_index(port, Polarization::h);
    const int v = mode_index(port, Polarization::v);
    total += std::norm(state.amplitude(h, h)) + std::norm(state.amplitude(h, v)) + std::norm(state.amplitude(v, v));
  }
  return total;
}

TwoPhotonAmplitudeState prepare(const Eigen::Vector2cd& signal, Ancilla ancilla) {
  Eigen::Vector4cd in = Eigen::Vector4cd::Zero();
  in(mode_index(0, Polarization::h)) = signal(0);
  in(mode_index(0, Polarization::v)) = signal(1);
  Eigen::Vector4cd anc = Eigen::Vector4cd::Zero();
  anc(mode_index(1, ancilla == Ancilla::h ? Polarization::h : Polarization::v)) = 1.0;
  return TwoPhotonAmplitudeState::product(in, anc);
}

TwoPhotonAmplitudeState run_branch(const Eigen::Vector2cd& signal, Ancilla ancilla, const PdbsSpec& pdbs,
                                   const FilterSpec& filters) {
  TwoPhotonAmplitudeState st = prepare(signal, ancilla);
  if (ancilla == Ancilla::v) {
    st = apply_hwp_swap(apply_pdbs(apply_hwp_swap(st), pdbs));
  } else {
    st = apply_pdbs(st, pdbs);
  }
  return apply_filters(st, filters);
}

FilterSpec derive_filters(const ClonerDesign& design, Ancilla ancilla, const PdbsSpec& pdbs) {
  const bool h = ancilla == Ancilla::h;
  // Same-polarization output |HH> (|VV>) and the cross term psi+.
  const double alpha_same = h ? design.alpha_plus : design.alpha_minus;
  const double alpha_cross = h ? design.alpha_minus : design.alpha_plus;
  const double c = std::cos(alpha_same);
  const double s = std::sin(alpha_cross);

  if (c * c < 1e-12) {
    if (s * s < 1e-12) return FilterSpec{0.0, 0.0, 0.0, 0.0};
    throw FilterInfeasible("derive_filters: open branch with cos(alpha) = 0 cannot be realized");
  }
  const Polarization same = h ? Polarization::h : Polarization::v;
  const Polarization cross = h ? Polarization::v : Polarization::h;
  const Eigen::Vector2cd same_in = h ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
  const Eigen::Vector2cd cross_in = h ? Eigen::Vector2cd(0.0, 1.0) : Eigen::Vector2cd(1.0, 0.0);

  const TwoPhotonAmplitudeState a = run_branch(same_in, ancilla, pdbs, FilterSpec::identity());
  const TwoPhotonAmplitudeState b = run_branch(cross_in, ancilla, pdbs, FilterSpec::identity());
  const double a_same = real_amplitude(a.amplitude(mode_index(0, same), mode_index(1, same)), "same-polarization");
  const double a_psi = (real_amplitude(b.amplitude(mode_index(0, same), mode_index(1, cross)), "cross") +
                        real_amplitude(b.amplitude(mode_index(0, cross), mode_index(1, same)), "cross")) /
                       kSqrt2;
  if (!(a_same > 0.0)) throw FilterInfeasible("derive_filters: no same-polarization coincidence to filter");

  double ratio = 0.0;
  if (s * s >= 1e-24) {
    if (!(a_psi > 0.0)) throw FilterInfeasible("derive_filters: no cross-term coincidence to filter");
    ratio = (s / c) * (a_same / a_psi);
  }
  if (ratio > 1.0 + 1e-12) {
    throw FilterInfeasible("derive_filters: required amplitude factor " + std::to_string(ratio) + " exceeds 1");
  }
  ratio = std::min(ratio, 1.0);
  return h ? FilterSpec::both_ports(1.0, ratio) : FilterSpec::both_ports(ratio, 1.0);
}

OpticsResult simulate_cba(const ClonerDesign& design, const PureQubit& q, const PdbsSpec& pdbs,
                          const std::optional<FilterPair>& filters) {
  OpticsResult r;
  r.filters = filters ? *filters
                      : FilterPair{derive_filters(design, Ancilla::h, pdbs), derive_filters(design, Ancilla::v, pdbs)};
  const Eigen::Vector2cd ket = q.ket();
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (Ancilla anc : {Ancilla::h, Ancilla::v}) {
    const FilterSpec& f = anc == Ancilla::h ? r.filters.h_ancilla : r.filters.v_ancilla;
    const Eigen::Vector4cd psi = coincidence_vector(run_branch(ket, anc, pdbs, f));
    m += 0.5 * psi * psi.adjoint();
    r.p_unfiltered += 0.5 * coincidence_vector(run_branch(ket, anc, pdbs, FilterSpec::identity())).squaredNorm();
  }
  r.p_success = m.trace().real();
  if (!(r.p_success > kDegenerate)) {
    r.degenerate = true;
    r.p_success = 0.0;
    return r;
  }
  r.rho12 = DensityMatrix(Eigen::MatrixXcd(m / r.p_success));
  return r;
}

double clone_fidelity(const DensityMatrix& rho12, const PureQubit& q) {
  if (rho12.dim() != 4) throw std::invalid_argument("clone_fidelity: expected a two-qubit state");
  const DensityMatrix target = density_of(q);
  return 0.5 * (fidelity(target, partial_trace(rho12, Keep::first)) +
                fidelity(target, partial_trace(rho12, Keep::second)));
}

}  // namespace cbamp
