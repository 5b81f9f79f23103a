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

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace cbamp {

using Complex = std::complex<double>;

/// Absolute entrywise tolerance for Hermiticity and trace checks.
inline constexpr double kStateTolerance = 1e-12;
/// Smallest eigenvalue accepted as "non-negative" after rounding.
inline constexpr double kPsdTolerance = 1e-10;

/// Polarization qubit cos(theta/2)|H> + e^{i phi} sin(theta/2)|V>.
///
/// The north pole (theta = 0) is |H>, the south pole is |V>. Basis order
/// everywhere in the library is (H, V).
class PureQubit {
 public:
  /// Throws std::invalid_argument unless theta is in [0, pi]. phi is
  /// wrapped into [0, 2 pi).
  PureQubit(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  Eigen::Vector2cd ket() const;

 private:
  double theta_;
  double phi_;
};

/// Unit-trace, Hermitian, positive semidefinite operator on one (dim 2) or
/// two (dim 4) qubits. Construction validates the invariants.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument when `m` is not a valid density matrix.
  explicit DensityMatrix(Eigen::MatrixXcd m);

  /// Projector onto a normalized (or normalizable) ket.
  static DensityMatrix from_ket(const Eigen::VectorXcd& ket);
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int row, int col) const { return m_(row, col); }

  /// Tr(rho^2).
  double purity() const;
  bool is_pure(double tol = 1e-10) const { return purity() > 1.0 - tol; }

 private:
  Eigen::MatrixXcd m_;
};

/// A photon-or-vacuum state. Vacuum is kept as a classical probability
/// rather than a third Hilbert-space dimension.
struct MixedWithVacuum {
  double p_vac;
  DensityMatrix qubit_part;
};

enum class Keep { first, second };

/// Checks the density-matrix invariants without constructing one.
bool is_valid_density(const Eigen::MatrixXcd& m);

DensityMatrix density_of(const PureQubit& q);

/// Tr(a b). Requires dim 2 and at least one pure argument, in which case
/// the overlap is the fidelity.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

/// (2F - 1) rho + (1 - F) * identity, the output of a symmetric cloner with
/// single-copy fidelity F.
DensityMatrix shrink(const DensityMatrix& rho, double fidelity);

/// Loss as a beam splitter with transmissivity eta: polarization untouched.
MixedWithVacuum attenuate(const DensityMatrix& rho, double eta);

DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Equal-weight mixture (a + b) / 2.
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight_b = 0.5);

/// Binary entropy in bits, with H(0) = H(1) = 0.
double binary_entropy(double x);

}  // namespace cbamp
