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

#include "cbamp/qubit.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cbamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_dim(const DensityMatrix& rho, int dim, const char* what) {
  if (rho.dim() != dim) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " + std::to_string(dim) +
                                ", got " + std::to_string(rho.dim()));
  }
}

}  // namespace

PureQubit::PureQubit(double theta, double phi) : theta_(theta), phi_(phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("PureQubit: theta must lie in [0, pi]");
  }
  if (!std::isfinite(phi)) {
    throw std::invalid_argument("PureQubit: phi must be finite");
  }
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) phi_ += kTwoPi;
  if (phi_ >= kTwoPi) phi_ = 0.0;
}

Eigen::Vector2cd PureQubit::ket() const {
  return {Complex(std::cos(theta_ / 2.0), 0.0), std::polar(std::sin(theta_ / 2.0), phi_)};
}

bool is_valid_density(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) return false;
  if (!m.allFinite()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > kStateTolerance) return false;
    }
  }
  if (std::abs(m.trace() - Complex(1.0, 0.0)) > kStateTolerance) return false;
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= -kPsdTolerance;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
  if (!is_valid_density(m_)) {
    throw std::invalid_argument("DensityMatrix: matrix is not a valid 2x2 or 4x4 density operator");
  }
}

DensityMatrix DensityMatrix::from_ket(const Eigen::VectorXcd& ket) {
  const double norm = ket.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("DensityMatrix::from_ket: zero vector");
  const Eigen::VectorXcd v = ket / norm;
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix density_of(const PureQubit& q) { return DensityMatrix::from_ket(q.ket()); }

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  require_dim(a, 2, "fidelity");
  require_dim(b, 2, "fidelity");
  if (!a.is_pure() && !b.is_pure()) {
    throw std::invalid_argument("fidelity: at least one argument must be a pure state");
  }
  return (a.matrix() * b.matrix()).trace().real();
}

DensityMatrix shrink(const DensityMatrix& rho, double fidelity) {
  require_dim(rho, 2, "shrink");
  if (!(fidelity >= 0.5 && fidelity <= 1.0)) {
    throw std::invalid_argument("shrink: fidelity must lie in [1/2, 1]");
  }
  return DensityMatrix((2.0 * fidelity - 1.0) * rho.matrix() +
                       (1.0 - fidelity) * Eigen::MatrixXcd::Identity(2, 2));
}

MixedWithVacuum attenuate(const DensityMatrix& rho, double eta) {
  require_dim(rho, 2, "attenuate");
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("attenuate: eta must lie in [0, 1]");
  }
  return {1.0 - eta, rho};
}

DensityMatrix partial_trace(const DensityMatrix& rho, Keep keep) {
  require_dim(rho, 4, "partial_trace");
  // Index = 2 * first + second.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        out(i, j) += keep == Keep::first ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
      }
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  require_dim(a, 2, "tensor");
  require_dim(b, 2, "tensor");
  Eigen::MatrixXcd out(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b.matrix();
  return DensityMatrix(std::move(out));
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, double weight_b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("mix: dimension mismatch");
  if (!(weight_b >= 0.0 && weight_b <= 1.0)) throw std::invalid_argument("mix: weight outside [0, 1]");
  return DensityMatrix((1.0 - weight_b) * a.matrix() + weight_b * b.matrix());
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("binary_entropy: argument outside [0, 1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

}  // namespace cbamp
