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
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cbamp/qubit.hpp"

namespace cbamp {

enum class DistributionKind {
  uniform,
  equatorial_delta,
  polar_delta,
  mirror_polar,
  delta,
  fisher,
  henyey_greenstein,
  brosseau,
  tabulated,
};

enum class Pole { north, south };

/// Probability mass at polar angle theta. x caches cos(theta) and is set
/// exactly (0, +1, -1) for the named kinds.
struct PointMass {
  double theta;
  double x;
  double weight;
};

/// Axially symmetric distribution of qubits on the Poincare sphere.
///
/// Continuous kinds are described by their density f(x) in x = cos(theta),
/// normalized so that the integral over [-1, 1] is one; this equals 2 pi g(theta)
/// for the solid-angle density g. Discrete kinds are a list of point masses.
class AxialDistribution {
 public:
  static AxialDistribution uniform();
  static AxialDistribution equatorial();
  static AxialDistribution polar(Pole pole);
  /// Half of the mass on each pole.
  static AxialDistribution mirror_polar();
  static AxialDistribution delta(double theta0);
  /// Density proportional to exp(kappa cos theta).
  static AxialDistribution fisher(double kappa);
  /// Density proportional to (1 - g^2) / (1 + g^2 - 2 g cos theta)^{3/2}, |g| < 1.
  static AxialDistribution henyey_greenstein(double g);
  /// Unnormalized solid-angle density sampled on an increasing theta grid
  /// covering a subset of [0, pi]. Linear interpolation in theta between nodes;
  /// zero outside the grid.
  static AxialDistribution tabulated(std::vector<double> theta, std::vector<double> density);
  /// Same representation as tabulated(); kept as its own kind so reports can
  /// label it.
  static AxialDistribution brosseau(std::vector<double> theta, std::vector<double> density);
  /// Two-column text: theta (radians) and unnormalized density; '#' comments.
  static AxialDistribution parse_tabulated(std::istream& in, DistributionKind kind = DistributionKind::tabulated);
  static AxialDistribution load_tabulated(const std::filesystem::path& path,
                                          DistributionKind kind = DistributionKind::tabulated);

  DistributionKind kind() const { return kind_; }
  /// Short label, e.g. "fisher(kappa=2)".
  std::string describe() const;
  double parameter() const { return parameter_; }

  bool is_discrete() const { return !atoms_.empty(); }
  std::span<const PointMass> atoms() const { return atoms_; }

  /// Density in x = cos(theta). Zero for discrete kinds.
  double density_cos(double x) const;

  const std::vector<double>& table_theta() const { return theta_; }
  const std::vector<double>& table_density() const { return density_; }

 private:
  AxialDistribution(DistributionKind kind, double parameter) : kind_(kind), parameter_(parameter) {}
  static AxialDistribution from_table(DistributionKind kind, std::vector<double> theta,
                                      std::vector<double> density);
  double table_value(double theta) const;

  DistributionKind kind_;
  double parameter_ = 0.0;
  std::vector<PointMass> atoms_;
  // Tabulated kinds only; density_ is normalized so that
  // 2 pi * integral of density(theta) sin(theta) dtheta equals one.
  std::vector<double> theta_;
  std::vector<double> density_;
};

/// Trigonometric moments of a distribution. Only a1 and a2 are independent.
struct MomentSet {
  double a1 = 0.0;
  double a2 = 0.0;
  double mean_cos2 = 1.0 / 3.0;
  double mean_cos4_half = 1.0 / 3.0;
  double mean_sin4_half = 1.0 / 3.0;
  double mean_sin2 = 2.0 / 3.0;

  static MomentSet from_legendre(double a1, double a2);
  /// From <cos theta> and <cos^2 theta>.
  static MomentSet from_cos_moments(double mean_cos, double mean_cos2);
};

/// Average of f(theta) over the distribution: point masses are summed,
/// continuous kinds use adaptive Gauss-Kronrod quadrature.
double expectation(const AxialDistribution& d, const std::function<double(double)>& f_of_theta);

/// Adaptive Gauss-Kronrod integral of P_n(cos theta) against the density.
/// Sums point masses exactly.
double legendre_coefficient_quadrature(const AxialDistribution& d, int n);

/// a_n, using a closed form where one exists and quadrature otherwise.
/// Requires 0 <= n <= 16.
double legendre_coefficient(const AxialDistribution& d, int n);

MomentSet moments(const AxialDistribution& d);

/// Mean state (identity + <cos theta> sigma_z) / 2.
DensityMatrix central_state(const MomentSet& m);
DensityMatrix central_state(const AxialDistribution& d);

/// Draws polar angles from a distribution. Continuous kinds use an
/// inverse-CDF table on 4096 theta nodes; point masses are drawn exactly.
class ThetaSampler {
 public:
  static constexpr int kTableSize = 4096;

  explicit ThetaSampler(const AxialDistribution& d);

  template <class Rng>
  double operator()(Rng& rng) const {
    return draw(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  }

  /// Maps u in [0, 1) to a polar angle.
  double draw(double u) const;

 private:
  std::vector<PointMass> atoms_;
  std::vector<double> cdf_;
  std::vector<double> theta_;
};

/// `count` i.i.d. qubits with phi uniform in [0, 2 pi). Deterministic per seed.
std::vector<PureQubit> sample(const AxialDistribution& d, std::uint64_t rng_seed, std::size_t count);

}  // namespace cbamp
