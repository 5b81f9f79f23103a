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

#include "cbamp/axial.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace cbamp {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxOrder = 16;
constexpr double kQuadTolerance = 1e-12;
constexpr unsigned kQuadDepth = 20;

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, kQuadDepth, kQuadTolerance);
}

// Fixed rule for one table segment; the density is linear there.
template <class F>
double integrate_segment(F f, double a, double b) {
  return boost::math::quadrature::gauss<double, 30>::integrate(f, a, b);
}

double legendre_p(int n, double x) { return std::legendre(static_cast<unsigned>(n), x); }

// Fisher density in x, stable for large |kappa|.
double fisher_density(double kappa, double x) {
  if (std::abs(kappa) < 1e-8) return 0.5;
  const double s = std::abs(kappa);
  const double y = kappa > 0 ? x : -x;
  return s * std::exp(s * (y - 1.0)) / (-std::expm1(-2.0 * s));
}

double hg_density(double g, double x) {
  const double base = 1.0 + g * g - 2.0 * g * x;
  return 0.5 * (1.0 - g * g) / (base * std::sqrt(base));
}

const char* kind_name(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::equatorial_delta: return "equatorial";
    case DistributionKind::polar_delta: return "polar";
    case DistributionKind::mirror_polar: return "mirror-polar";
    case DistributionKind::delta: return "delta";
    case DistributionKind::fisher: return "fisher";
    case DistributionKind::henyey_greenstein: return "henyey-greenstein";
    case DistributionKind::brosseau: return "brosseau";
    case DistributionKind::tabulated: return "tabulated";
  }
  return "?";
}

bool is_table_kind(DistributionKind kind) {
  return kind == DistributionKind::tabulated || kind == DistributionKind::brosseau;
}

}  // namespace

AxialDistribution AxialDistribution::uniform() { return {DistributionKind::uniform, 0.0}; }

AxialDistribution AxialDistribution::equatorial() {
  AxialDistribution d(DistributionKind::equatorial_delta, 0.0);
  d.atoms_ = {{kPi / 2.0, 0.0, 1.0}};
  return d;
}

AxialDistribution AxialDistribution::polar(Pole pole) {
  AxialDistribution d(DistributionKind::polar_delta, pole == Pole::north ? 0.0 : kPi);
  d.atoms_ = {pole == Pole::north ? PointMass{0.0, 1.0, 1.0} : PointMass{kPi, -1.0, 1.0}};
  return d;
}

AxialDistribution AxialDistribution::mirror_polar() {
  AxialDistribution d(DistributionKind::mirror_polar, 0.0);
  d.atoms_ = {{0.0, 1.0, 0.5}, {kPi, -1.0, 0.5}};
  return d;
}

AxialDistribution AxialDistribution::delta(double theta0) {
  if (!(theta0 >= 0.0 && theta0 <= kPi)) throw std::invalid_argument("delta: theta0 must lie in [0, pi]");
  AxialDistribution d(DistributionKind::delta, theta0);
  d.atoms_ = {{theta0, std::cos(theta0), 1.0}};
  return d;
}

AxialDistribution AxialDistribution::fisher(double kappa) {
  if (!std::isfinite(kappa)) throw std::invalid_argument("fisher: kappa must be finite");
  return {DistributionKind::fisher, kappa};
}

AxialDistribution AxialDistribution::henyey_greenstein(double g) {
  if (!(std::abs(g) < 1.0)) throw std::invalid_argument("henyey-greenstein: |g| must be < 1");
  return {DistributionKind::henyey_greenstein, g};
}

AxialDistribution AxialDistribution::tabulated(std::vector<double> theta, std::vector<double> density) {
  return from_table(DistributionKind::tabulated, std::move(theta), std::move(density));
}

AxialDistribution AxialDistribution::brosseau(std::vector<double> theta, std::vector<double> density) {
  return from_table(DistributionKind::brosseau, std::move(theta), std::move(density));
}

AxialDistribution AxialDistribution::from_table(DistributionKind kind, std::vector<double> theta,
                                                std::vector<double> density) {
  if (theta.size() != density.size()) throw std::invalid_argument("tabulated: column length mismatch");
  if (theta.size() < 2) throw std::invalid_argument("tabulated: need at least two nodes");
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(theta[i] >= 0.0 && theta[i] <= kPi)) throw std::invalid_argument("tabulated: theta outside [0, pi]");
    if (!(density[i] >= 0.0) || !std::isfinite(density[i])) {
      throw std::invalid_argument("tabulated: density must be finite and non-negative");
    }
    if (i > 0 && !(theta[i] > theta[i - 1])) throw std::invalid_argument("tabulated: theta must increase strictly");
  }
  AxialDistribution d(kind, 0.0);
  d.theta_ = std::move(theta);
  d.density_ = std::move(density);
  double mass = 0.0;
  for (std::size_t i = 0; i + 1 < d.theta_.size(); ++i) {
    mass += integrate_segment([&](double t) { return d.table_value(t) * std::sin(t); }, d.theta_[i], d.theta_[i + 1]);
  }
  mass *= 2.0 * kPi;
  if (!(mass > 0.0)) throw std::invalid_argument("tabulated: density is not normalizable");
  for (double& v : d.density_) v /= mass;
  return d;
}

AxialDistribution AxialDistribution::parse_tabulated(std::istream& in, DistributionKind kind) {
  if (!is_table_kind(kind)) throw std::invalid_argument("parse_tabulated: kind must be tabulated or brosseau");
  std::vector<double> theta;
  std::vector<double> density;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double t = 0.0;
    double g = 0.0;
    std::string extra;
    if (!(fields >> t >> g) || (fields >> extra)) {
      throw std::runtime_error("tabulated distribution, line " + std::to_string(line_no) +
                               ": expected two numeric columns");
    }
    theta.push_back(t);
    density.push_back(g);
  }
  return from_table(kind, std::move(theta), std::move(density));
}

AxialDistribution AxialDistribution::load_tabulated(const std::filesystem::path& path, DistributionKind kind) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open distribution file " + path.string());
  return parse_tabulated(in, kind);
}

std::string AxialDistribution::describe() const {
  std::ostringstream out;
  out << kind_name(kind_);
  switch (kind_) {
    case DistributionKind::polar_delta: out << (parameter_ == 0.0 ? "(north)" : "(south)"); break;
    case DistributionKind::delta: out << "(theta0=" << parameter_ << ")"; break;
    case DistributionKind::fisher: out << "(kappa=" << parameter_ << ")"; break;
    case DistributionKind::henyey_greenstein: out << "(g=" << parameter_ << ")"; break;
    case DistributionKind::tabulated:
    case DistributionKind::brosseau: out << "(" << theta_.size() << " nodes)"; break;
    default: break;
  }
  return out.str();
}

double AxialDistribution::table_value(double theta) const {
  if (theta < theta_.front() || theta > theta_.back()) return 0.0;
  const auto it = std::upper_bound(theta_.begin(), theta_.end(), theta);
  if (it == theta_.end()) return density_.back();
  const std::size_t hi = static_cast<std::size_t>(it - theta_.begin());
  const std::size_t lo = hi - 1;
  const double w = (theta - theta_[lo]) / (theta_[hi] - theta_[lo]);
  return (1.0 - w) * density_[lo] + w * density_[hi];
}

double AxialDistribution::density_cos(double x) const {
  switch (kind_) {
    case DistributionKind::uniform: return 0.5;
    case DistributionKind::fisher: return fisher_density(parameter_, x);
    case DistributionKind::henyey_greenstein: return hg_density(parameter_, x);
    case DistributionKind::tabulated:
    case DistributionKind::brosseau: return 2.0 * kPi * table_value(std::acos(std::clamp(x, -1.0, 1.0)));
    default: return 0.0;
  }
}

MomentSet MomentSet::from_legendre(double a1, double a2) {
  MomentSet m;
  m.a1 = a1;
  m.a2 = a2;
  m.mean_cos2 = (2.0 * a2 + 1.0) / 3.0;
  m.mean_cos4_half = (1.0 + 2.0 * a1 + m.mean_cos2) / 4.0;
  m.mean_sin4_half = (1.0 - 2.0 * a1 + m.mean_cos2) / 4.0;
  m.mean_sin2 = 1.0 - m.mean_cos2;
  return m;
}

MomentSet MomentSet::from_cos_moments(double mean_cos, double mean_cos2) {
  if (!(std::abs(mean_cos) <= 1.0) || !(mean_cos2 <= 1.0) || mean_cos2 < mean_cos * mean_cos - 1e-12) {
    throw std::invalid_argument("MomentSet: moments outside the admissible region <cos>^2 <= <cos^2> <= 1");
  }
  return from_legendre(mean_cos, (3.0 * mean_cos2 - 1.0) / 2.0);
}

double expectation(const AxialDistribution& d, const std::function<double(double)>& f_of_theta) {
  if (d.is_discrete()) {
    double sum = 0.0;
    for (const PointMass& atom : d.atoms()) sum += atom.weight * f_of_theta(atom.theta);
    return sum;
  }
  double value = 0.0;
  if (is_table_kind(d.kind())) {
    const auto& t = d.table_theta();
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      value += integrate_segment(
          [&](double th) { return d.density_cos(std::cos(th)) * f_of_theta(th) * std::sin(th); }, t[i], t[i + 1]);
    }
  } else {
    value = integrate([&](double x) { return d.density_cos(x) * f_of_theta(std::acos(x)); }, -1.0, 1.0);
  }
  if (!std::isfinite(value)) throw std::runtime_error("expectation: quadrature failed");
  return value;
}

double legendre_coefficient_quadrature(const AxialDistribution& d, int n) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("legendre_coefficient: order must be in [0, 16]");
  if (d.is_discrete()) {
    double sum = 0.0;
    for (const PointMass& atom : d.atoms()) sum += atom.weight * legendre_p(n, atom.x);
    return sum;
  }
  if (is_table_kind(d.kind())) {
    return expectation(d, [n](double th) { return legendre_p(n, std::cos(th)); });
  }
  const double value = integrate([&](double x) { return d.density_cos(x) * legendre_p(n, x); }, -1.0, 1.0);
  if (!std::isfinite(value)) throw std::runtime_error("legendre_coefficient: quadrature failed");
  return value;
}

double legendre_coefficient(const AxialDistribution& d, int n) {
  if (n < 0 || n > kMaxOrder) throw std::invalid_argument("legendre_coefficient: order must be in [0, 16]");
  switch (d.kind()) {
    case DistributionKind::uniform: return n == 0 ? 1.0 : 0.0;
    case DistributionKind::henyey_greenstein: return std::pow(d.parameter(), n);
    case DistributionKind::fisher: {
      const double kappa = d.parameter();
      if (std::abs(kappa) < 1e-8) return n == 0 ? 1.0 : 0.0;
      const double s = std::abs(kappa);
      if (s < 500.0) {
        // a_n = I_{n+1/2}(kappa) / I_{1/2}(kappa) (modified spherical Bessel ratio).
        const double ratio = std::cyl_bessel_i(n + 0.5, s) / std::cyl_bessel_i(0.5, s);
        if (std::isfinite(ratio)) return (kappa < 0 && n % 2 == 1) ? -ratio : ratio;
      }
      return legendre_coefficient_quadrature(d, n);
    }
    default: return legendre_coefficient_quadrature(d, n);
  }
}

MomentSet moments(const AxialDistribution& d) {
  return MomentSet::from_legendre(legendre_coefficient(d, 1), legendre_coefficient(d, 2));
}

DensityMatrix central_state(const MomentSet& m) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(2, 2);
  s(0, 0) = (1.0 + m.a1) / 2.0;
  s(1, 1) = (1.0 - m.a1) / 2.0;
  return DensityMatrix(std::move(s));
}

DensityMatrix central_state(const AxialDistribution& d) { return central_state(moments(d)); }

ThetaSampler::ThetaSampler(const AxialDistribution& d) {
  if (d.is_discrete()) {
    atoms_.assign(d.atoms().begin(), d.atoms().end());
    double acc = 0.0;
    for (const PointMass& atom : atoms_) {
      acc += atom.weight;
      cdf_.push_back(acc);
    }
    for (double& c : cdf_) c /= acc;
    return;
  }
  double lo = 0.0;
  double hi = kPi;
  if (!d.table_theta().empty()) {
    lo = d.table_theta().front();
    hi = d.table_theta().back();
  }
  theta_.resize(kTableSize);
  cdf_.assign(kTableSize, 0.0);
  const double step = (hi - lo) / (kTableSize - 1);
  for (int i = 0; i < kTableSize; ++i) theta_[i] = lo + step * i;
  theta_.back() = hi;
  auto mass = [&](double t) { return d.density_cos(std::cos(t)) * std::sin(t); };
  for (int i = 1; i < kTableSize; ++i) {
    cdf_[i] = cdf_[i - 1] + boost::math::quadrature::gauss<double, 10>::integrate(mass, theta_[i - 1], theta_[i]);
  }
  const double total = cdf_.back();
  if (!(total > 0.0)) throw std::runtime_error("ThetaSampler: distribution has no mass");
  for (double& c : cdf_) c /= total;
}

double ThetaSampler::draw(double u) const {
  if (!atoms_.empty()) {
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf_.begin()), atoms_.size() - 1);
    return atoms_[idx].theta;
  }
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.begin()) return theta_.front();
  if (it == cdf_.end()) return theta_.back();
  const std::size_t hi = static_cast<std::size_t>(it - cdf_.begin());
  const std::size_t lo = hi - 1;
  const double span = cdf_[hi] - cdf_[lo];
  const double w = span > 0.0 ? (u - cdf_[lo]) / span : 0.0;
  return theta_[lo] + w * (theta_[hi] - theta_[lo]);
}

std::vector<PureQubit> sample(const AxialDistribution& d, std::uint64_t rng_seed, std::size_t count) {
  if (count < 1) throw std::invalid_argument("sample: count must be at least 1");
  const ThetaSampler sampler(d);
  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PureQubit> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double theta = sampler.draw(unit(rng));
    const double phi = 2.0 * kPi * unit(rng);
    out.emplace_back(theta, phi);
  }
  return out;
}

}  // namespace cbamp
