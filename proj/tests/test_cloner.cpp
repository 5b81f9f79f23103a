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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cbamp/cloner.hpp"

using namespace cbamp;

namespace {

constexpr double kPi = std::numbers::pi;

double clone1_fidelity(const DensityMatrix& rho12, const PureQubit& q) {
  return fidelity(density_of(q), partial_trace(rho12, Keep::first));
}

ClonerDesign design_for(const AxialDistribution& d) {
  ClonerDesign c = design_cloner(moments(d));
  c.p_mean = p_success_mean(c, d);
  return c;
}

}  // namespace

TEST(DesignCloner, Universal) {
  const ClonerDesign d = design_cloner(MomentSet::from_legendre(0.0, 0.0));
  EXPECT_NEAR(std::sin(d.alpha_plus), 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(std::sin(d.alpha_minus), 1.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(d.f_quantum, 5.0 / 6.0, 1e-12);
  EXPECT_NEAR(d.p_mean, 0.25, 1e-12);
  EXPECT_EQ(d.branch, ClonerBranch::interior);
}

TEST(DesignCloner, Equatorial) {
  const ClonerDesign d = design_for(AxialDistribution::equatorial());
  EXPECT_NEAR(std::cos(d.alpha_plus), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(std::cos(d.alpha_minus), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(d.f_quantum, (4.0 + 2.0 * std::sqrt(2.0)) / 8.0, 1e-12);
  EXPECT_NEAR(d.p_mean, 1.0 / 3.0, 1e-12);
}

TEST(DesignCloner, MirrorPolar) {
  const ClonerDesign d = design_for(AxialDistribution::mirror_polar());
  EXPECT_EQ(d.alpha_plus, 0.0);
  EXPECT_EQ(d.alpha_minus, 0.0);
  EXPECT_EQ(d.gamma, 0.0);
  EXPECT_NEAR(d.f_quantum, 1.0, 1e-12);
  EXPECT_NEAR(d.p_mean, 1.0 / 6.0, 1e-12);
}

TEST(DesignCloner, DeltaIsDegenerate) {
  for (double theta0 : {0.3, 1.0, 2.0}) {
    const ClonerDesign d = design_cloner(moments(AxialDistribution::delta(theta0)));
    EXPECT_NE(d.branch, ClonerBranch::interior) << theta0;
    EXPECT_GE(std::abs(d.gamma), 1.0);
  }
  // Northern hemisphere favors |HH> (alpha+ = 0), southern |VV>.
  EXPECT_EQ(design_cloner(moments(AxialDistribution::delta(0.5))).branch, ClonerBranch::degenerate_pc_a);
  EXPECT_EQ(design_cloner(moments(AxialDistribution::delta(2.5))).branch, ClonerBranch::degenerate_pc_b);
}

TEST(DesignCloner, KnownNorthPoleUsesPcA) {
  const ClonerDesign d = design_cloner(MomentSet::from_legendre(1.0, 1.0));
  EXPECT_EQ(d.branch, ClonerBranch::degenerate_pc_a);
  EXPECT_NEAR(d.f_quantum, 1.0, 1e-12);
}

TEST(DesignCloner, EquatorialLimitIsContinuous) {
  const ClonerDesign at = design_cloner(MomentSet::from_legendre(0.0, -0.5));
  const ClonerDesign near = design_cloner(MomentSet::from_legendre(0.0, -0.5 + 1e-7));
  const ClonerDesign nearer = design_cloner(MomentSet::from_legendre(0.0, -0.5 + 1e-9));
  EXPECT_NEAR(at.alpha_plus, near.alpha_plus, 1e-3);
  // F_A is smooth in a2 here: the step shrinks with the offset.
  EXPECT_LE(std::abs(at.f_quantum - near.f_quantum), 1e-7);
  EXPECT_LE(std::abs(at.f_quantum - nearer.f_quantum), 1e-9);
}

TEST(PSuccessTheta, Examples) {
  const ClonerDesign u = design_cloner(MomentSet::from_legendre(0.0, 0.0));
  const ClonerDesign e = design_cloner(MomentSet::from_legendre(0.0, -0.5));
  const ClonerDesign z = make_design(0.0, 0.0, MomentSet::from_legendre(0.0, 1.0));
  for (int k = 0; k <= 20; ++k) {
    const double theta = kPi * k / 20;
    EXPECT_NEAR(p_success_theta(u, theta), 0.25, 1e-12);
    EXPECT_NEAR(p_success_theta(z, theta), 1.0 / 6.0, 1e-12);
  }
  EXPECT_NEAR(p_success_theta(e, kPi / 2), 1.0 / 3.0, 1e-12);
}

TEST(PSuccessTheta, ClosedBranchAndRejection) {
  const MomentSet m = MomentSet::from_legendre(0.5, 0.2);
  const ClonerDesign a = make_design(0.0, kPi / 2, m);
  EXPECT_NEAR(p_success_theta(a, 0.0), 1.0 / 6.0, 1e-12);
  EXPECT_NEAR(p_success_theta(a, kPi), 1.0 / 6.0, 1e-12);
  // cos(alpha-) = 0 with sin(alpha+) != 0 violates optimality.
  EXPECT_THROW(make_design(0.3, kPi / 2, m), std::invalid_argument);
  ClonerDesign bad;
  bad.alpha_plus = 0.3;
  bad.alpha_minus = kPi / 2;
  EXPECT_THROW(p_success_theta(bad, 1.0), std::invalid_argument);
  EXPECT_FALSE(satisfies_optimality(bad));
}

TEST(PSuccessMean, QuadratureMatchesClosedForm) {
  for (const AxialDistribution& d : {AxialDistribution::fisher(2.0), AxialDistribution::henyey_greenstein(-0.4),
                                     AxialDistribution::uniform()}) {
    const MomentSet m = moments(d);
    const ClonerDesign c = design_cloner(m);
    EXPECT_NEAR(p_success_mean(c, d), p_success_mean(c, m), 1e-12) << d.describe();
  }
  EXPECT_NEAR(p_success_mean(make_design(0.0, 0.0, moments(AxialDistribution::mirror_polar())),
                             AxialDistribution::mirror_polar()),
              1.0 / 6.0, 1e-15);
}

TEST(Hybrid, QuotedCases) {
  const HybridFigures u = make_hybrid(AxialDistribution::uniform(), 0.5).figures();
  EXPECT_NEAR(u.p_success, 5.0 / 8.0, 1e-12);
  EXPECT_NEAR(u.fidelity, 0.2 * 5.0 / 6.0 + 0.8 * 0.75, 1e-12);
  EXPECT_NEAR(u.fidelity, 23.0 / 30.0, 1e-12);
  const HybridFigures e = make_hybrid(AxialDistribution::equatorial(), 0.5).figures();
  EXPECT_NEAR(e.p_success, 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(e.fidelity, 0.25 * (4.0 + 2.0 * std::sqrt(2.0)) / 8.0 + 0.75 * 0.75, 1e-12);
  const HybridFigures c = make_hybrid(AxialDistribution::mirror_polar(), 0.5).figures();
  EXPECT_NEAR(c.p_success, 7.0 / 12.0, 1e-12);
  EXPECT_NEAR(c.fidelity, 11.0 / 14.0, 1e-12);
  EXPECT_NEAR(c.classical_share, 6.0 / 7.0, 1e-12);
}

TEST(Hybrid, EndpointsAndMonotonicity) {
  for (const AxialDistribution& d : {AxialDistribution::uniform(), AxialDistribution::fisher(1.5),
                                     AxialDistribution::delta(0.7), AxialDistribution::equatorial()}) {
    const HybridAmplifier h = make_hybrid(d, 0.0);
    const MomentSet& m = h.distribution;
    EXPECT_EQ(hybrid(h.design.p_mean, h.design.f_quantum, m, 0.0).fidelity, h.design.f_quantum);
    EXPECT_EQ(hybrid(h.design.p_mean, h.design.f_quantum, m, 1.0).fidelity, (3.0 + m.a1 * m.a1) / 4.0);
    double last = -1.0;
    for (int k = 0; k <= 100; ++k) {
      const double p = hybrid(h.design.p_mean, h.design.f_quantum, m, k / 100.0).p_success;
      ASSERT_GT(p, last) << d.describe();
      last = p;
    }
  }
  EXPECT_THROW(hybrid(0.5, 0.8, MomentSet{}, 1.5), std::invalid_argument);
}

TEST(Hybrid, SigmaIsCentralState) {
  const AxialDistribution d = AxialDistribution::fisher(0.8);
  const HybridAmplifier h = make_hybrid(d, 0.3);
  EXPECT_TRUE(h.sigma.matrix().isApprox(central_state(d).matrix(), 1e-14));
}

TEST(ClassicalClone, Examples) {
  const DensityMatrix rho = density_of(PureQubit(0.8, 0.2));
  EXPECT_TRUE(classical_clone(rho, rho).matrix().isApprox(rho.matrix()));
  const DensityMatrix h = density_of(PureQubit(0.0, 0.0));
  const DensityMatrix c = classical_clone(h, DensityMatrix::maximally_mixed(2));
  EXPECT_NEAR(c(0, 0).real(), 0.75, 1e-15);
  EXPECT_NEAR(fidelity(rho, classical_clone(rho, DensityMatrix::maximally_mixed(2))), 0.75, 1e-15);
}

TEST(CloneState, Examples) {
  const ClonerDesign u = design_cloner(MomentSet::from_legendre(0.0, 0.0));
  const PureQubit north(0.0, 0.0);
  EXPECT_NEAR(clone1_fidelity(clone_state(u, north).rho12, north), 5.0 / 6.0, 1e-12);

  const ClonerDesign z = make_design(0.0, 0.0, MomentSet::from_legendre(0.0, 1.0));
  const CloneOutput out = clone_state(z, north);
  EXPECT_NEAR(out.rho12(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(out.p_theta, 1.0 / 6.0, 1e-15);
}

TEST(CloneState, ReductionsAreEqual) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const ClonerDesign d = design_cloner(MomentSet::from_cos_moments(0.0, u(rng)));
    const CloneOutput out = clone_state(d, PureQubit(kPi * u(rng), 2 * kPi * u(rng)));
    const Eigen::MatrixXcd diff =
        partial_trace(out.rho12, Keep::first).matrix() - partial_trace(out.rho12, Keep::second).matrix();
    ASSERT_LE(diff.cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(CloneState, ProbabilityMatchesFormulaOnRandomDesigns) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int checked = 0;
  while (checked < 1000) {
    const ClonerDesign d = make_design(kPi / 2 * u(rng), kPi / 2 * u(rng), MomentSet{});
    if (!satisfies_optimality(d, 0.0)) continue;
    const double theta = kPi * u(rng);
    ASSERT_NEAR(clone_state(d, PureQubit(theta, 2 * kPi * u(rng))).p_theta, p_success_theta(d, theta), 1e-12);
    ++checked;
  }
}

TEST(CloneState, MirrorDesignsReproduceFidelityQuantum) {
  // a1 = 0 designs, averaged over random mirror-symmetric tabulated densities.
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> theta(9), dens(9);
    for (int k = 0; k < 9; ++k) theta[k] = kPi * k / 8;
    for (int k = 0; k <= 4; ++k) dens[k] = dens[8 - k] = u(rng) + 1e-3;
    const AxialDistribution dist = AxialDistribution::tabulated(theta, dens);
    const MomentSet m = moments(dist);
    ASSERT_NEAR(m.a1, 0.0, 1e-12);
    const ClonerDesign d = design_cloner(m);
    const double phi = 2 * kPi * u(rng);
    const double avg = expectation(dist, [&](double t) {
      const PureQubit q(t, phi);
      return clone1_fidelity(clone_state(d, q).rho12, q);
    });
    ASSERT_NEAR(avg, d.f_quantum, 1e-9);
  }
}

TEST(CloneStateUnitary, ReproducesFidelityQuantumEverywhere) {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const AxialDistribution dist =
        i % 2 ? AxialDistribution::fisher(20.0 * u(rng) - 10.0) : AxialDistribution::henyey_greenstein(1.8 * u(rng) - 0.9);
    const MomentSet m = moments(dist);
    const ClonerDesign d = design_cloner(m);
    const double phi = 2 * kPi * u(rng);
    const double avg = expectation(dist, [&](double t) {
      const PureQubit q(t, phi);
      return clone1_fidelity(clone_state_unitary(d, q), q);
    });
    ASSERT_NEAR(avg, d.f_quantum, 1e-9) << dist.describe();
  }
}

TEST(ClonerProperties, AdmissibleGrid) {
  double worst = 1.0;
  for (int i = 0; i <= 100; ++i) {
    const double a1 = -1.0 + 2.0 * i / 100;
    for (int j = 0; j <= 100; ++j) {
      const double cos2 = a1 * a1 + (1.0 - a1 * a1) * j / 100;
      const ClonerDesign d = design_cloner(MomentSet::from_cos_moments(a1, cos2));
      ASSERT_TRUE(satisfies_optimality(d)) << a1 << ' ' << cos2;
      ASSERT_GE(d.f_quantum, 5.0 / 6.0 - 1e-9) << a1 << ' ' << cos2;
      ASSERT_GT(d.p_mean, 0.0);
      ASSERT_LE(d.p_mean, 1.0);
      worst = std::min(worst, d.f_quantum);
    }
  }
  EXPECT_NEAR(worst, 5.0 / 6.0, 1e-5);
}

TEST(ClonerProperties, PhaseIndependence) {
  for (const AxialDistribution& dist : {AxialDistribution::uniform(), AxialDistribution::equatorial(),
                                        AxialDistribution::mirror_polar(), AxialDistribution::fisher(-2.0)}) {
    const ClonerDesign d = design_cloner(moments(dist));
    for (double theta : {0.4, kPi / 2, 2.2}) {
      std::vector<double> f;
      for (int k = 0; k < 16; ++k) {
        const PureQubit q(theta, 2 * kPi * k / 16);
        f.push_back(clone1_fidelity(clone_state(d, q).rho12, q));
      }
      double mean = 0.0, var = 0.0;
      for (double v : f) mean += v / 16;
      for (double v : f) var += (v - mean) * (v - mean) / 16;
      EXPECT_LT(var, 1e-18) << dist.describe() << ' ' << theta;
    }
  }
}

TEST(ClonerProperties, MoreKnowledgeNeverHurts) {
  double last = 2.0;
  for (int k = 0; k < 50; ++k) {
    const double theta0 = kPi / 2 * k / 49;
    const double f = design_cloner(moments(AxialDistribution::delta(theta0))).f_quantum;
    ASSERT_LE(f, last + 1e-12) << theta0;
    last = f;
  }
  EXPECT_NEAR(last, (4.0 + 2.0 * std::sqrt(2.0)) / 8.0, 1e-9);
}
