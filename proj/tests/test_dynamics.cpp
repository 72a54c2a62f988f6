#include "xxchain/dynamics.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "testing.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/errors.hpp"
#include "xxchain/transport.hpp"

using xxchain::BathPair;
using xxchain::build_boundary_perturbed;
using xxchain::build_custom;
using xxchain::diagonalize;
using xxchain::offdiagonal_decay_rate;
using xxchain::relax_occupations;
using xxchain::relax_trajectory;
using xxchain::relaxation_rate;
using xxchain::SpectralData;
using xxchain::steady_occupations;
using xxchain::Temperature;
using xxchain::validation_error;

namespace {

BathPair finite_baths(double tl, double tr) {
  return BathPair{Temperature::finite(tl), Temperature::finite(tr)};
}

// Fixed-step RK4 for dn/dt = rate (target - n), mode by mode; only used to
// cross-check the closed-form exponential.
std::vector<double> rk4_relax(const SpectralData& spec, const BathPair& baths,
                              std::vector<double> n, double t_final,
                              double gamma, int steps) {
  const auto occ = steady_occupations(spec, baths);
  const double dt = t_final / steps;
  for (int step = 0; step < steps; ++step) {
    for (int k = 0; k < spec.size(); ++k) {
      const double rate = relaxation_rate(spec, baths, k, gamma);
      const auto f = [&](double value) { return rate * (occ.n[k] - value); };
      const double k1 = f(n[k]);
      const double k2 = f(n[k] + 0.5 * dt * k1);
      const double k3 = f(n[k] + 0.5 * dt * k2);
      const double k4 = f(n[k] + dt * k3);
      n[k] += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return n;
}

}  // namespace

TEST(RelaxOccupations, TimeZeroReturnsInitialState) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(4, 5.0, 1.0, 1.0));
  const std::vector<double> n0 = {0.1, 0.9, 0.3, 0.6};
  EXPECT_EQ(relax_occupations(spec, finite_baths(2.0, 1.0), n0, 0.0, 1.0), n0);
}

TEST(RelaxOccupations, LongTimesReachTheSteadyState) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(4, 5.0, 1.0, 1.0));
  const BathPair baths = finite_baths(2.0, 1.0);
  const std::vector<double> n0 = {0.0, 1.0, 0.5, 0.25};
  double slowest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < spec.size(); ++k) {
    slowest = std::min(slowest, relaxation_rate(spec, baths, k, 1.0));
  }
  const double t = 45.0 / slowest;
  const auto late = relax_occupations(spec, baths, n0, t, 1.0);
  const auto steady = steady_occupations(spec, baths);
  for (int k = 0; k < spec.size(); ++k) {
    EXPECT_NEAR(late[k], steady.n[k], 1e-12);
  }
}

TEST(RelaxOccupations, MonotoneApproach) {
  const SpectralData spec = diagonalize(build_custom({1.0, -0.5, 2.0}, {0.7, 1.2}, 1.0));
  const BathPair baths = finite_baths(3.0, 0.5);
  const std::vector<double> n0 = {0.9, 0.05, 0.5};
  const auto steady = steady_occupations(spec, baths);
  std::vector<double> previous(3, 2.0);
  for (double t : {0.0, 0.05, 0.2, 0.8, 2.0, 8.0}) {
    const auto n = relax_occupations(spec, baths, n0, t, 1.0);
    for (int k = 0; k < 3; ++k) {
      const double gap = std::abs(n[k] - steady.n[k]);
      EXPECT_LE(gap, previous[k] + 1e-15);
      previous[k] = gap;
    }
  }
}

TEST(RelaxOccupations, SmallerGapRelaxesFaster) {
  // At equal temperatures every two-site mode has g_L + g_R = 1, so the
  // rate gamma chi(eps) (g_L + g_R) is ordered purely by coth: the mode
  // with the smaller |eps| relaxes strictly faster.
  const BathPair baths = finite_baths(2.0, 2.0);
  const SpectralData skew = diagonalize(build_custom({0.2, -0.8}, {0.05}, 1.0));
  const int small = std::abs(skew.eps[0]) < std::abs(skew.eps[1]) ? 0 : 1;
  EXPECT_GT(relaxation_rate(skew, baths, small, 1.0),
            relaxation_rate(skew, baths, 1 - small, 1.0));
}

TEST(RelaxOccupations, MatchesRk4Integration) {
  std::mt19937_64 rng(42);
  const auto chain = xxtest::random_nondegenerate_chain(rng, 3, 5);
  const SpectralData spec = diagonalize(chain);
  const BathPair baths = finite_baths(1.7, 0.6);
  std::vector<double> n0(static_cast<std::size_t>(spec.size()));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double& v : n0) v = u(rng);
  const double t = 0.8;
  const auto exact = relax_occupations(spec, baths, n0, t, 1.0);
  const auto integrated = rk4_relax(spec, baths, n0, t, 1.0, 2000);
  for (int k = 0; k < spec.size(); ++k) {
    EXPECT_NEAR(exact[k], integrated[k], 1e-10);
  }
}

TEST(RelaxOccupations, InfiniteTemperatureJumpsToSteadyValue) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(3, 5.0, 1.0, 1.0));
  const BathPair baths{Temperature::infinite(), Temperature::infinite()};
  const std::vector<double> n0 = {0.9, 0.1, 0.4};
  EXPECT_EQ(relax_occupations(spec, baths, n0, 0.0, 1.0), n0);
  const auto jumped = relax_occupations(spec, baths, n0, 1e-12, 1.0);
  for (int k = 0; k < 3; ++k) {
    EXPECT_DOUBLE_EQ(jumped[k], 0.5);
  }
}

TEST(RelaxOccupations, DecoupledModeStaysFrozen) {
  const SpectralData spec =
      diagonalize(build_custom({0.5, 1.5, 2.5}, {0.0, 0.0}, 1.0));
  const std::vector<double> n0 = {0.3, 0.8, 0.1};
  const auto n = relax_occupations(spec, finite_baths(2.0, 1.0), n0, 5.0, 1.0);
  EXPECT_DOUBLE_EQ(n[1], 0.8);
}

TEST(RelaxOccupations, RejectsBadArguments) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(3, 5.0, 1.0, 1.0));
  const std::vector<double> n0 = {0.1, 0.2, 0.3};
  EXPECT_THROW(relax_occupations(spec, finite_baths(1.0, 1.0), n0, -1.0, 1.0),
               validation_error);
  EXPECT_THROW(relax_occupations(spec, finite_baths(1.0, 1.0), {0.1}, 1.0, 1.0),
               validation_error);
}

TEST(RelaxationRate, DecreasesWithModeEnergyAtFixedWeights) {
  // coth(|eps|/2T) is monotone decreasing in |eps|, so at fixed couplings
  // the rate ordering follows the gaps.
  SpectralData spec;
  spec.eps = {0.2, 0.9, 2.5, 7.0};
  spec.g_left = {0.3, 0.3, 0.3, 0.3};
  spec.g_right = {0.5, 0.5, 0.5, 0.5};
  spec.s.assign(16, 0.0);
  const BathPair baths = finite_baths(1.4, 2.6);
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 0; k < spec.size(); ++k) {
    const double rate = relaxation_rate(spec, baths, k, 1.0);
    EXPECT_LT(rate, previous);
    previous = rate;
  }
}

TEST(OffdiagonalDecay, MeanOfDiagonalRates) {
  std::mt19937_64 rng(7);
  const auto chain = xxtest::random_nondegenerate_chain(rng, 3, 6);
  const SpectralData spec = diagonalize(chain);
  const BathPair baths = finite_baths(1.2, 3.4);
  for (int a = 0; a < spec.size(); ++a) {
    for (int b = 0; b < spec.size(); ++b) {
      if (a == b) continue;
      const double rate = offdiagonal_decay_rate(spec, baths, a, b, 1.0);
      EXPECT_GT(rate, 0.0);
      EXPECT_DOUBLE_EQ(rate, offdiagonal_decay_rate(spec, baths, b, a, 1.0));
      EXPECT_DOUBLE_EQ(rate, 0.5 * (relaxation_rate(spec, baths, a, 1.0) +
                                    relaxation_rate(spec, baths, b, 1.0)));
    }
  }
}

TEST(OffdiagonalDecay, RejectsEqualModes) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(3, 5.0, 1.0, 1.0));
  EXPECT_THROW(offdiagonal_decay_rate(spec, finite_baths(1.0, 2.0), 1, 1, 1.0),
               validation_error);
}

TEST(Trajectory, SamplesRatesAndOccupations) {
  const SpectralData spec = diagonalize(build_boundary_perturbed(3, 5.0, 1.0, 1.0));
  const BathPair baths = finite_baths(2.0, 0.7);
  const std::vector<double> n0 = {0.2, 0.5, 0.8};
  const auto trajectory =
      relax_trajectory(spec, baths, n0, {0.0, 0.1, 1.0}, 1.0);
  ASSERT_EQ(trajectory.occupations.size(), 3u);
  EXPECT_EQ(trajectory.occupations[0], n0);
  for (double rate : trajectory.rates) {
    EXPECT_GE(rate, 0.0);
  }
  for (const auto& row : trajectory.occupations) {
    for (double n : row) {
      EXPECT_GE(n, 0.0);
      EXPECT_LE(n, 1.0);
    }
  }
}
