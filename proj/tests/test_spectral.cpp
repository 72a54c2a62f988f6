#include "xxchain/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "testing.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/errors.hpp"

using xxchain::analytic_spectrum;
using xxchain::build_boundary_perturbed;
using xxchain::build_custom;
using xxchain::ChainSpec;
using xxchain::diagonalize;
using xxchain::SpectralData;
using xxchain::split_spectrum_condition;
using xxchain::validation_error;

namespace {

// Independent eigenvalue oracle: bisection on the Sturm sign count of the
// shifted characteristic sequence.
std::vector<double> bisection_eigenvalues(const std::vector<double>& diag,
                                          const std::vector<double>& off) {
  const int n = static_cast<int>(diag.size());
  const auto count_below = [&](double x) {
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
      const double off2 =
          i > 0 ? off[static_cast<std::size_t>(i - 1)] *
                      off[static_cast<std::size_t>(i - 1)]
                : 0.0;
      q = diag[static_cast<std::size_t>(i)] - x - (i > 0 ? off2 / q : 0.0);
      if (q == 0.0) q = -1e-300;
      if (q < 0.0) ++count;
    }
    return count;
  };

  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = std::abs(diag[static_cast<std::size_t>(i)]);
    if (i > 0) row += std::abs(off[static_cast<std::size_t>(i - 1)]);
    if (i + 1 < n) row += std::abs(off[static_cast<std::size_t>(i)]);
    radius = std::max(radius, row);
  }
  radius += 1.0;

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double lo = -radius;
    double hi = radius;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) <= k) {
        lo = mid;
      } else {
        hi = mid;
      }
      if (hi - lo < 1e-13 * radius) break;
    }
    values[static_cast<std::size_t>(k)] = 0.5 * (lo + hi);
  }
  return values;
}

double reconstruction_residual(const ChainSpec& chain, const SpectralData& spec) {
  const auto w = xxchain::to_w_matrix(chain);
  const int n = spec.size();
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double rebuilt = 0.0;
      for (int k = 0; k < n; ++k) {
        rebuilt += spec.eps[static_cast<std::size_t>(k)] *
                   spec.eigenvector(i, k) * spec.eigenvector(j, k);
      }
      const double exact = w(i, j);
      num += (rebuilt - exact) * (rebuilt - exact);
      den += exact * exact;
    }
  }
  return std::sqrt(num / std::max(den, 1e-300));
}

double orthogonality_defect(const SpectralData& spec) {
  const int n = spec.size();
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      double dot = 0.0;
      for (int j = 0; j < n; ++j) {
        dot += spec.eigenvector(j, a) * spec.eigenvector(j, b);
      }
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace

TEST(Diagonalize, TwoByTwoClosedForm) {
  const SpectralData spec = diagonalize(build_custom({4.0, 6.0}, {1.0}, 1.0));
  EXPECT_NEAR(spec.eps[0], 5.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(spec.eps[1], 5.0 + std::sqrt(2.0), 1e-14);
}

TEST(Diagonalize, DecoupledChainIsAlreadyDiagonal) {
  const SpectralData spec =
      diagonalize(build_custom({3.0, 1.0, 2.0}, {0.0, 0.0}, 1.0));
  EXPECT_NEAR(spec.eps[0], 1.0, 1e-15);
  EXPECT_NEAR(spec.eps[1], 2.0, 1e-15);
  EXPECT_NEAR(spec.eps[2], 3.0, 1e-15);
  // Eigenvectors are coordinate vectors, so each weight is 0 or 1.
  for (int k = 0; k < 3; ++k) {
    EXPECT_TRUE(spec.g_left[k] == 0.0 || std::abs(spec.g_left[k] - 1.0) < 1e-15);
    EXPECT_TRUE(spec.g_right[k] == 0.0 ||
                std::abs(spec.g_right[k] - 1.0) < 1e-15);
  }
  EXPECT_NEAR(spec.g_left[2], 1.0, 1e-15);   // eps = 3 lives on site 1
  EXPECT_NEAR(spec.g_right[1], 1.0, 1e-15);  // eps = 2 lives on site N
}

TEST(Diagonalize, MatchesBisectionOracleOnRandomTridiagonals) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> entry(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<double> d = {entry(rng), entry(rng), entry(rng)};
    const std::vector<double> e = {entry(rng), entry(rng)};
    const ChainSpec chain = build_custom(d, e, 1.0);
    const SpectralData spec = diagonalize(chain);
    const std::vector<double> oracle = bisection_eigenvalues(d, e);
    for (int k = 0; k < 3; ++k) {
      EXPECT_NEAR(spec.eps[k], oracle[k], 1e-8);
    }
  }
}

TEST(Diagonalize, ReconstructionAndOrthogonality) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const ChainSpec chain = xxtest::random_chain(rng, 2, 64);
    const SpectralData spec = diagonalize(chain);
    EXPECT_LT(orthogonality_defect(spec), 1e-10);
    EXPECT_LT(reconstruction_residual(chain, spec), 1e-10);
    double sum_left = 0.0;
    double sum_right = 0.0;
    for (int k = 0; k < spec.size(); ++k) {
      EXPECT_GE(spec.g_left[k], 0.0);
      EXPECT_GE(spec.g_right[k], 0.0);
      sum_left += spec.g_left[k];
      sum_right += spec.g_right[k];
    }
    EXPECT_NEAR(sum_left, 1.0, 1e-12);
    EXPECT_NEAR(sum_right, 1.0, 1e-12);
  }
}

TEST(Diagonalize, FlagsNearDegeneratePairs) {
  const SpectralData spec =
      diagonalize(build_custom({2.0, 2.0, 2.0}, {0.0, 0.0}, 1.0));
  EXPECT_TRUE(spec.degenerate());
  EXPECT_EQ(spec.degenerate_pairs.size(), 2u);

  const SpectralData clean = diagonalize(build_custom({1.0, 2.0}, {0.3}, 1.0));
  EXPECT_FALSE(clean.degenerate());
}

TEST(AnalyticSpectrum, PaperOrderingAtTwoSites) {
  const SpectralData spec = analytic_spectrum(2, 5.0, 1.0);
  EXPECT_NEAR(spec.eps[0], 5.0 + std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(spec.eps[1], 5.0 - std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(spec.g_left[0], 0.14644660940672624, 1e-15);
  EXPECT_NEAR(spec.g_left[1], 0.85355339059327373, 1e-15);
  // Reflection symmetry of the weights: g_{L,1} = g_{R,2}.
  EXPECT_NEAR(spec.g_left[0], spec.g_right[1], 1e-15);
  EXPECT_NEAR(spec.g_left[1], spec.g_right[0], 1e-15);
}

TEST(AnalyticSpectrum, WeightsSumToOne) {
  for (int n : {2, 3, 8, 17, 50}) {
    const SpectralData spec = analytic_spectrum(n, 1.3, 0.7);
    double sum_left = 0.0;
    double sum_right = 0.0;
    for (int k = 0; k < n; ++k) {
      sum_left += spec.g_left[k];
      sum_right += spec.g_right[k];
    }
    EXPECT_NEAR(sum_left, 1.0, 1e-12);
    EXPECT_NEAR(sum_right, 1.0, 1e-12);
  }
}

TEST(AnalyticSpectrum, SortAscendingKeepsColumnsPaired) {
  SpectralData spec = analytic_spectrum(8, 5.0, 1.0);
  spec.sort_ascending();
  EXPECT_TRUE(std::is_sorted(spec.eps.begin(), spec.eps.end()));
  const ChainSpec chain = build_boundary_perturbed(8, 5.0, 1.0, 1.0);
  EXPECT_LT(reconstruction_residual(chain, spec), 1e-12);
  for (int k = 0; k < spec.size(); ++k) {
    EXPECT_DOUBLE_EQ(spec.g_left[k],
                     spec.eigenvector(0, k) * spec.eigenvector(0, k));
  }
}

TEST(Spectral, NumericalMatchesAnalyticAcrossSizes) {
  for (int n = 2; n <= 64; n += (n < 12 ? 1 : 13)) {
    const SpectralData numeric = diagonalize(build_boundary_perturbed(n, 5.0, 1.0, 1.0));
    SpectralData analytic = analytic_spectrum(n, 5.0, 1.0);
    analytic.sort_ascending();
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(numeric.eps[k], analytic.eps[k], 1e-10) << "N=" << n;
      EXPECT_NEAR(numeric.g_left[k], analytic.g_left[k], 1e-10) << "N=" << n;
      EXPECT_NEAR(numeric.g_right[k], analytic.g_right[k], 1e-10) << "N=" << n;
    }
  }
}

TEST(Spectral, ReflectDualitySwapsWeights) {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    const ChainSpec chain = xxtest::random_nondegenerate_chain(rng);
    const SpectralData spec = diagonalize(chain);
    const SpectralData mirrored = diagonalize(xxchain::reflect(chain));
    for (int k = 0; k < spec.size(); ++k) {
      EXPECT_NEAR(spec.eps[k], mirrored.eps[k], 1e-10);
      EXPECT_NEAR(spec.g_left[k], mirrored.g_right[k], 1e-10);
      EXPECT_NEAR(spec.g_right[k], mirrored.g_left[k], 1e-10);
    }
  }
}

TEST(Spectral, WeightsInvariantUnderColumnSignFlip) {
  const ChainSpec chain = build_custom({1.0, -0.5, 2.0}, {0.8, 1.1}, 1.0);
  SpectralData spec = diagonalize(chain);
  const std::vector<double> g_left = spec.g_left;
  const std::vector<double> g_right = spec.g_right;
  const int n = spec.size();
  for (int j = 0; j < n; ++j) {
    spec.s[static_cast<std::size_t>(j) + static_cast<std::size_t>(n)] *= -1.0;
  }
  for (int k = 0; k < n; ++k) {
    EXPECT_DOUBLE_EQ(spec.eigenvector(0, k) * spec.eigenvector(0, k), g_left[k]);
    EXPECT_DOUBLE_EQ(spec.eigenvector(n - 1, k) * spec.eigenvector(n - 1, k),
                     g_right[k]);
  }
}

TEST(SplitSpectrum, KnownThresholds) {
  // N=50, h=1: threshold (h/2)|sec(51 pi/100)| ~ 15.918, so alpha=10 does
  // not split the spectrum and alpha=16 does.
  EXPECT_FALSE(split_spectrum_condition(50, 1.0, 10.0));
  EXPECT_TRUE(split_spectrum_condition(50, 1.0, 16.0));
  // N=2, h=1: threshold sqrt(2)/2; alpha=1 gives eigenvalues 1 +- sqrt(2).
  EXPECT_TRUE(split_spectrum_condition(2, 1.0, 1.0));
  EXPECT_FALSE(split_spectrum_condition(2, 1.0, 0.5));
  EXPECT_FALSE(split_spectrum_condition(4, 1.0, 1e-12));

  EXPECT_THROW(split_spectrum_condition(5, 1.0, 1.0), validation_error);
  EXPECT_THROW(split_spectrum_condition(4, -1.0, 1.0), validation_error);
  EXPECT_THROW(split_spectrum_condition(4, 1.0, 0.0), validation_error);
}

TEST(SplitSpectrum, AgreesWithDirectSignCount) {
  std::mt19937_64 rng(2025);
  std::uniform_real_distribution<double> h_dist(0.1, 3.0);
  std::uniform_real_distribution<double> a_dist(0.05, 25.0);
  std::uniform_int_distribution<int> n_dist(1, 6);
  int used = 0;
  for (int trial = 0; trial < 200 && used < 100; ++trial) {
    const int n = 2 * n_dist(rng);
    const double h = h_dist(rng);
    const double alpha = a_dist(rng);
    // Skip draws too close to the threshold for an unambiguous sign count.
    const double threshold =
        0.5 * h /
        std::abs(std::cos((n + 1.0) * std::numbers::pi / (2.0 * n)));
    if (std::abs(alpha - threshold) < 1e-6 * std::max(1.0, threshold)) continue;
    ++used;

    const SpectralData spec = analytic_spectrum(n, h, alpha);
    int positive = 0;
    int negative = 0;
    for (double eps : spec.eps) {
      positive += eps > 0.0;
      negative += eps < 0.0;
    }
    const bool split = positive == n / 2 && negative == n / 2;
    EXPECT_EQ(split_spectrum_condition(n, h, alpha), split)
        << "N=" << n << " h=" << h << " alpha=" << alpha;
  }
  EXPECT_GE(used, 50);
}
