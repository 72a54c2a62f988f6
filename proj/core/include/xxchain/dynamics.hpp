// dynamics.hpp — closed-form relaxation of mode occupations and coherences
// toward the steady state

#pragma once

#include <vector>

#include "xxchain/bath.hpp"
#include "xxchain/spectral.hpp"

namespace xxchain {

// Occupations evolve independently per mode:
//   n_k(t) = n_ss,k + (n0_k - n_ss,k) exp(-rate_k t),
//   rate_k = gamma (g_L chi_L + g_R chi_R).
// An infinite rate (infinite-temperature bath or zero-energy mode) means the
// mode sits at its steady value for any t > 0. Decoupled modes keep n0.
std::vector<double> relax_occupations(const SpectralData& spec,
                                      const BathPair& baths,
                                      const std::vector<double>& n0, double t,
                                      double gamma);

// Per-mode relaxation rate gamma (g_L chi_L + g_R chi_R); may be +infinity.
double relaxation_rate(const SpectralData& spec, const BathPair& baths, int mode,
                       double gamma);

// Decay rate of the coherence <n~_k^dag n~_k'>, k != k':
//   (gamma/2)(A_{L,k} + A_{L,k'} + A_{R,k} + A_{R,k'}),  A_{i,k} = g chi.
// Equal to the mean of the two diagonal relaxation rates; strictly positive
// whenever any of the four couplings is nonzero, so coherences vanish in the
// steady state.
double offdiagonal_decay_rate(const SpectralData& spec, const BathPair& baths,
                              int mode_a, int mode_b, double gamma);

// Occupation trajectories sampled on a time grid, one row per time.
struct ModeTrajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> occupations;
  std::vector<double> rates;
};

ModeTrajectory relax_trajectory(const SpectralData& spec, const BathPair& baths,
                                const std::vector<double>& n0,
                                const std::vector<double>& times, double gamma);

}  // namespace xxchain
