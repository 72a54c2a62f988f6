// transport.hpp — steady-state occupations, particle/energy currents,
// linear-response coefficients and heat rectification factors

#pragma once

#include <optional>
#include <vector>

#include "xxchain/bath.hpp"
#include "xxchain/chain.hpp"
#include "xxchain/spectral.hpp"

namespace xxchain {

// Steady-state mode occupations
//   n_k = (w_L f_L + w_R f_R) / (w_L + w_R),   w_i = g_{i,k} chi_{i,k},
// a convex combination, so every defined occupation lies in [0, 1].
// Modes decoupled from both baths (g_L = g_R = 0) have no steady value:
// their entry is NaN and the index is listed in `decoupled`.
struct Occupations {
  std::vector<double> n;
  std::vector<int> decoupled;
};

Occupations steady_occupations(const SpectralData& spec, const BathPair& baths);

// Per-mode current contributions (rate constant included):
//   particle_k = gamma [w_L w_R / (w_L + w_R)] (f_{L,k} - f_{R,k})
//   energy_k   = eps_k * particle_k
// Positive particle/energy flow runs from the left bath into the chain.
// Modes with |eps| below 1e-6 * min(T_L, T_R) are evaluated by the series
// limit of the kernel (both chi's diverge there but the product is finite).
struct ModeCurrent {
  double eps;
  double particle;
  double energy;
};

std::vector<ModeCurrent> mode_currents(const SpectralData& spec,
                                       const BathPair& baths, double gamma);

double particle_current(const SpectralData& spec, const BathPair& baths,
                        double gamma);

// The heat current: same kernel as the particle current with an extra
// factor eps_k per mode (the Hamiltonian is static, so no work is done).
double energy_current(const SpectralData& spec, const BathPair& baths,
                      double gamma);

// Expansion of the particle current around a common temperature T for
// T_{L,R} = T +- dT/2:  J_N = gamma dT J1 + gamma dT^2 J2 + O(dT^3),
//   J1 = sum_k [g_L g_R/(g_L+g_R)] (eps_k / 2T^2) csch(|eps_k|/T)
//   J2 = sum_k [g_L g_R (g_R-g_L)/(g_L+g_R)^2] (eps_k |eps_k| / 4T^4)
//        csch^2(|eps_k|/T)
// J2 vanishes identically for left-right symmetric chains and is the
// leading rectifying contribution otherwise.
struct LinearResponse {
  double j1;
  double j2;
};

LinearResponse linear_response(const SpectralData& spec, double temperature);

// Forward and reversed-bias heat currents and the rectification factor
//   R = (J_fwd + J_rev) / min(J_fwd, |J_rev|).
// The reversed bias swaps the bath temperatures with the chain fixed.
// When the denominator vanishes R is undefined (NaN, factor_defined =
// false); when both currents share a sign the factor is still computed
// and same_sign is set.
struct RectificationResult {
  double forward;
  double reversed;
  double factor;
  bool factor_defined;
  bool same_sign;
  bool degenerate_spectrum;
};

RectificationResult rectify(const ChainSpec& chain, const BathPair& baths);

// Closed-form currents of the boundary-perturbed chain in the extreme
// gradient T_L -> inf, T_R -> 0.
enum class SpectrumCase {
  kPositive,  // h > 2 alpha > 0: all eigenvalues positive
  kNegative,  // h < 0, alpha > 0, |h| > 2 alpha: all negative
  kSplit,     // N even, alpha above the split threshold: half/half
};

struct CurrentPair {
  double forward;
  double reversed;
};

// kPositive: ( gamma (h+alpha)/2, -gamma (h-alpha)/2 )
// kNegative: ( gamma (|h|-alpha)/2, -gamma (|h|+alpha)/2 )
// kSplit:    ( (gamma/N) csc(pi/2N) (alpha + h/2),
//              -(gamma/N) csc(pi/2N) (alpha - h/2) )
// Preconditions of the selected case are enforced.
CurrentPair asymptotic_currents(int sites, double h, double alpha, double gamma,
                                SpectrumCase which);

// Generic T_L -> inf, T_R -> 0 limit for an arbitrary spectrum, evaluated
// symbolically (no floating-point overflow):
//   J   =  (gamma/2) sum_k |eps_k| g_{R,k}
//   J_r = -(gamma/2) sum_k |eps_k| g_{L,k}
// Passing `expected` additionally verifies that the spectrum sign pattern
// matches the claimed case (all positive / all negative / even split).
CurrentPair limit_current_sums(const SpectralData& spec, double gamma,
                               std::optional<SpectrumCase> expected = {});

}  // namespace xxchain
