#include "xxchain/dynamics.hpp"

#include <cmath>
#include <string>

#include "xxchain/errors.hpp"
#include "xxchain/transport.hpp"

namespace xxchain {

namespace {

double mode_weight(const SpectralData& spec, const Temperature& t, int mode,
                   bool left) {
  const double g = left ? spec.g_left[static_cast<std::size_t>(mode)]
                        : spec.g_right[static_cast<std::size_t>(mode)];
  if (g == 0.0) return 0.0;
  return g * chi(spec.eps[static_cast<std::size_t>(mode)], t);
}

void check_mode(const SpectralData& spec, int mode) {
  if (mode < 0 || mode >= spec.size()) {
    throw validation_error("dynamics: mode index " + std::to_string(mode) +
                           " out of range");
  }
}

}  // namespace

double relaxation_rate(const SpectralData& spec, const BathPair& baths, int mode,
                       double gamma) {
  check_mode(spec, mode);
  return gamma * (mode_weight(spec, baths.left, mode, true) +
                  mode_weight(spec, baths.right, mode, false));
}

std::vector<double> relax_occupations(const SpectralData& spec,
                                      const BathPair& baths,
                                      const std::vector<double>& n0, double t,
                                      double gamma) {
  if (t < 0.0) {
    throw validation_error("dynamics: negative time");
  }
  if (static_cast<int>(n0.size()) != spec.size()) {
    throw validation_error("dynamics: initial occupation list has wrong length");
  }
  const Occupations steady = steady_occupations(spec, baths);
  std::vector<double> out(n0.size());
  for (int k = 0; k < spec.size(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double rate = relaxation_rate(spec, baths, k, gamma);
    if (rate == 0.0) {
      out[i] = n0[i];  // decoupled mode: frozen
    } else if (std::isinf(rate)) {
      out[i] = t > 0.0 ? steady.n[i] : n0[i];
    } else {
      out[i] = steady.n[i] + (n0[i] - steady.n[i]) * std::exp(-rate * t);
    }
  }
  return out;
}

double offdiagonal_decay_rate(const SpectralData& spec, const BathPair& baths,
                              int mode_a, int mode_b, double gamma) {
  check_mode(spec, mode_a);
  check_mode(spec, mode_b);
  if (mode_a == mode_b) {
    throw validation_error("dynamics: off-diagonal rate needs two distinct modes");
  }
  return 0.5 * (relaxation_rate(spec, baths, mode_a, gamma) +
                relaxation_rate(spec, baths, mode_b, gamma));
}

ModeTrajectory relax_trajectory(const SpectralData& spec, const BathPair& baths,
                                const std::vector<double>& n0,
                                const std::vector<double>& times, double gamma) {
  ModeTrajectory trajectory;
  trajectory.times = times;
  trajectory.rates.resize(static_cast<std::size_t>(spec.size()));
  for (int k = 0; k < spec.size(); ++k) {
    trajectory.rates[static_cast<std::size_t>(k)] =
        relaxation_rate(spec, baths, k, gamma);
  }
  trajectory.occupations.reserve(times.size());
  for (double t : times) {
    trajectory.occupations.push_back(
        relax_occupations(spec, baths, n0, t, gamma));
  }
  return trajectory;
}

}  // namespace xxchain
