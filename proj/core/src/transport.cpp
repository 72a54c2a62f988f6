#include "xxchain/transport.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xxchain/errors.hpp"

namespace xxchain {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Modes with |eps| / min(T_L, T_R) below this use the series limit of the
// current kernel; the direct form is 0 * inf there.
constexpr double kSeriesThreshold = 1e-6;

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Particle-current kernel of one mode, rate constant excluded:
//   [w_L w_R / (w_L + w_R)] (f_L - f_R),  w_i = g_i chi_i.
double particle_kernel(double eps, double g_left, double g_right,
                       const BathPair& baths) {
  if (g_left == 0.0 || g_right == 0.0) return 0.0;
  if (baths.left == baths.right) return 0.0;
  if (eps == 0.0) return 0.0;  // antisymmetric limit; see series below

  if (baths.left.is_finite() && baths.right.is_finite()) {
    const double t_left = baths.left.value();
    const double t_right = baths.right.value();
    if (std::abs(eps) < kSeriesThreshold * std::min(t_left, t_right)) {
      // chi_i -> 2 T_i / |eps| and f_L - f_R -> (eps/4)(1/T_R - 1/T_L):
      // the product stays finite.
      return sign_of(eps) * 0.5 * g_left * g_right * (t_left - t_right) /
             (g_left * t_left + g_right * t_right);
    }
  }

  const double chi_left = chi(eps, baths.left);
  const double chi_right = chi(eps, baths.right);
  const double df = fermi_difference(eps, baths.left, baths.right);
  if (std::isinf(chi_left) && std::isinf(chi_right)) return 0.0;
  if (std::isinf(chi_left)) return g_right * chi_right * df;
  if (std::isinf(chi_right)) return g_left * chi_left * df;
  const double w_left = g_left * chi_left;
  const double w_right = g_right * chi_right;
  return w_left * w_right / (w_left + w_right) * df;
}

void require_positive_temperature(double temperature, const char* where) {
  if (!(temperature > 0.0) || std::isinf(temperature)) {
    throw validation_error(std::string(where) + ": needs finite T > 0");
  }
}

}  // namespace

Occupations steady_occupations(const SpectralData& spec, const BathPair& baths) {
  const int n = spec.size();
  Occupations out;
  out.n.resize(static_cast<std::size_t>(n), kNan);

  for (int k = 0; k < n; ++k) {
    const double g_left = spec.g_left[static_cast<std::size_t>(k)];
    const double g_right = spec.g_right[static_cast<std::size_t>(k)];
    const double eps = spec.eps[static_cast<std::size_t>(k)];

    if (g_left == 0.0 && g_right == 0.0) {
      out.decoupled.push_back(k);
      continue;
    }
    double& n_k = out.n[static_cast<std::size_t>(k)];
    if (g_left == 0.0) {
      n_k = fermi(eps, baths.right);
      continue;
    }
    if (g_right == 0.0) {
      n_k = fermi(eps, baths.left);
      continue;
    }
    const double chi_left = chi(eps, baths.left);
    const double chi_right = chi(eps, baths.right);
    const bool inf_left = std::isinf(chi_left);
    const bool inf_right = std::isinf(chi_right);
    if (inf_left && inf_right) {
      // Infinite chi always pairs with f = 1/2 (infinite T or eps = 0).
      n_k = 0.5;
    } else if (inf_left) {
      n_k = fermi(eps, baths.left);
    } else if (inf_right) {
      n_k = fermi(eps, baths.right);
    } else {
      const double w_left = g_left * chi_left;
      const double w_right = g_right * chi_right;
      n_k = (w_left * fermi(eps, baths.left) + w_right * fermi(eps, baths.right)) /
            (w_left + w_right);
    }
  }
  return out;
}

std::vector<ModeCurrent> mode_currents(const SpectralData& spec,
                                       const BathPair& baths, double gamma) {
  const int n = spec.size();
  std::vector<ModeCurrent> out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double eps = spec.eps[static_cast<std::size_t>(k)];
    const double kernel =
        gamma * particle_kernel(eps, spec.g_left[static_cast<std::size_t>(k)],
                                spec.g_right[static_cast<std::size_t>(k)], baths);
    out[static_cast<std::size_t>(k)] = ModeCurrent{eps, kernel, eps * kernel};
  }
  return out;
}

double particle_current(const SpectralData& spec, const BathPair& baths,
                        double gamma) {
  double total = 0.0;
  for (const ModeCurrent& mode : mode_currents(spec, baths, gamma)) {
    total += mode.particle;
  }
  return total;
}

double energy_current(const SpectralData& spec, const BathPair& baths,
                      double gamma) {
  double total = 0.0;
  for (const ModeCurrent& mode : mode_currents(spec, baths, gamma)) {
    total += mode.energy;
  }
  return total;
}

LinearResponse linear_response(const SpectralData& spec, double temperature) {
  require_positive_temperature(temperature, "transport: linear_response");
  double j1 = 0.0;
  double j2 = 0.0;
  for (int k = 0; k < spec.size(); ++k) {
    const double g_left = spec.g_left[static_cast<std::size_t>(k)];
    const double g_right = spec.g_right[static_cast<std::size_t>(k)];
    const double g_sum = g_left + g_right;
    if (g_left == 0.0 || g_right == 0.0) continue;
    const double eps = spec.eps[static_cast<std::size_t>(k)];
    const double kernel1 = chi_times_dfdT(eps, temperature);
    j1 += g_left * g_right / g_sum * kernel1;
    // d(chi)/dT * df/dT / 2 = (eps |eps| / 4 T^4) csch^2(|eps|/T)
    const double x = std::abs(eps) / temperature;
    double kernel2;
    if (eps == 0.0 || x > 700.0) {
      kernel2 = 0.0;
    } else {
      const double csch = 1.0 / std::sinh(x);
      kernel2 = eps * std::abs(eps) * csch * csch /
                (4.0 * temperature * temperature * temperature * temperature);
    }
    j2 += g_left * g_right * (g_right - g_left) / (g_sum * g_sum) * kernel2;
  }
  return LinearResponse{j1, j2};
}

RectificationResult rectify(const ChainSpec& chain, const BathPair& baths) {
  const SpectralData spec = diagonalize(chain);
  const double forward = energy_current(spec, baths, chain.gamma);
  const double reversed = energy_current(spec, baths.swapped(), chain.gamma);

  RectificationResult result{};
  result.forward = forward;
  result.reversed = reversed;
  result.degenerate_spectrum = spec.degenerate();
  result.same_sign = forward * reversed > 0.0;

  const double denom = std::min(forward, std::abs(reversed));
  if (denom == 0.0 || std::isnan(denom)) {
    result.factor = kNan;
    result.factor_defined = false;
  } else {
    result.factor = (forward + reversed) / denom;
    result.factor_defined = true;
  }
  return result;
}

CurrentPair asymptotic_currents(int sites, double h, double alpha, double gamma,
                                SpectrumCase which) {
  if (sites < 2) {
    throw validation_error("transport: asymptotic currents need N >= 2");
  }
  switch (which) {
    case SpectrumCase::kPositive:
      if (!(h > 0.0 && alpha > 0.0 && h > 2.0 * alpha)) {
        throw validation_error(
            "transport: positive-spectrum case requires h > 2 alpha > 0");
      }
      return CurrentPair{0.5 * gamma * (h + alpha), -0.5 * gamma * (h - alpha)};
    case SpectrumCase::kNegative:
      if (!(h < 0.0 && alpha > 0.0 && -h > 2.0 * alpha)) {
        throw validation_error(
            "transport: negative-spectrum case requires h < 0, |h| > 2 alpha > 0");
      }
      return CurrentPair{0.5 * gamma * (-h - alpha), -0.5 * gamma * (-h + alpha)};
    case SpectrumCase::kSplit: {
      if (!split_spectrum_condition(sites, h, alpha)) {
        throw validation_error(
            "transport: parameters do not split the spectrum");
      }
      const double prefactor =
          gamma / (sites * std::sin(std::numbers::pi / (2.0 * sites)));
      return CurrentPair{prefactor * (alpha + 0.5 * h),
                         -prefactor * (alpha - 0.5 * h)};
    }
  }
  throw validation_error("transport: unknown spectrum case");
}

CurrentPair limit_current_sums(const SpectralData& spec, double gamma,
                               std::optional<SpectrumCase> expected) {
  if (expected) {
    int positive = 0;
    int negative = 0;
    for (double eps : spec.eps) {
      if (eps > 0.0) ++positive;
      if (eps < 0.0) ++negative;
    }
    const int n = spec.size();
    const bool ok = (*expected == SpectrumCase::kPositive && positive == n) ||
                    (*expected == SpectrumCase::kNegative && negative == n) ||
                    (*expected == SpectrumCase::kSplit && n % 2 == 0 &&
                     positive == n / 2 && negative == n / 2);
    if (!ok) {
      throw validation_error(
          "transport: spectrum sign pattern does not match the claimed case (" +
          std::to_string(positive) + " positive, " + std::to_string(negative) +
          " negative of " + std::to_string(n) + ")");
    }
  }

  // Term-by-term this mirrors the mode sums of energy_current at
  // (infinite, zero) bath temperatures, so the two paths agree bit for bit.
  double forward = 0.0;
  double reversed = 0.0;
  for (int k = 0; k < spec.size(); ++k) {
    const double magnitude = std::abs(spec.eps[static_cast<std::size_t>(k)]);
    forward += magnitude *
               (gamma * (spec.g_right[static_cast<std::size_t>(k)] * 0.5));
    reversed += magnitude *
                (gamma * (spec.g_left[static_cast<std::size_t>(k)] * 0.5));
  }
  return CurrentPair{forward, -reversed};
}

}  // namespace xxchain
