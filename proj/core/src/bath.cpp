#include "xxchain/bath.hpp"

#include <cmath>
#include <limits>

#include "xxchain/errors.hpp"

namespace xxchain {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// |eps/T| beyond which exponentials saturate; short-circuits to the T = 0
// branch values.
constexpr double kSaturation = 700.0;

}  // namespace

Temperature::Temperature(double v) : kind_(Kind::kFinite), value_(v) {
  if (std::isnan(v) || v < 0.0) {
    throw validation_error("bath: temperature must be nonnegative");
  }
  if (v == 0.0) {
    kind_ = Kind::kZero;
  } else if (std::isinf(v)) {
    kind_ = Kind::kInfinite;
    value_ = kInf;
  }
}

Temperature Temperature::zero() { return Temperature(Kind::kZero, 0.0); }
Temperature Temperature::infinite() { return Temperature(Kind::kInfinite, kInf); }

Temperature Temperature::finite(double v) {
  if (!(v > 0.0) || std::isinf(v)) {
    throw validation_error("bath: finite temperature must satisfy 0 < T < inf");
  }
  return Temperature(Kind::kFinite, v);
}

double Temperature::value() const { return value_; }

double fermi(double eps, Temperature t) {
  if (t.is_infinite()) return 0.5;
  if (t.is_zero()) {
    if (eps > 0.0) return 0.0;
    if (eps < 0.0) return 1.0;
    return 0.5;
  }
  const double x = eps / t.value();
  if (x > kSaturation) return 0.0;
  if (x < -kSaturation) return 1.0;
  if (x > 0.0) {
    const double z = std::exp(-x);
    return z / (1.0 + z);
  }
  return 1.0 / (std::exp(x) + 1.0);
}

double fermi_difference(double eps, Temperature left, Temperature right) {
  if (left == right) return 0.0;
  if (!left.is_finite() || !right.is_finite()) {
    return fermi(eps, left) - fermi(eps, right);
  }
  // f = (1 - tanh(eps/2T))/2, so the difference reduces to
  // sinh(a - b) / (2 cosh a cosh b) with a = eps/2T_R, b = eps/2T_L.
  const double a = 0.5 * eps / right.value();
  const double b = 0.5 * eps / left.value();
  if (std::abs(a) > 0.5 * kSaturation || std::abs(b) > 0.5 * kSaturation) {
    return fermi(eps, left) - fermi(eps, right);
  }
  return std::sinh(a - b) / (2.0 * std::cosh(a) * std::cosh(b));
}

double bose(double omega, double temperature) {
  if (!(temperature > 0.0) || std::isinf(temperature)) {
    throw validation_error("bath: Bose occupation needs finite T > 0");
  }
  const double x = omega / temperature;
  if (x > kSaturation) return 0.0;
  return 1.0 / std::expm1(x);
}

double chi(double eps, Temperature t) {
  if (t.is_infinite()) return kInf;
  if (t.is_zero()) return eps != 0.0 ? 1.0 : kInf;
  if (eps == 0.0) return kInf;
  const double x = std::abs(eps) / (2.0 * t.value());
  if (x > 0.5 * kSaturation) return 1.0;
  return 1.0 / std::tanh(x);
}

double gamma_rate(double omega, Temperature t, double gamma) {
  if (!(gamma > 0.0)) {
    throw validation_error("bath: rate constant gamma must be positive");
  }
  if (omega == 0.0) {
    throw validation_error(
        "bath: Gamma(0) is undefined (Bose occupation diverges)");
  }
  if (t.is_zero()) return omega > 0.0 ? gamma : 0.0;
  if (t.is_infinite()) return kInf;
  const double n = bose(std::abs(omega), t.value());
  return omega > 0.0 ? gamma * (1.0 + n) : gamma * n;
}

double chi_times_dfdT(double eps, double temperature) {
  if (!(temperature > 0.0) || std::isinf(temperature)) {
    throw validation_error("bath: chi_times_dfdT needs finite T > 0");
  }
  if (eps == 0.0) return 0.5 / temperature;
  const double x = std::abs(eps) / temperature;
  if (x > kSaturation) return 0.0;
  return eps / (2.0 * temperature * temperature * std::sinh(x));
}

}  // namespace xxchain
