// bath.hpp — temperature-dependent scalar kernels: Fermi/Bose occupations,
// the emission/absorption rate Gamma(omega) and the chi = coth(|eps|/2T)
// function, with exact zero- and infinite-temperature limits

#pragma once

namespace xxchain {

// A bath temperature. Zero and infinite are distinguished values so the
// limiting results are computed exactly instead of through large or tiny
// floats. Finite temperatures are strictly positive.
class Temperature {
 public:
  // Accepts v > 0 (finite), v == 0 (the zero limit) and +infinity.
  explicit Temperature(double v);

  static Temperature zero();
  static Temperature infinite();
  static Temperature finite(double v);

  bool is_zero() const { return kind_ == Kind::kZero; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_finite() const { return kind_ == Kind::kFinite; }

  // 0, the finite value, or +infinity.
  double value() const;

  friend bool operator==(const Temperature&, const Temperature&) = default;

 private:
  enum class Kind { kZero, kFinite, kInfinite };
  Temperature(Kind kind, double v) : kind_(kind), value_(v) {}

  Kind kind_;
  double value_;
};

struct BathPair {
  Temperature left;
  Temperature right;

  BathPair swapped() const { return BathPair{right, left}; }
};

// Fermi-Dirac occupation 1/(e^{eps/T} + 1). Overflow-safe; exact limits:
// 1/2 at infinite T, a unit step (with value 1/2 at eps = 0) at T = 0.
double fermi(double eps, Temperature t);

// f(eps, left) - f(eps, right), evaluated without cancellation through
// sinh(a-b)/(2 cosh a cosh b). Exactly zero for equal temperatures.
double fermi_difference(double eps, Temperature left, Temperature right);

// Bose-Einstein occupation 1/(e^{omega/T} - 1) for finite T > 0, omega != 0.
double bose(double omega, double temperature);

// chi = coth(|eps| / 2T) = 2 n(|eps|) + 1. Returns +infinity at infinite
// temperature or at eps == 0 with T > 0; returns exactly 1 at T = 0 with
// eps != 0.
double chi(double eps, Temperature t);

// Gamma(omega): gamma (1 + n(omega)) for omega > 0, gamma n(-omega) for
// omega < 0. At T = 0 this is gamma for emission and 0 for absorption.
// omega == 0 is rejected (the Bose occupation diverges).
double gamma_rate(double omega, Temperature t, double gamma);

// The linear-response kernel chi * df/dT = (eps / 2T^2) csch(|eps|/T),
// for finite T > 0. The eps -> 0 limit from above, 1/(2T), is returned at
// eps == 0.
double chi_times_dfdT(double eps, double temperature);

}  // namespace xxchain
