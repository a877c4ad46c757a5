#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace hexcolor {

/// Reduced fraction with positive denominator.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  long double precise_value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
  std::string str() const;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// First continued-fraction convergent p/q of x (smallest q) with
/// q <= max_den and |x - p/q| <= tol.
std::optional<Fraction> rational_reconstruct(double x, std::int64_t max_den, double tol = 1e-9);

/// Relative precision assumed for a polished d^2 value.
inline constexpr double kRecoveryRelTol = 1e-13;

/// Exact rational behind a double accurate to about kRecoveryRelTol, or
/// nothing.  The convergent found within that tolerance is accepted only if
/// it is far better than a generic approximation of its size,
/// q^2 |x - p/q| <= 1e-3, so irrational inputs are rejected unless they sit
/// next to an unusually large partial quotient.
std::optional<Fraction> recover_exact_rational(double x, std::int64_t max_den = 1000000000);

}  // namespace hexcolor
