#include "hexcolor/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace hexcolor {

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Fraction::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace hexcolor

namespace hexcolor {

std::optional<Fraction> rational_reconstruct(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x) || max_den < 1) return std::nullopt;
  const long double target = x;
  long double rem = target;
  __int128 h_prev = 1, h_prev2 = 0;
  __int128 k_prev = 0, k_prev2 = 1;
  for (int term = 0; term < 96; ++term) {
    const long double a_ld = std::floor(rem);
    if (std::abs(a_ld) > 1e30L) break;
    const auto a = static_cast<__int128>(a_ld);
    const __int128 h = a * h_prev + h_prev2;
    const __int128 k = a * k_prev + k_prev2;
    if (k > max_den || h > std::numeric_limits<std::int64_t>::max() || h < std::numeric_limits<std::int64_t>::min()) {
      break;
    }
    const long double approx = static_cast<long double>(h) / static_cast<long double>(k);
    if (std::abs(target - approx) <= tol) return Fraction(static_cast<std::int64_t>(h), static_cast<std::int64_t>(k));
    const long double frac = rem - a_ld;
    if (frac <= 0.0L) break;
    rem = 1.0L / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

std::optional<Fraction> recover_exact_rational(double x, std::int64_t max_den) {
  const double tol = kRecoveryRelTol * std::max(1.0, std::abs(x));
  const auto f = rational_reconstruct(x, max_den, tol);
  if (!f) return std::nullopt;
  const long double q = static_cast<long double>(f->den);
  const long double err = std::abs(static_cast<long double>(x) - f->precise_value());
  if (q * q * err > 1e-3L) return std::nullopt;
  return f;
}

}  // namespace hexcolor
