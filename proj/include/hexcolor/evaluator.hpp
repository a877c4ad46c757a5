#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hexcolor/polynomial.hpp"
#include "hexcolor/rational.hpp"

namespace hexcolor {

/// k = a^2 + ab + b^2 with a > 0 and a >= b >= 0.
struct LoeschianDecomposition {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LoeschianDecomposition&, const LoeschianDecomposition&) = default;
};

/// All decompositions, ordered by decreasing a.  Empty iff k is not Löschian.
std::vector<LoeschianDecomposition> loeschian_decompositions(std::int64_t k);
bool is_loeschian(std::int64_t k);

/// Exact squared distance of the regular-hexagon coloring built from one
/// decomposition: 3 (a - 1)^2 / 4 when b = 0, otherwise
/// ((3a + 3b - 4)^2 + 3 (a - b)^2) / 16.
Fraction loeschian_dsq(const LoeschianDecomposition& dec);

/// Best regular-hexagon d^2 over all decompositions of k, if k is Löschian.
std::optional<Fraction> regular_dsq(std::int64_t k);
std::optional<double> regular_d(std::int64_t k);

/// Cubic whose largest real root is d^2 for k = n (n + 1), with
/// p = n (n - 1).  Coefficients are exact integers.
struct CubicSpec {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t a3 = 0;
  std::int64_t a2 = 0;
  std::int64_t a1 = 0;
  std::int64_t a0 = 0;

  Polynomial polynomial() const;
};

/// n with k = n (n + 1), found via the integer square root of 4k + 1.
std::optional<std::int64_t> pronic_index(std::int64_t k);
/// k + 1 - sqrt(4k + 1) in integer arithmetic; requires 4k + 1 to be a square.
std::optional<std::int64_t> pronic_p(std::int64_t k);

/// Throws DomainError unless k = n (n + 1) with n >= 2 and the coefficients
/// fit in 64 bits.
CubicSpec cubic_spec(std::int64_t k);

struct CubicRoot {
  CubicSpec spec;
  double dsq = 0.0;
  /// The two smaller real roots.
  std::vector<double> discarded;
};

CubicRoot cubic_f(std::int64_t k);

/// One of the four quartics whose smaller real root is d^2 for k in
/// {11, 23, 45, 187}.  Coefficients are kept as exact decimal literals,
/// leading term first (the constant term for k = 187 exceeds 64 bits).
struct QuarticSpec {
  int k = 0;
  std::array<std::string_view, 5> coefficients;

  Polynomial polynomial() const;
};

const std::array<QuarticSpec, 4>& quartic_specs();
bool has_quartic(std::int64_t k);
/// Throws DomainError for k outside {11, 23, 45, 187}.
const QuarticSpec& quartic_spec(std::int64_t k);
double quartic_dsq(std::int64_t k);

}  // namespace hexcolor
