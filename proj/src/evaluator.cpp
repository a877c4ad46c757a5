#include "hexcolor/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "hexcolor/errors.hpp"

namespace hexcolor {

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t narrow(__int128 v, std::int64_t k) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("cubic coefficients overflow 64 bits for k=" + std::to_string(k));
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::vector<LoeschianDecomposition> loeschian_decompositions(std::int64_t k) {
  if (k < 1) throw DomainError("Löschian decomposition needs k >= 1");
  std::vector<LoeschianDecomposition> out;
  // a >= b implies 3a^2 >= k >= a^2.
  for (std::int64_t a = isqrt(k); 3 * a * a >= k; --a) {
    const std::int64_t rest = k - a * a;
    // b^2 + a b - rest = 0
    const std::int64_t disc = a * a + 4 * rest;
    const std::int64_t root = isqrt(disc);
    if (root * root != disc || (root - a) % 2 != 0) continue;
    const std::int64_t b = (root - a) / 2;
    if (b >= 0 && b <= a) out.push_back({a, b});
  }
  return out;
}

bool is_loeschian(std::int64_t k) { return !loeschian_decompositions(k).empty(); }

Fraction loeschian_dsq(const LoeschianDecomposition& dec) {
  if (dec.b == 0) return Fraction(3 * (dec.a - 1) * (dec.a - 1), 4);
  const std::int64_t u = 3 * dec.a + 3 * dec.b - 4;
  const std::int64_t v = dec.a - dec.b;
  return Fraction(u * u + 3 * v * v, 16);
}

std::optional<Fraction> regular_dsq(std::int64_t k) {
  std::optional<Fraction> best;
  for (const auto& dec : loeschian_decompositions(k)) {
    const Fraction f = loeschian_dsq(dec);
    if (!best || static_cast<__int128>(f.num) * best->den > static_cast<__int128>(best->num) * f.den) best = f;
  }
  return best;
}

std::optional<double> regular_d(std::int64_t k) {
  const auto dsq = regular_dsq(k);
  if (!dsq) return std::nullopt;
  return std::sqrt(static_cast<double>(dsq->precise_value()));
}

Polynomial CubicSpec::polynomial() const {
  return Polynomial::from_descending({static_cast<long double>(a3), static_cast<long double>(a2),
                                      static_cast<long double>(a1), static_cast<long double>(a0)});
}

std::optional<std::int64_t> pronic_index(std::int64_t k) {
  if (k < 0 || k > std::numeric_limits<std::int64_t>::max() / 4 - 1) return std::nullopt;
  const std::int64_t s = isqrt(4 * k + 1);
  if (s * s != 4 * k + 1) return std::nullopt;
  return (s - 1) / 2;
}

std::optional<std::int64_t> pronic_p(std::int64_t k) {
  if (!pronic_index(k)) return std::nullopt;
  return k + 1 - isqrt(4 * k + 1);
}

CubicSpec cubic_spec(std::int64_t k) {
  const auto n = pronic_index(k);
  if (!n || *n < 2) throw DomainError("k=" + std::to_string(k) + " is not of the form n(n+1) with n >= 2");
  CubicSpec spec;
  spec.k = k;
  spec.n = *n;
  spec.p = *n * (*n - 1);
  const __int128 p = spec.p;
  spec.a3 = narrow(4 * p * (p * p + 3 * p + 1), k);
  spec.a2 = narrow(-3 * p * p * p * p - 8 * p * p * p + 2 * p * p + 4 * p + 1, k);
  spec.a1 = narrow(2 * p * p * (p * p - 2 * p - 1), k);
  spec.a0 = narrow(p * p * p * p, k);
  return spec;
}

CubicRoot cubic_f(std::int64_t k) {
  CubicRoot out;
  out.spec = cubic_spec(k);
  const auto roots = out.spec.polynomial().real_roots();
  if (roots.empty()) throw DomainError("cubic for k=" + std::to_string(k) + " has no real root");
  out.dsq = static_cast<double>(roots.back());
  for (std::size_t m = 0; m + 1 < roots.size(); ++m) out.discarded.push_back(static_cast<double>(roots[m]));
  return out;
}

Polynomial QuarticSpec::polynomial() const {
  std::vector<long double> desc;
  for (std::string_view c : coefficients) desc.push_back(std::strtold(std::string(c).c_str(), nullptr));
  return Polynomial::from_descending(std::move(desc));
}

const std::array<QuarticSpec, 4>& quartic_specs() {
  static const std::array<QuarticSpec, 4> specs{{
      {11, {"25600", "-1459616", "8840377", "-18735876", "13623552"}},
      {23, {"97344", "-14493200", "287680857", "-2041299600", "4968218624"}},
      {45, {"548800", "-70030800", "2721532527", "-44612184348", "279110188800"}},
      {187,
       {"391936098304", "-214522652834752", "43720132398169569", "-4062662189783485600",
        "145700736445997574400"}},
  }};
  return specs;
}

bool has_quartic(std::int64_t k) {
  const auto& specs = quartic_specs();
  return std::any_of(specs.begin(), specs.end(), [k](const QuarticSpec& s) { return s.k == k; });
}

const QuarticSpec& quartic_spec(std::int64_t k) {
  for (const auto& s : quartic_specs()) {
    if (s.k == k) return s;
  }
  throw DomainError("no quartic closed form for k=" + std::to_string(k));
}

double quartic_dsq(std::int64_t k) {
  const auto roots = quartic_spec(k).polynomial().real_roots();
  if (roots.empty()) throw DomainError("quartic for k=" + std::to_string(k) + " has no real root");
  return static_cast<double>(roots.front());
}

}  // namespace hexcolor
