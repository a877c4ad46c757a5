#include "hexcolor/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hexcolor {

namespace {

// Root of p inside [lo, hi] given p(lo) and p(hi) of opposite sign.
long double bracketed_root(const Polynomial& p, const Polynomial& dp, long double lo, long double hi) {
  long double flo = p(lo);
  for (int iter = 0; iter < 400 && hi - lo > 1e-8L * std::max(1.0L, std::abs(lo)); ++iter) {
    const long double mid = 0.5L * (lo + hi);
    const long double fm = p(mid);
    if (fm == 0.0L) return mid;
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  long double x = 0.5L * (lo + hi);
  for (int iter = 0; iter < 60; ++iter) {
    const long double fx = p(x);
    if (fx == 0.0L) break;
    if ((fx < 0.0L) == (flo < 0.0L)) {
      lo = x;
    } else {
      hi = x;
    }
    const long double slope = dp(x);
    long double next = slope != 0.0L ? x - fx / slope : 0.5L * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace

Polynomial::Polynomial(std::vector<long double> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0.0L) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0L);
}

Polynomial Polynomial::from_descending(std::vector<long double> descending) {
  std::reverse(descending.begin(), descending.end());
  return Polynomial(std::move(descending));
}

long double Polynomial::operator()(long double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial({0.0L});
  std::vector<long double> d(coeffs_.size() - 1);
  for (std::size_t m = 1; m < coeffs_.size(); ++m) d[m - 1] = static_cast<long double>(m) * coeffs_[m];
  return Polynomial(std::move(d));
}

long double Polynomial::cauchy_bound() const {
  if (degree() < 1) throw std::domain_error("Cauchy bound of a constant polynomial");
  const long double lead = std::abs(coeffs_.back());
  long double worst = 0.0L;
  for (std::size_t m = 0; m + 1 < coeffs_.size(); ++m) worst = std::max(worst, std::abs(coeffs_[m]) / lead);
  return 1.0L + worst;
}

std::vector<long double> Polynomial::real_roots() const {
  const int n = degree();
  if (n < 1) return {};
  if (n == 1) return {-coeffs_[0] / coeffs_[1]};

  const Polynomial dp = derivative();
  const long double bound = cauchy_bound();
  std::vector<long double> cuts{-bound};
  for (long double c : dp.real_roots()) {
    if (c > -bound && c < bound) cuts.push_back(c);
  }
  cuts.push_back(bound);

  std::vector<long double> roots;
  for (std::size_t m = 0; m + 1 < cuts.size(); ++m) {
    const long double lo = cuts[m];
    const long double hi = cuts[m + 1];
    const long double flo = (*this)(lo);
    const long double fhi = (*this)(hi);
    if (flo == 0.0L) {
      if (roots.empty() || roots.back() != lo) roots.push_back(lo);
      continue;
    }
    if (fhi == 0.0L) {
      roots.push_back(hi);
      continue;
    }
    if ((flo < 0.0L) != (fhi < 0.0L)) roots.push_back(bracketed_root(*this, dp, lo, hi));
  }
  return roots;
}

}  // namespace hexcolor
