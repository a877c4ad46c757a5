#pragma once

#include <vector>

namespace hexcolor {

/// Real polynomial with long double coefficients, lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long double> ascending);
  /// Coefficients from the leading term down, as usually written.
  static Polynomial from_descending(std::vector<long double> descending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<long double>& coefficients() const { return coeffs_; }
  long double operator()(long double x) const;
  Polynomial derivative() const;
  /// 1 + max |c_i / c_n|: every real root lies strictly inside (-B, B).
  long double cauchy_bound() const;

  /// Simple real roots in increasing order.  Roots are isolated between the
  /// real roots of the derivative, bracketed by bisection to a relative
  /// width of 1e-8 and polished with Newton steps kept inside the bracket.
  /// Even-multiplicity roots without a sign change are not reported.
  std::vector<long double> real_roots() const;

 private:
  std::vector<long double> coeffs_;
};

}  // namespace hexcolor
