#pragma once

#include <vector>

#include "demflag/qpolynomial.hpp"

namespace demflag {

/// Polynomial in x whose coefficients are QPolynomials. Coefficients are
/// stored densely by x-exponent with trailing zeros trimmed.
class XPolynomial {
 public:
  XPolynomial() = default;
  explicit XPolynomial(std::vector<QPolynomial> coefficients);
  static XPolynomial constant(QPolynomial c);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree in x; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const QPolynomial& coeff(int k) const;

  XPolynomial operator+(const XPolynomial& other) const;
  XPolynomial operator-(const XPolynomial& other) const;
  XPolynomial operator*(const XPolynomial& other) const;
  XPolynomial pow(int e) const;

  bool operator==(const XPolynomial& other) const = default;

  std::string to_string(bool latex = false) const;

 private:
  void trim();
  std::vector<QPolynomial> coefficients_;
};

/// Truncated power series in x over QPolynomials; exactly order+1
/// coefficients, for x^0 .. x^order.
struct XSeries {
  int order = 0;
  std::vector<QPolynomial> coefficients;

  static XSeries zero(int order);
  const QPolynomial& coeff(int k) const;

  bool operator==(const XSeries& other) const = default;
  std::string to_string(bool latex = false) const;
};

/// p_0 = p_1 = 1, p_n = p_{n-1} - x * p_{n-2}; rescaled Chebyshev
/// polynomials of the second kind.
XPolynomial chebyshev_p(int n);

/// Series S with S * denominator == numerator up to x^order, computed by
/// exact long division. The denominator's x^0 coefficient must be the
/// constant 1 or -1; anything else throws std::domain_error.
XSeries expand_rational(const XPolynomial& numerator, const XPolynomial& denominator,
                        int order);

/// S * p, truncated back to S.order (used to check expand_rational).
XSeries multiply_truncated(const XSeries& s, const XPolynomial& p);

}  // namespace demflag
