#pragma once

#include <map>
#include <string>

#include "demflag/bigint.hpp"

namespace demflag {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Terms are stored sparsely as exponent -> coefficient; zero coefficients
/// are never stored, so the zero polynomial has an empty term map. Exponents
/// may be negative. Values are immutable in spirit: every operation returns
/// a new polynomial, and const instances are safe to share across threads.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(long long constant);  // NOLINT(google-explicit-constructor)
  explicit QPolynomial(const BigInt& constant);

  /// coefficient * q^exponent
  static QPolynomial monomial(const BigInt& coefficient, int exponent);
  static QPolynomial one() { return QPolynomial(1); }
  static QPolynomial q() { return monomial(1, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Largest exponent with nonzero coefficient. Throws std::domain_error on
  /// the zero polynomial, as does mindeg().
  int degree() const;
  int mindeg() const;

  /// Leading coefficient is exactly 1. The zero polynomial is not monic.
  bool is_monic() const;

  BigInt coeff(int exponent) const;
  BigInt eval_at_one() const;

  const std::map<int, BigInt>& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// True when the exponents carrying nonzero coefficients are consecutive
  /// integers. Vacuously true for the zero polynomial.
  bool support_is_interval() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);

  QPolynomial operator-() const;

  /// Multiplication by q^k (k may be negative).
  QPolynomial shifted(int k) const;

  /// Drops all terms with exponent > max_exponent.
  QPolynomial truncated(int max_exponent) const;

  /// Exact division; throws std::domain_error when the divisor does not
  /// divide this polynomial exactly (including division by zero).
  QPolynomial divided_exact(const QPolynomial& divisor) const;

  /// Adds c * q^exponent in place.
  void add_term(const BigInt& c, int exponent);

  bool operator==(const QPolynomial& other) const { return terms_ == other.terms_; }

  /// Plain-text rendering, e.g. "q^3 + q^4", "1 - 2q^2", "q^-1". The latex
  /// flag braces exponents: "q^{3} + q^{4}".
  std::string to_string(bool latex = false) const;

 private:
  std::map<int, BigInt> terms_;
};

QPolynomial operator+(QPolynomial a, const QPolynomial& b);
QPolynomial operator-(QPolynomial a, const QPolynomial& b);
QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);

}  // namespace demflag
