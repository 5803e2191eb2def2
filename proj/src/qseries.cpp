#include "demflag/qseries.hpp"

#include <stdexcept>

namespace demflag {

QPolynomial q_binomial(int n, int m) {
  if (m == 0) return n >= 0 ? QPolynomial(1) : QPolynomial(0);
  if (m < 0 || n < m) return QPolynomial(0);
  // (1-q^{n-m+1})...(1-q^n) / (1-q)...(1-q^m), divided factor by factor;
  // every partial quotient is itself a Gaussian binomial, so each division
  // is exact.
  QPolynomial result(1);
  for (int i = 1; i <= m; ++i) {
    QPolynomial numerator = QPolynomial(1) - QPolynomial::monomial(1, n - m + i);
    QPolynomial denominator = QPolynomial(1) - QPolynomial::monomial(1, i);
    result = (result * numerator).divided_exact(denominator);
  }
  return result;
}

QPolynomial q_pochhammer(int sign, int base_exponent, int step, int n, int order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("q_pochhammer: sign must be +1 or -1");
  if (base_exponent < 1) throw std::invalid_argument("q_pochhammer: base exponent must be positive");
  if (step < 1) throw std::invalid_argument("q_pochhammer: step must be positive");
  if (n < 0) throw std::invalid_argument("q_pochhammer: negative product length");
  QPolynomial result(1);
  for (int i = 0; i < n; ++i) {
    const int e = base_exponent + step * i;
    if (order != kNoTruncation && e > order) break;  // all later factors are 1 mod q^{order+1}
    result *= QPolynomial(1) - QPolynomial::monomial(sign, e);
    if (order != kNoTruncation) result = result.truncated(order);
  }
  return result;
}

}  // namespace demflag
