#include "demflag/qpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace demflag {

QPolynomial::QPolynomial(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

QPolynomial::QPolynomial(const BigInt& constant) {
  if (constant != 0) terms_[0] = constant;
}

QPolynomial QPolynomial::monomial(const BigInt& coefficient, int exponent) {
  QPolynomial p;
  if (coefficient != 0) p.terms_[exponent] = coefficient;
  return p;
}

bool QPolynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int QPolynomial::degree() const {
  if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

int QPolynomial::mindeg() const {
  if (terms_.empty()) throw std::domain_error("mindeg of the zero polynomial");
  return terms_.begin()->first;
}

bool QPolynomial::is_monic() const {
  return !terms_.empty() && terms_.rbegin()->second == 1;
}

BigInt QPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) {
    (void)e;
    sum += c;
  }
  return sum;
}

bool QPolynomial::support_is_interval() const {
  if (terms_.empty()) return true;
  return terms_.rbegin()->first - terms_.begin()->first + 1 ==
         static_cast<int>(terms_.size());
}

void QPolynomial::add_term(const BigInt& c, int exponent) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  *this = *this * other;
  return *this;
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

QPolynomial QPolynomial::shifted(int k) const {
  QPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

QPolynomial QPolynomial::truncated(int max_exponent) const {
  QPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e > max_exponent) break;
    r.terms_[e] = c;
  }
  return r;
}

QPolynomial QPolynomial::divided_exact(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
  QPolynomial quotient;
  QPolynomial remainder = *this;
  const int d_min = divisor.mindeg();
  const BigInt& d_low = divisor.terms_.begin()->second;
  // Eliminate from the lowest exponent upward; each step strictly raises
  // remainder.mindeg(), so exactness is detected by exhaustion.
  while (!remainder.is_zero()) {
    const int e = remainder.mindeg();
    const BigInt c = remainder.terms_.begin()->second;
    if (c % d_low != 0 || e - d_min + divisor.degree() > remainder.degree()) {
      throw std::domain_error("inexact polynomial division");
    }
    QPolynomial t = monomial(c / d_low, e - d_min);
    quotient += t;
    remainder -= t * divisor;
  }
  return quotient;
}

QPolynomial operator+(QPolynomial a, const QPolynomial& b) {
  a += b;
  return a;
}

QPolynomial operator-(QPolynomial a, const QPolynomial& b) {
  a -= b;
  return a;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      r.add_term(ca * cb, ea + eb);
    }
  }
  return r;
}

std::string QPolynomial::to_string(bool latex) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << abs_c.str();
    } else {
      if (abs_c != 1) out << abs_c.str();
      out << "q";
      if (e != 1) {
        if (latex) {
          out << "^{" << e << "}";
        } else {
          out << "^" << e;
        }
      }
    }
  }
  return out.str();
}

}  // namespace demflag
