#include "demflag/xpolynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace demflag {

namespace {
const QPolynomial kZero;
}

XPolynomial::XPolynomial(std::vector<QPolynomial> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

XPolynomial XPolynomial::constant(QPolynomial c) {
  XPolynomial p;
  p.coefficients_.push_back(std::move(c));
  p.trim();
  return p;
}

void XPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

const QPolynomial& XPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return kZero;
  return coefficients_[k];
}

XPolynomial XPolynomial::operator+(const XPolynomial& other) const {
  std::vector<QPolynomial> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = coeff(static_cast<int>(k)) + other.coeff(static_cast<int>(k));
  }
  return XPolynomial(std::move(out));
}

XPolynomial XPolynomial::operator-(const XPolynomial& other) const {
  std::vector<QPolynomial> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (size_t k = 0; k < out.size(); ++k) {
    out[k] = coeff(static_cast<int>(k)) - other.coeff(static_cast<int>(k));
  }
  return XPolynomial(std::move(out));
}

XPolynomial XPolynomial::operator*(const XPolynomial& other) const {
  if (is_zero() || other.is_zero()) return XPolynomial();
  std::vector<QPolynomial> out(coefficients_.size() + other.coefficients_.size() - 1);
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    for (size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return XPolynomial(std::move(out));
}

XPolynomial XPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("XPolynomial::pow: negative exponent");
  XPolynomial result = XPolynomial::constant(QPolynomial(1));
  for (int i = 0; i < e; ++i) result = result * *this;
  return result;
}

XSeries XSeries::zero(int order) {
  XSeries s;
  s.order = order;
  s.coefficients.assign(order + 1, QPolynomial());
  return s;
}

const QPolynomial& XSeries::coeff(int k) const {
  if (k < 0 || k > order) return kZero;
  return coefficients[k];
}

XPolynomial chebyshev_p(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_p: negative index");
  XPolynomial prev2 = XPolynomial::constant(QPolynomial(1));  // p_0
  if (n == 0) return prev2;
  XPolynomial prev1 = prev2;  // p_1
  const XPolynomial x({QPolynomial(0), QPolynomial(1)});
  for (int i = 2; i <= n; ++i) {
    XPolynomial next = prev1 - x * prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

XSeries expand_rational(const XPolynomial& numerator, const XPolynomial& denominator,
                        int order) {
  if (order < 0) throw std::invalid_argument("expand_rational: negative order");
  const QPolynomial& d0 = denominator.coeff(0);
  const bool plus_one = d0.is_one();
  const bool minus_one = (-d0).is_one();
  if (!plus_one && !minus_one) {
    throw std::domain_error("expand_rational: denominator constant term is not a unit");
  }
  XSeries s = XSeries::zero(order);
  for (int k = 0; k <= order; ++k) {
    QPolynomial acc = numerator.coeff(k);
    for (int j = 1; j <= k; ++j) {
      acc -= denominator.coeff(j) * s.coefficients[k - j];
    }
    s.coefficients[k] = plus_one ? acc : -acc;
  }
  return s;
}

XSeries multiply_truncated(const XSeries& s, const XPolynomial& p) {
  XSeries out = XSeries::zero(s.order);
  for (int k = 0; k <= s.order; ++k) {
    QPolynomial acc;
    for (int j = 0; j <= std::min(k, p.degree()); ++j) {
      acc += p.coeff(j) * s.coefficients[k - j];
    }
    out.coefficients[k] = std::move(acc);
  }
  return out;
}

namespace {

std::string render_terms(const std::vector<QPolynomial>& coeffs, bool latex,
                         bool series, int order) {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs[k].to_string(latex) << ")";
    if (k == 1) out << "x";
    if (k > 1) out << (latex ? "x^{" : "x^") << k << (latex ? "}" : "");
  }
  if (first) out << "0";
  if (series) out << " + O(" << (latex ? "x^{" : "x^") << order + 1 << (latex ? "})" : ")");
  return out.str();
}

}  // namespace

std::string XPolynomial::to_string(bool latex) const {
  return render_terms(coefficients_, latex, false, 0);
}

std::string XSeries::to_string(bool latex) const {
  return render_terms(coefficients, latex, true, order);
}

}  // namespace demflag
