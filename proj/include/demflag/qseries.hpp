#pragma once

#include "demflag/qpolynomial.hpp"

namespace demflag {

/// Pass as `order` to keep every term of a q-Pochhammer product.
inline constexpr int kNoTruncation = -1;

/// Gaussian binomial coefficient with the out-of-range conventions
///   [n choose 0] = 1 for n >= 0,  [n choose m] = 0 otherwise (m < 0,
///   n < m, or n < 0), and the product form for n >= m > 0.
QPolynomial q_binomial(int n, int m);

/// prod_{i=0}^{n-1} (1 - sign * q^{base_exponent + step*i}), truncated to
/// exponents <= order (kNoTruncation keeps everything). sign must be +1 or
/// -1; base_exponent and step must be positive; n < 0 throws.
QPolynomial q_pochhammer(int sign, int base_exponent, int step, int n,
                         int order = kNoTruncation);

}  // namespace demflag
