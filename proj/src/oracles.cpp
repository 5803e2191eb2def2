#include "demflag/oracles.hpp"

#include <stdexcept>
#include <vector>

#include "demflag/dyck.hpp"
#include "demflag/flags.hpp"
#include "demflag/qseries.hpp"

namespace demflag {

QPolynomial km_determinant_poly(int k, int n, int m) {
  if (k < 0) throw std::invalid_argument("km_determinant_poly: negative k");
  if (n < 0) throw std::invalid_argument("km_determinant_poly: negative weight");
  if (n >= m) {
    throw std::domain_error("km_determinant_poly: hypothesis requires n < m");
  }
  QPolynomial total;
  for (int l = 0; l <= k; ++l) {
    for (int sigma = -l; sigma <= l; ++sigma) {
      const QPolynomial a = q_binomial(k - sigma * (m - 1), l + sigma);
      const QPolynomial b = q_binomial(k + sigma * (m - 1) - 1, l - sigma);
      const QPolynomial c =
          q_binomial(n + 1 + k - sigma * (m - 1), l + sigma).shifted(-2 * sigma * (n + 1));
      const QPolynomial d = q_binomial(n + k + sigma * (m - 1), l - sigma);
      const QPolynomial det = a * d - b * c;
      if (det.is_zero()) continue;
      total += det.shifted(l * l + sigma * (sigma * m + n + 1));
    }
  }
  return total;
}

BigInt bounded_partition_count(int max_parts, int max_part, int total) {
  if (total < 0) return 0;
  if (total == 0) return 1;
  if (max_parts <= 0 || max_part <= 0) return 0;
  // f(v, p, t) = f(v-1, p, t) + f(v, p-1, t-v): split on whether a part of
  // the current maximal size v occurs.
  std::vector<std::vector<BigInt>> table(
      static_cast<size_t>(max_parts) + 1, std::vector<BigInt>(static_cast<size_t>(total) + 1, 0));
  for (int p = 0; p <= max_parts; ++p) table[p][0] = 1;
  // After processing value v, table[p][t] holds partitions of t into at
  // most p parts each at most v; the sweep needs p ascending so that
  // table[p-1] is already updated for the current v.
  for (int v = 1; v <= max_part; ++v) {
    for (int p = 1; p <= max_parts; ++p) {
      for (int t = v; t <= total; ++t) {
        table[p][t] += table[p - 1][t - v];
      }
    }
  }
  return table[max_parts][total];
}

QPolynomial lpart_poly(int k, int n) {
  if (k < 0 || n < 0) throw std::invalid_argument("lpart_poly: negative argument");
  const int n1 = n / 2;
  const int top = k * (k + n);
  QPolynomial poly;
  for (int l = 0; l <= top; ++l) {
    poly.add_term(bounded_partition_count(k, n1, top - l), l);
  }
  return poly;
}

XSeries chebyshev_gf(int m, int n, int order, bool bounded_only) {
  if (m < 1) throw std::invalid_argument("chebyshev_gf: level must be positive");
  if (n < 0) throw std::invalid_argument("chebyshev_gf: weight must be non-negative");
  if (order < 0) throw std::invalid_argument("chebyshev_gf: negative order");
  if (bounded_only) {
    if (m < n) return XSeries::zero(order);
    return expand_rational(chebyshev_p(m - n), chebyshev_p(m + 1), order);
  }
  const int n0 = n % m;
  const int n1 = n / m;
  return expand_rational(chebyshev_p(m - n0 - 1), chebyshev_p(m).pow(n1 + 1), order);
}

namespace {

// Multiplicative inverse of a series with constant term 1, through q^order.
QPolynomial invert_unit_series(const QPolynomial& series, int order) {
  std::vector<BigInt> inv(static_cast<size_t>(order) + 1, 0);
  inv[0] = 1;
  for (int e = 1; e <= order; ++e) {
    BigInt acc = 0;
    for (int j = 1; j <= e; ++j) {
      const BigInt c = series.coeff(j);
      if (c != 0) acc += c * inv[e - j];
    }
    inv[e] = -acc;
  }
  QPolynomial out;
  for (int e = 0; e <= order; ++e) out.add_term(inv[e], e);
  return out;
}

}  // namespace

QPolynomial schur_principal_trunc(const HookShape& shape, int order) {
  if (shape.n < 0 || shape.k < 0) throw std::invalid_argument("schur: negative shape");
  if (order < 0) throw std::invalid_argument("schur: negative order");
  // Hook lengths of (n+k, k): row one gets n+k-j+1 plus one for each cell
  // with a leg below (j <= k); row two gets k-j+1.
  QPolynomial denominator(1);
  for (int j = 1; j <= shape.n + shape.k; ++j) {
    const int hook = shape.n + shape.k - j + 1 + (j <= shape.k ? 1 : 0);
    denominator *= QPolynomial(1) - QPolynomial::monomial(1, hook);
    denominator = denominator.truncated(order);
  }
  for (int j = 1; j <= shape.k; ++j) {
    denominator *= QPolynomial(1) - QPolynomial::monomial(1, shape.k - j + 1);
    denominator = denominator.truncated(order);
  }
  // n(lambda) = sum (i-1) lambda_i = k for the two-row shape.
  return invert_unit_series(denominator, order).shifted(shape.k).truncated(order);
}

QPolynomial schur_weyl_product_trunc(const HookShape& shape, int order) {
  const int s = shape.n + 2 * shape.k;
  const QPolynomial pochhammer = q_pochhammer(1, 1, 1, s, order);
  return (pochhammer * schur_principal_trunc(shape, order)).truncated(order);
}

QPolynomial mock_theta_series(MockThetaSelector selector, int order) {
  if (order < 0) throw std::invalid_argument("mock_theta_series: negative order");
  QPolynomial total;
  for (int j = 0;; ++j) {
    int lead = 0;
    QPolynomial factor;
    switch (selector) {
      case MockThetaSelector::kPhi0:
        lead = j * j;
        factor = q_pochhammer(-1, 1, 2, j, order - lead < 0 ? 0 : order - lead);
        break;
      case MockThetaSelector::kPhi1:
        lead = (j + 1) * (j + 1);
        factor = q_pochhammer(-1, 1, 2, j, order - lead < 0 ? 0 : order - lead);
        break;
      case MockThetaSelector::kPsi0:
        lead = (j + 1) * (j + 2) / 2;
        factor = q_pochhammer(-1, 1, 1, j, order - lead < 0 ? 0 : order - lead);
        break;
      case MockThetaSelector::kPsi1:
        lead = j * (j + 1) / 2;
        factor = q_pochhammer(-1, 1, 1, j, order - lead < 0 ? 0 : order - lead);
        break;
    }
    if (lead > order) break;
    total += factor.shifted(lead);
  }
  return total.truncated(order);
}

namespace {

// Accumulates, for every height-<=2 path ending at end_height, a term at
// exponent(comaj, length); stops extending the length once lower_bound(s),
// a floor for every exponent a path of length s can produce, exceeds
// `order`. In a height-<=2 path every maximal down-run has length <= 2 and
// contributes one descent, so a path with d down-steps has at least
// ceil(d/2) descents with distinct positive contributions:
// comaj >= t(t+1)/2 with t = ceil(d/2).
template <typename Exponent, typename Lower>
void accumulate_bounded_paths(int end_height, int order, const Exponent& exponent,
                              const Lower& lower_bound, QPolynomial& total) {
  EnumerateOptions options;
  options.height_bound = 2;
  for (int s = end_height;; s += 2) {
    const int d = (s - end_height) / 2;
    const int t = (d + 1) / 2;
    if (lower_bound(t * (t + 1) / 2, s) > order) break;
    for_each_path(s, end_height, options, [&](const DyckPath& path) {
      const int e = exponent(path.comaj(), s);
      if (e <= order) total.add_term(1, e);
    });
  }
}

}  // namespace

QPolynomial mock_theta_from_paths(MockThetaSelector selector, int order,
                                  bool literal_floor) {
  if (order < 0) throw std::invalid_argument("mock_theta_from_paths: negative order");
  const int big = order + 1;  // sentinel exponent for terms that never land
  const auto comaj_stat = [](int comaj, int) { return comaj; };
  const auto offset_stat = [](int comaj, int s) { return comaj + (s + 1) / 2; };
  QPolynomial total;
  switch (selector) {
    case MockThetaSelector::kPsi1:
      accumulate_bounded_paths(1, order, comaj_stat, comaj_stat, total);
      break;
    case MockThetaSelector::kPsi0:
      accumulate_bounded_paths(1, order, offset_stat, offset_stat, total);
      break;
    case MockThetaSelector::kPhi0:
      if (literal_floor) {
        // Printed form: coefficient of q^N counts comaj(P) = N over paths
        // ending at 2*(N mod 2), so a path lands on exponent comaj only
        // when the parity matches its end height.
        accumulate_bounded_paths(
            0, order, [big](int comaj, int) { return comaj % 2 == 0 ? comaj : big; },
            comaj_stat, total);
        accumulate_bounded_paths(
            2, order, [big](int comaj, int) { return comaj % 2 == 1 ? comaj : big; },
            comaj_stat, total);
      } else {
        const auto even_slot = [](int comaj, int) { return 2 * comaj; };
        const auto odd_slot = [](int comaj, int) { return 2 * comaj + 1; };
        accumulate_bounded_paths(0, order, even_slot, even_slot, total);
        accumulate_bounded_paths(2, order, odd_slot, odd_slot, total);
      }
      break;
    case MockThetaSelector::kPhi1:
      if (literal_floor) {
        accumulate_bounded_paths(
            2, order,
            [big, offset_stat](int comaj, int s) {
              const int stat = offset_stat(comaj, s) + 1;
              return stat % 2 == 0 ? stat : big;
            },
            offset_stat, total);
        accumulate_bounded_paths(
            0, order,
            [big, offset_stat](int comaj, int s) {
              const int stat = offset_stat(comaj, s);
              return stat % 2 == 1 ? stat : big;
            },
            offset_stat, total);
      } else {
        const auto even_slot = [offset_stat](int comaj, int s) {
          return 2 * (offset_stat(comaj, s) + 1);
        };
        const auto odd_slot = [offset_stat](int comaj, int s) {
          return 2 * offset_stat(comaj, s) + 1;
        };
        accumulate_bounded_paths(2, order, even_slot, even_slot, total);
        accumulate_bounded_paths(0, order, odd_slot, odd_slot, total);
      }
      break;
  }
  return total;
}

DimensionAuditResult dimension_audit(const Partition& xi, int m) {
  if (m < xi.largest()) {
    throw std::domain_error("dimension_audit: no level-m flag exists when m < xi_1");
  }
  DimensionAuditResult result;
  const int total_weight = xi.sum();
  for (int n = total_weight % 2; n <= total_weight; n += 2) {
    const BigInt multiplicity = fusion_flag_poly(xi, n, m).eval_at_one();
    if (multiplicity == 0) continue;
    BigInt dim = n % m + 1;
    for (int i = 0; i < n / m; ++i) dim *= m + 1;
    result.flag_side += multiplicity * dim;
  }
  result.product_side = 1;
  for (int part : xi.parts()) result.product_side *= part + 1;
  result.ok = result.flag_side == result.product_side;
  return result;
}

}  // namespace demflag
