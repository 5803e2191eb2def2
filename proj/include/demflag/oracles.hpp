#pragma once

#include "demflag/bigint.hpp"
#include "demflag/partition.hpp"
#include "demflag/qpolynomial.hpp"
#include "demflag/xpolynomial.hpp"

namespace demflag {

// Independent routes to the flag polynomials. Each operation here computes
// its value without touching the path enumerator, so exact agreement with
// the flags module is a meaningful cross-check.

/// Determinant formula for V^{1->m}_{n+2k,n}(q) in the regime n < m:
/// double sum over l = 0..k, sigma = -l..l of
/// q^{l^2 + sigma(sigma*m + n + 1)} times the 2x2 Gaussian-binomial
/// determinant whose lower-left entry carries the Laurent factor
/// q^{-2*sigma(n+1)}. Throws when n >= m.
QPolynomial km_determinant_poly(int k, int n, int m);

/// Number of partitions of `total` into at most max_parts parts, each at
/// most max_part, by dynamic programming.
BigInt bounded_partition_count(int max_parts, int max_part, int total);

/// Level-2 partition formula: sum over l of
/// |partitions of k(k+n)-l with <= k parts bounded by floor(n/2)| * q^l;
/// equals weyl_flag_poly(n+2k, n, 2).
QPolynomial lpart_poly(int k, int n);

/// Chebyshev generating functions for numerical path counts.
/// bounded_only: expansion of p_{m-n}/p_{m+1}; x^k counts paths of length
///   n+2k ending at n with height <= m (zero series when m < n).
/// general: expansion of p_{m-n0-1}/p_m^{n1+1}; x^k counts admissible
///   paths, i.e. weyl_flag_poly(n+2k, n, m) at q = 1.
XSeries chebyshev_gf(int m, int n, int order, bool bounded_only);

/// Two-row shape lambda = (n+k, k).
struct HookShape {
  int n = 0;  // arm
  int k = 0;  // leg
};

/// Truncation of the principal specialization s_lambda(1, q, q^2, ...) for
/// the two-row shape, computed from the hook-content closed form
/// q^{n(lambda)} / prod_cells (1 - q^{hook}) by series division.
QPolynomial schur_principal_trunc(const HookShape& shape, int order);

/// (q;q)_{n+2k} * s_lambda(1, q, ...) through q^order; equals
/// weyl_flag_poly(n+2k, n, m) for any m >= n+2k.
QPolynomial schur_weyl_product_trunc(const HookShape& shape, int order);

/// Ramanujan's fifth-order mock theta functions.
enum class MockThetaSelector { kPhi0, kPhi1, kPsi0, kPsi1 };

/// Truncated q-expansion from the defining sums, e.g.
/// psi1 = sum_j q^{j(j+1)/2} (-q;q)_j.
QPolynomial mock_theta_series(MockThetaSelector selector, int order);

/// The same coefficients by counting Dyck paths of height <= 2:
///   psi1: coefficient of q^N counts paths ending at height 1 with comaj = N;
///   psi0: same set with comaj + ceil(length/2) = N;
///   phi0: paths ending at height 2*(N mod 2) with comaj = floor(N/2);
///   phi1: paths ending at height 2*(1 - N mod 2) with
///         comaj + ceil(length/2) + (1 - N mod 2) = floor(N/2).
/// literal_floor replaces floor(N/2) by N in the phi formulas (the printed
/// form of the identity); it diverges from the q-series from q^1 on and is
/// kept only so the discrepancy can be demonstrated.
QPolynomial mock_theta_from_paths(MockThetaSelector selector, int order,
                                  bool literal_floor = false);

struct DimensionAuditResult {
  bool ok = false;
  BigInt flag_side = 0;     // sum over n of multiplicity * dim D(m,n)
  BigInt product_side = 0;  // prod_i (xi_i + 1)
};

/// Checks sum_n V^{xi->m}_n(1) * (n0+1)(m+1)^{n1} == prod_i (xi_i + 1).
DimensionAuditResult dimension_audit(const Partition& xi, int m);

}  // namespace demflag
