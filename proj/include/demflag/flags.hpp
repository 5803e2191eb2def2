#pragma once

#include <string>

#include "demflag/partition.hpp"
#include "demflag/qpolynomial.hpp"
#include "demflag/xpolynomial.hpp"

namespace demflag {

// Graded multiplicity polynomials of level-m Demazure flags. All operations
// are pure and memoize on their full argument tuple; the caches accept
// concurrent insert-if-absent, so grid computations may run in parallel.

/// V^{1->m}_{s,n}(q): multiplicities of a level-m flag of the local Weyl
/// module of weight s, as the comaj generating polynomial over admissible
/// paths of length s ending at height n. Zero when s-n is odd or negative,
/// or either weight is negative.
QPolynomial weyl_flag_poly(int s, int n, int m);

/// Sum of q^comaj over admissible paths of length s ending at height n that
/// start with j up-steps.
QPolynomial prefix_flag_poly(int j, int s, int n, int m);

/// V^{(m',1^s)->m}_n(q): flags of the hook fusion product, via paths of
/// length s+m' starting with m' up-steps. Throws when m < m' (no flag).
QPolynomial hook_flag_poly(int m_prime, int s, int n, int m);

/// V^{m'->m}_{s,n}(q): flags of a Demazure module, by back-substitution on
/// the unit upper-triangular system relating level-m' and level-m flags of
/// Weyl modules. Throws when m < m'.
QPolynomial demazure_flag_poly(int m_prime, int s, int n, int m);

/// Same value through the explicit inclusion-exclusion sum over strictly
/// increasing index chains (exponentially many; keep (s-n)/2 small). Kept
/// as an independent second route for cross-checking.
QPolynomial demazure_flag_poly_inclusion_exclusion(int m_prime, int s, int n, int m);

/// V^{xi->m}_n(q) for an arbitrary fusion product, by the chain sum
///   sum over 0=p_0 <= p_1 <= ... <= p_{l-1} = k of q^{p_1+...+p_{l-2}}
///   times products of Demazure-to-Demazure factors, with the target level
/// prepended as xi_0 = m. Throws when m < xi_1.
QPolynomial fusion_flag_poly(const Partition& xi, int n, int m);

/// Enumeration-free evaluation of V^{(m',1^s)->m}_n(q) through the
/// short-exact-sequence recursion: base s=0 gives delta_{m',n}; at m = m'
/// the level-stripping identity applies; otherwise
///   sum_{r=max(m'+2-s,1)}^{m'+1} q^{(1-[r=m'+1])s} * V^{(r,1^{s-2-m'+r})->m}_n
///   + q^s * delta_{m',s+n}.
/// Throws when m < m'.
QPolynomial ses_recursion_poly(int m_prime, int s, int n, int m);

/// A^{m'->m}_n(x,q) truncated: coefficient of x^k is V^{m'->m}_{n+2k,n}(q).
XSeries generating_series(int m_prime, int m, int n, int order);

/// Checks V^{xi->m}_n == sum_p V^{xi->m'}_p * V^{xi(m',p)->m}_n with all
/// factors computed independently. On mismatch, when `diagnostic` is given
/// it receives the offending weight and both polynomials.
bool flag_transitivity_check(const Partition& xi, int m_prime, int m, int n,
                             std::string* diagnostic = nullptr);

/// Drops every memoized value (useful for timing runs).
void clear_flag_caches();

}  // namespace demflag
