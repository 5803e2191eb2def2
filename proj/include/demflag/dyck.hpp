#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "demflag/qpolynomial.hpp"

namespace demflag {

/// A diagonal lattice path encoded as a 01-word (1 = up-step, 0 = down-step)
/// that never goes below the x-axis. The end height may be any n >= 0.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path
  explicit DyckPath(std::vector<uint8_t> steps);  // throws if a prefix dips below 0
  static DyckPath from_string(std::string_view word);  // "10111"
  /// Construction from a buffer already known to satisfy the prefix
  /// condition (used by the enumerator).
  static DyckPath unchecked(std::vector<uint8_t> steps);

  std::string to_string() const;

  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<uint8_t>& steps() const { return steps_; }
  bool step_is_up(int i) const { return steps_[i - 1] != 0; }  // 1-based

  /// Height of the lattice point after i steps; height_at(0) == 0.
  int height_at(int i) const;
  int end_height() const { return height_at(length()); }
  int max_height() const;
  int down_steps() const;

  int comaj() const;
  int maj() const;
  int des() const;

  struct Point {
    int x = 0;
    int y = 0;
    bool operator==(const Point&) const = default;
  };

  /// Interior points with both neighbours one level lower. Neither the
  /// start point nor the endpoint is ever a peak.
  std::vector<Point> peaks() const;
  /// Interior points with both neighbours one level higher, plus the
  /// endpoint when it is preceded by a down-step.
  std::vector<Point> valleys() const;

  bool operator==(const DyckPath& other) const = default;
  bool operator<(const DyckPath& other) const { return steps_ < other.steps_; }

 private:
  std::vector<uint8_t> steps_;
};

/// The admissibility pairs A(m,n) together with the derived quantities
/// n = m*n1 + n0 (0 <= n0 < m) and the height ceiling N = max(m-1, n).
/// Empty when n < m; otherwise exactly n-m+1 pairs (a,b) with b = m..n.
class AdmissiblePairSet {
 public:
  AdmissiblePairSet(int m, int n);  // set-difference construction
  /// The equivalent two-family description, kept as an independent
  /// construction so the equality of the two can be asserted in tests.
  static AdmissiblePairSet from_two_family_form(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int n0() const { return n0_; }
  int n1() const { return n1_; }
  int height_bound() const { return height_bound_; }  // N
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  /// A peak at height b forces every later point strictly above a, i.e. a
  /// floor of a+1; returns 0 when no pair constrains height b.
  int floor_after_peak(int b) const;

 private:
  AdmissiblePairSet() = default;
  void finish();
  int m_ = 1, n_ = 0, n0_ = 0, n1_ = 0, height_bound_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> floor_by_height_;  // indexed by b, 0 when unconstrained
};

/// Direct admissibility predicate: P stays weakly below y = N and, for every
/// pair (a,b), once P has a peak at height b every later point is strictly
/// above a. Used as the reference implementation for the pruned enumerator.
bool is_admissible(const DyckPath& path, const AdmissiblePairSet& pairs);

struct EnumerateOptions {
  /// Maximum height, or kNoHeightBound for none. When `pairs` is given its
  /// ceiling N applies as well (the tighter bound wins).
  int height_bound = kNoHeightBound;
  const AdmissiblePairSet* pairs = nullptr;
  int prefix_ups = 0;  // the first prefix_ups steps must be up-steps

  static constexpr int kNoHeightBound = -1;
};

/// Visits every qualifying path of length s ending at height n exactly once,
/// in ascending lexicographic order of the 01-word. Empty when s - n is odd
/// or either argument is negative.
void for_each_path(int s, int n, const EnumerateOptions& options,
                   const std::function<void(const DyckPath&)>& visit);

std::vector<DyckPath> enumerate_paths(int s, int n, const EnumerateOptions& options = {});

/// Number of paths for_each_path would visit, by explicit walk.
BigInt count_paths(int s, int n, const EnumerateOptions& options = {});

/// Same count via a transfer-style dynamic program over
/// (height, admissibility floor, last step); no path is materialized.
BigInt count_paths_dp(int s, int n, const EnumerateOptions& options = {});

/// Sum of q^comaj(P) over the enumerated paths.
QPolynomial comaj_polynomial(int s, int n, const EnumerateOptions& options = {});

/// Peak chain: starting from the first peak, repeatedly move to the
/// leftmost later peak weakly above the current one. 1-based indices into
/// peaks(); empty when the path has no peaks.
std::vector<int> eta_indices(const DyckPath& path);

/// Valley chain, the mirror construction: starting from the last valley,
/// repeatedly move to the rightmost earlier valley weakly below the current
/// one. 1-based indices into valleys(), in the order visited (decreasing).
std::vector<int> zeta_indices(const DyckPath& path);

/// Comaj-shifting bijection from paths in D_{m,n}(s) that start with m
/// up-steps onto D_{m,n-m}(s-m): reflect the path at the horizontal chords
/// through the eta-chain peaks, then drop the leading m up-steps. Requires
/// n, s >= m and s - n in 2Z+; comaj(psi(P)) = comaj(P) - (s-n)/2.
DyckPath psi(const DyckPath& path, int m, int n);

/// Inverse of psi: reflect at the chords through the zeta-chain valleys and
/// prepend m up-steps.
DyckPath psi_inverse(const DyckPath& path, int m, int n);

/// Writes P = 1^j 0^r Q and returns (r, 1^{j-r} Q). Requires 1 <= j < m and
/// that P starts with j up-steps; comaj(P) = comaj(result) + (1 - [r==0])(s-j).
std::pair<int, DyckPath> tau(const DyckPath& path, int j, int m);

/// Standard Young tableau with two rows, filled by 1..size with strictly
/// increasing rows and strictly increasing columns.
struct TwoRowTableau {
  std::vector<int> row1;
  std::vector<int> row2;

  int size() const { return static_cast<int>(row1.size() + row2.size()); }
  /// Sum of size - i over descents, where i is a descent when i+1 sits in a
  /// strictly lower row than i.
  int comaj() const;
  bool operator==(const TwoRowTableau&) const = default;
};

/// Entry i goes to row 1 when step i is up and to row 2 otherwise; a
/// comaj-preserving bijection from paths of length n+2k ending at height n
/// onto tableaux of shape (n+k, k).
TwoRowTableau to_syt(const DyckPath& path);
DyckPath syt_to_path(const TwoRowTableau& tableau);

struct ExtremalComaj {
  long long max_comaj = 0;  // k(n+k), attained exactly by (10)^k 1^n
  DyckPath min_path;        // block path (1^{m-1} 0^{m-1})^l 1^p 0^p 1^n
};

/// Comaj extremes over admissible paths of length s ending at height n.
/// The block path realizes the minimum when n = 0; for n > 0 it is still an
/// admissible low-degree witness. Throws when s - n is odd or negative, or
/// when m < 2 with s > n (no admissible paths exist).
ExtremalComaj extremal_comaj(int m, int n, int s);

}  // namespace demflag
