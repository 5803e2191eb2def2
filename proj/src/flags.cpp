#include "demflag/flags.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "demflag/dyck.hpp"

namespace demflag {

namespace {

// Insert-if-absent memo table. Values are deterministic, so a lost race
// simply recomputes the same polynomial. std::map nodes are stable, which
// makes the returned pointers safe while the table grows.
template <typename Key>
class MemoTable {
 public:
  const QPolynomial* find(const Key& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : &it->second;
  }

  const QPolynomial& insert(const Key& key, QPolynomial value) {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.emplace(key, std::move(value)).first->second;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    map_.clear();
  }

 private:
  mutable std::mutex mu_;
  std::map<Key, QPolynomial> map_;
};

using Key3 = std::tuple<int, int, int>;
using Key4 = std::tuple<int, int, int, int>;

MemoTable<Key3>& weyl_cache() {
  static MemoTable<Key3> cache;
  return cache;
}
MemoTable<Key4>& prefix_cache() {
  static MemoTable<Key4> cache;
  return cache;
}
MemoTable<Key4>& demazure_cache() {
  static MemoTable<Key4> cache;
  return cache;
}
MemoTable<Key4>& ses_cache() {
  static MemoTable<Key4> cache;
  return cache;
}
MemoTable<std::vector<int>>& fusion_cache() {
  static MemoTable<std::vector<int>> cache;
  return cache;
}

bool weight_vanishes(int s, int n) {
  return s < 0 || n < 0 || n > s || (s - n) % 2 != 0;
}

void check_levels(int m_prime, int m, const char* who) {
  if (m_prime < 1) {
    throw std::invalid_argument(std::string(who) + ": source level must be positive");
  }
  if (m < m_prime) {
    throw std::domain_error(std::string(who) +
                            ": no level-m flag exists when m < m' (requires m >= m')");
  }
}

}  // namespace

QPolynomial weyl_flag_poly(int s, int n, int m) {
  if (m < 1) throw std::invalid_argument("weyl_flag_poly: level must be positive");
  if (weight_vanishes(s, n)) return QPolynomial(0);
  const Key3 key{s, n, m};
  if (const QPolynomial* hit = weyl_cache().find(key)) return *hit;
  const AdmissiblePairSet pairs(m, n);
  EnumerateOptions options;
  options.pairs = &pairs;
  return weyl_cache().insert(key, comaj_polynomial(s, n, options));
}

QPolynomial prefix_flag_poly(int j, int s, int n, int m) {
  if (m < 1) throw std::invalid_argument("prefix_flag_poly: level must be positive");
  if (j < 0) throw std::invalid_argument("prefix_flag_poly: prefix length must be non-negative");
  if (weight_vanishes(s, n) || j > s) return QPolynomial(0);
  const Key4 key{j, s, n, m};
  if (const QPolynomial* hit = prefix_cache().find(key)) return *hit;
  const AdmissiblePairSet pairs(m, n);
  EnumerateOptions options;
  options.pairs = &pairs;
  options.prefix_ups = j;
  return prefix_cache().insert(key, comaj_polynomial(s, n, options));
}

QPolynomial hook_flag_poly(int m_prime, int s, int n, int m) {
  check_levels(m_prime, m, "hook_flag_poly");
  if (s < 0) throw std::invalid_argument("hook_flag_poly: negative hook length");
  return prefix_flag_poly(m_prime, s + m_prime, n, m);
}

QPolynomial demazure_flag_poly(int m_prime, int s, int n, int m) {
  check_levels(m_prime, m, "demazure_flag_poly");
  if (weight_vanishes(s, n)) return QPolynomial(0);
  const Key4 key{m_prime, s, n, m};
  if (const QPolynomial* hit = demazure_cache().find(key)) return *hit;
  // Back-substitution on U v = b where U_{ij} = V^{1->m'}_{s-2i, s-2j} is
  // unit upper-triangular, b_i = V^{1->m}_{s-2i, n} and v_0 is the value.
  const int k = (s - n) / 2;
  std::vector<QPolynomial> v(k + 1);
  for (int i = k; i >= 0; --i) {
    QPolynomial acc = weyl_flag_poly(s - 2 * i, n, m);
    for (int j = i + 1; j <= k; ++j) {
      acc -= weyl_flag_poly(s - 2 * i, s - 2 * j, m_prime) * v[j];
    }
    v[i] = std::move(acc);
  }
  return demazure_cache().insert(key, std::move(v[0]));
}

QPolynomial demazure_flag_poly_inclusion_exclusion(int m_prime, int s, int n, int m) {
  check_levels(m_prime, m, "demazure_flag_poly");
  if (weight_vanishes(s, n)) return QPolynomial(0);
  const int k = (s - n) / 2;
  QPolynomial total = weyl_flag_poly(s, n, m);  // j = 0 contributes directly
  for (int j = 1; j <= k; ++j) {
    // Inverse-matrix entry: sum over strictly increasing chains
    // 0 = p_0 < p_1 < ... < p_l < p_{l+1} = j of (-1)^{l+1} prod V_{p_i,p_{i+1}}.
    QPolynomial entry;
    const int interior = j - 1;
    for (unsigned mask = 0; mask < (1u << interior); ++mask) {
      std::vector<int> chain{0};
      for (int b = 0; b < interior; ++b) {
        if (mask & (1u << b)) chain.push_back(b + 1);
      }
      chain.push_back(j);
      QPolynomial product(1);
      for (size_t i = 0; i + 1 < chain.size(); ++i) {
        product *= weyl_flag_poly(s - 2 * chain[i], s - 2 * chain[i + 1], m_prime);
        if (product.is_zero()) break;
      }
      const int l = static_cast<int>(chain.size()) - 2;
      if (l % 2 == 0) {
        entry -= product;  // (-1)^{l+1} with even l
      } else {
        entry += product;
      }
    }
    total += entry * weyl_flag_poly(s - 2 * j, n, m);
  }
  return total;
}

namespace {

QPolynomial fusion_chain_sum(const Partition& xi, int n, int m) {
  const int total_weight = xi.sum();
  const int k = (total_weight - n) / 2;
  const int l = xi.length();
  // Levels with the target prepended: xi_0 = m, xi_1, ..., xi_l.
  std::vector<int> level(l + 1);
  level[0] = m;
  for (int i = 1; i <= l; ++i) level[i] = xi.part(i);

  QPolynomial total;
  std::vector<int> p(l, 0);
  p[l - 1] = k;
  // Enumerate weakly increasing interior chains p_1 <= ... <= p_{l-2}.
  auto emit = [&]() {
    int exponent = 0;
    for (int i = 1; i <= l - 2; ++i) exponent += p[i];
    QPolynomial term = QPolynomial::monomial(1, exponent);
    for (int i = 1; i <= l - 1 && !term.is_zero(); ++i) {
      const int weight = xi.tail_sum(i);
      term *= demazure_flag_poly(level[i], weight - 2 * p[l - i - 1],
                                 weight - 2 * p[l - i], level[i - 1]);
    }
    total += term;
  };
  auto recurse = [&](auto&& self, int pos) -> void {
    if (pos > l - 2) {
      emit();
      return;
    }
    for (int value = p[pos - 1]; value <= k; ++value) {
      p[pos] = value;
      self(self, pos + 1);
    }
  };
  recurse(recurse, 1);
  return total;
}

}  // namespace

QPolynomial fusion_flag_poly(const Partition& xi, int n, int m) {
  if (m < 1) throw std::invalid_argument("fusion_flag_poly: level must be positive");
  if (m < xi.largest()) {
    throw std::domain_error("fusion_flag_poly: no level-m flag exists when m < xi_1");
  }
  const int total_weight = xi.sum();
  if (n < 0 || n > total_weight || (total_weight - n) % 2 != 0) return QPolynomial(0);
  if (xi.length() == 0) return QPolynomial(n == 0 ? 1 : 0);
  if (xi.length() == 1) return demazure_flag_poly(xi.part(1), xi.part(1), n, m);

  std::vector<int> key = xi.parts();
  key.push_back(n);
  key.push_back(m);
  if (const QPolynomial* hit = fusion_cache().find(key)) return *hit;
  return fusion_cache().insert(key, fusion_chain_sum(xi, n, m));
}

QPolynomial ses_recursion_poly(int m_prime, int s, int n, int m) {
  check_levels(m_prime, m, "ses_recursion_poly");
  if (s < 0) throw std::invalid_argument("ses_recursion_poly: negative hook length");
  if (n < 0 || n > m_prime + s || (m_prime + s - n) % 2 != 0) return QPolynomial(0);
  if (s == 0) return QPolynomial(n == m_prime ? 1 : 0);
  const Key4 key{m_prime, s, n, m};
  if (const QPolynomial* hit = ses_cache().find(key)) return *hit;

  QPolynomial result;
  if (m == m_prime) {
    // Stripping the top part shifts the grading by (s + m - n)/2.
    result = ses_recursion_poly(1, s - 1, n - m, m).shifted((s + m - n) / 2);
  } else {
    for (int r = std::max(m_prime + 2 - s, 1); r <= m_prime + 1; ++r) {
      const int shift = (r == m_prime + 1) ? 0 : s;
      result += ses_recursion_poly(r, s - 2 - m_prime + r, n, m).shifted(shift);
    }
    if (m_prime == s + n) result += QPolynomial::monomial(1, s);
  }
  return ses_cache().insert(key, std::move(result));
}

XSeries generating_series(int m_prime, int m, int n, int order) {
  check_levels(m_prime, m, "generating_series");
  if (n < 0) throw std::invalid_argument("generating_series: weight must be non-negative");
  if (order < 0) throw std::invalid_argument("generating_series: negative order");
  XSeries series = XSeries::zero(order);
  for (int k = 0; k <= order; ++k) {
    series.coefficients[k] = demazure_flag_poly(m_prime, n + 2 * k, n, m);
  }
  return series;
}

bool flag_transitivity_check(const Partition& xi, int m_prime, int m, int n,
                             std::string* diagnostic) {
  if (m_prime < xi.largest()) {
    throw std::domain_error("flag_transitivity_check: requires m >= m' >= xi_1");
  }
  check_levels(m_prime, m, "flag_transitivity_check");
  const QPolynomial lhs = fusion_flag_poly(xi, n, m);
  QPolynomial rhs;
  const int total_weight = xi.sum();
  for (int p = total_weight % 2; p <= total_weight; p += 2) {
    const QPolynomial inner = fusion_flag_poly(xi, p, m_prime);
    if (inner.is_zero()) continue;
    rhs += inner * demazure_flag_poly(m_prime, p, n, m);
  }
  if (lhs == rhs) return true;
  if (diagnostic) {
    std::ostringstream out;
    out << "transitivity mismatch at xi=" << xi.to_string() << " m'=" << m_prime
        << " m=" << m << " n=" << n << ": direct " << lhs.to_string()
        << " vs sum " << rhs.to_string();
    *diagnostic = out.str();
  }
  return false;
}

void clear_flag_caches() {
  weyl_cache().clear();
  prefix_cache().clear();
  demazure_cache().clear();
  ses_cache().clear();
  fusion_cache().clear();
}

}  // namespace demflag
