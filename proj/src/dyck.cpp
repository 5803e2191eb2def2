#include "demflag/dyck.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace demflag {

DyckPath::DyckPath(std::vector<uint8_t> steps) : steps_(std::move(steps)) {
  int h = 0;
  for (uint8_t s : steps_) {
    h += s ? 1 : -1;
    if (h < 0) throw std::invalid_argument("DyckPath: path goes below the x-axis");
  }
}

DyckPath DyckPath::from_string(std::string_view word) {
  std::vector<uint8_t> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("DyckPath: word must be over {0,1}");
    steps.push_back(c == '1' ? 1 : 0);
  }
  return DyckPath(std::move(steps));
}

DyckPath DyckPath::unchecked(std::vector<uint8_t> steps) {
  DyckPath p;
  p.steps_ = std::move(steps);
  return p;
}

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (uint8_t u : steps_) s.push_back(u ? '1' : '0');
  return s;
}

int DyckPath::height_at(int i) const {
  int h = 0;
  for (int j = 0; j < i; ++j) h += steps_[j] ? 1 : -1;
  return h;
}

int DyckPath::max_height() const {
  int h = 0, best = 0;
  for (uint8_t s : steps_) {
    h += s ? 1 : -1;
    best = std::max(best, h);
  }
  return best;
}

int DyckPath::down_steps() const {
  return static_cast<int>(std::count(steps_.begin(), steps_.end(), 0));
}

int DyckPath::comaj() const {
  const int s = length();
  int total = 0;
  for (int i = 1; i < s; ++i) {
    if (steps_[i - 1] && !steps_[i]) total += s - i;
  }
  return total;
}

int DyckPath::maj() const {
  const int s = length();
  int total = 0;
  for (int i = 1; i < s; ++i) {
    if (steps_[i - 1] && !steps_[i]) total += i;
  }
  return total;
}

int DyckPath::des() const {
  const int s = length();
  int total = 0;
  for (int i = 1; i < s; ++i) {
    if (steps_[i - 1] && !steps_[i]) ++total;
  }
  return total;
}

std::vector<DyckPath::Point> DyckPath::peaks() const {
  std::vector<Point> out;
  int h = 0;
  for (int i = 1; i < length(); ++i) {
    h += steps_[i - 1] ? 1 : -1;
    if (steps_[i - 1] && !steps_[i]) out.push_back({i, h});
  }
  return out;
}

std::vector<DyckPath::Point> DyckPath::valleys() const {
  std::vector<Point> out;
  int h = 0;
  for (int i = 1; i < length(); ++i) {
    h += steps_[i - 1] ? 1 : -1;
    if (!steps_[i - 1] && steps_[i]) out.push_back({i, h});
  }
  if (length() > 0 && !steps_.back()) out.push_back({length(), end_height()});
  return out;
}

AdmissiblePairSet::AdmissiblePairSet(int m, int n) {
  if (m < 1) throw std::invalid_argument("AdmissiblePairSet: level must be positive");
  if (n < 0) throw std::invalid_argument("AdmissiblePairSet: weight must be non-negative");
  m_ = m;
  n_ = n;
  n1_ = n / m;
  n0_ = n % m;
  height_bound_ = std::max(m - 1, n);
  if (n >= m) {
    // {0,...,n} minus {p*n1 + n0 + min(0, (p-1) - n0) : 1 <= p <= m}, paired
    // with heights m, m+1, ..., n in the natural order.
    std::set<int> removed;
    for (int p = 1; p <= m; ++p) {
      removed.insert(p * n1_ + n0_ + std::min(0, (p - 1) - n0_));
    }
    int b = m;
    for (int a = 0; a <= n; ++a) {
      if (!removed.count(a)) pairs_.emplace_back(a, b++);
    }
  }
  finish();
}

AdmissiblePairSet AdmissiblePairSet::from_two_family_form(int m, int n) {
  AdmissiblePairSet set;
  set.m_ = m;
  set.n_ = n;
  set.n1_ = n / m;
  set.n0_ = n % m;
  set.height_bound_ = std::max(m - 1, n);
  if (n >= m) {
    for (int p = 0; p <= set.n0_; ++p) {
      for (int r = 0; r < set.n1_; ++r) {
        set.pairs_.emplace_back(p * (set.n1_ + 1) + r, m + p * set.n1_ + r);
      }
    }
    for (int p = set.n0_ + 1; p < m; ++p) {
      for (int r = 0; r < set.n1_ - 1; ++r) {
        set.pairs_.emplace_back(p * set.n1_ + set.n0_ + 1 + r,
                                m + p * (set.n1_ - 1) + set.n0_ + 1 + r);
      }
    }
    std::sort(set.pairs_.begin(), set.pairs_.end());
  }
  set.finish();
  return set;
}

void AdmissiblePairSet::finish() {
  floor_by_height_.assign(height_bound_ + 2, 0);
  for (const auto& [a, b] : pairs_) {
    if (b < static_cast<int>(floor_by_height_.size())) floor_by_height_[b] = a + 1;
  }
}

int AdmissiblePairSet::floor_after_peak(int b) const {
  if (b < 0 || b >= static_cast<int>(floor_by_height_.size())) return 0;
  return floor_by_height_[b];
}

bool is_admissible(const DyckPath& path, const AdmissiblePairSet& pairs) {
  if (path.max_height() > pairs.height_bound()) return false;
  const auto peak_points = path.peaks();
  const int s = path.length();
  for (const auto& [a, b] : pairs.pairs()) {
    int first_x = -1;
    for (const auto& peak : peak_points) {
      if (peak.y == b) {
        first_x = peak.x;
        break;
      }
    }
    if (first_x < 0) continue;
    int h = path.height_at(first_x);
    for (int x = first_x; x <= s; ++x) {
      if (h <= a) return false;
      if (x < s) h += path.step_is_up(x + 1) ? 1 : -1;
    }
  }
  return true;
}

namespace {

struct WalkSpec {
  int s = 0;
  int n = 0;
  int bound = 0;        // effective height ceiling
  int prefix_ups = 0;
  const AdmissiblePairSet* pairs = nullptr;
  bool feasible = false;
};

WalkSpec make_spec(int s, int n, const EnumerateOptions& options) {
  WalkSpec spec;
  spec.s = s;
  spec.n = n;
  spec.prefix_ups = options.prefix_ups;
  spec.pairs = options.pairs;
  spec.bound = s;  // unreachable ceiling by default
  if (options.height_bound != EnumerateOptions::kNoHeightBound) {
    spec.bound = std::min(spec.bound, options.height_bound);
  }
  if (options.pairs) spec.bound = std::min(spec.bound, options.pairs->height_bound());
  spec.feasible = s >= 0 && n >= 0 && n <= s && (s - n) % 2 == 0 &&
                  options.prefix_ups >= 0 && options.prefix_ups <= s;
  return spec;
}

// Depth-first walk over all qualifying words, down-step first so paths are
// delivered in ascending lexicographic order. The admissibility state is a
// single floor: triggered pair constraints only ever raise it.
template <typename Leaf>
void walk(const WalkSpec& spec, std::vector<uint8_t>& buf, int i, int h, int floor,
          bool last_up, int comaj, const Leaf& leaf) {
  if (i == spec.s) {
    leaf(buf, comaj);
    return;
  }
  const int remaining = spec.s - i;
  if (i >= spec.prefix_ups && h > 0) {
    int new_floor = floor;
    if (last_up && spec.pairs) {
      new_floor = std::max(new_floor, spec.pairs->floor_after_peak(h));
    }
    if (h - 1 >= new_floor && std::abs(h - 1 - spec.n) <= remaining - 1) {
      buf[i] = 0;
      walk(spec, buf, i + 1, h - 1, new_floor, false, comaj + (last_up ? spec.s - i : 0),
           leaf);
    }
  }
  if (h + 1 <= spec.bound && std::abs(h + 1 - spec.n) <= remaining - 1) {
    buf[i] = 1;
    walk(spec, buf, i + 1, h + 1, floor, true, comaj, leaf);
  }
}

template <typename Leaf>
void run_walk(int s, int n, const EnumerateOptions& options, const Leaf& leaf) {
  const WalkSpec spec = make_spec(s, n, options);
  if (!spec.feasible) return;
  if (s == 0) {
    std::vector<uint8_t> empty;
    leaf(empty, 0);
    return;
  }
  if (std::abs(0 - n) > s) return;
  std::vector<uint8_t> buf(s, 0);
  walk(spec, buf, 0, 0, 0, false, 0, leaf);
}

}  // namespace

void for_each_path(int s, int n, const EnumerateOptions& options,
                   const std::function<void(const DyckPath&)>& visit) {
  run_walk(s, n, options, [&](const std::vector<uint8_t>& buf, int) {
    visit(DyckPath::unchecked(buf));
  });
}

std::vector<DyckPath> enumerate_paths(int s, int n, const EnumerateOptions& options) {
  std::vector<DyckPath> out;
  for_each_path(s, n, options, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

BigInt count_paths(int s, int n, const EnumerateOptions& options) {
  BigInt count = 0;
  run_walk(s, n, options, [&](const std::vector<uint8_t>&, int) { ++count; });
  return count;
}

BigInt count_paths_dp(int s, int n, const EnumerateOptions& options) {
  const WalkSpec spec = make_spec(s, n, options);
  if (!spec.feasible || n > spec.bound) return 0;
  if (s == 0) return 1;

  const int heights = spec.bound + 1;
  const int floors = spec.bound + 2;
  auto index = [&](int h, int f, int last) { return (h * floors + f) * 2 + last; };
  std::vector<BigInt> cur(heights * floors * 2, 0), next;
  cur[index(0, 0, 0)] = 1;
  for (int i = 0; i < s; ++i) {
    next.assign(cur.size(), 0);
    for (int h = 0; h < heights; ++h) {
      for (int f = 0; f < floors; ++f) {
        for (int last = 0; last < 2; ++last) {
          const BigInt& ways = cur[index(h, f, last)];
          if (ways == 0) continue;
          if (h + 1 <= spec.bound) next[index(h + 1, f, 1)] += ways;
          if (i >= spec.prefix_ups && h > 0) {
            int nf = f;
            if (last == 1 && spec.pairs) {
              nf = std::max(nf, spec.pairs->floor_after_peak(h));
            }
            if (h - 1 >= nf) next[index(h - 1, nf, 0)] += ways;
          }
        }
      }
    }
    cur.swap(next);
  }
  BigInt total = 0;
  for (int f = 0; f < floors; ++f) {
    for (int last = 0; last < 2; ++last) total += cur[index(n, f, last)];
  }
  return total;
}

QPolynomial comaj_polynomial(int s, int n, const EnumerateOptions& options) {
  if (s < 0 || n < 0 || n > s || (s - n) % 2 != 0) return QPolynomial(0);
  const long long k = (s - n) / 2;
  std::vector<BigInt> histogram(static_cast<size_t>(k * (n + k)) + 1, 0);
  run_walk(s, n, options,
           [&](const std::vector<uint8_t>&, int comaj) { ++histogram[comaj]; });
  QPolynomial poly;
  for (size_t e = 0; e < histogram.size(); ++e) {
    poly.add_term(histogram[e], static_cast<int>(e));
  }
  return poly;
}

std::vector<int> eta_indices(const DyckPath& path) {
  const auto peak_points = path.peaks();
  const int d = static_cast<int>(peak_points.size());
  std::vector<int> chain;
  if (d == 0) return chain;
  int cur = 0;
  chain.push_back(1);
  while (true) {
    int next = -1;
    for (int u = cur + 1; u < d; ++u) {
      if (peak_points[u].y >= peak_points[cur].y) {
        next = u;
        break;
      }
    }
    if (next < 0) break;
    chain.push_back(next + 1);
    cur = next;
  }
  return chain;
}

std::vector<int> zeta_indices(const DyckPath& path) {
  const auto valley_points = path.valleys();
  const int d = static_cast<int>(valley_points.size());
  std::vector<int> chain;
  if (d == 0) return chain;
  int cur = d - 1;
  chain.push_back(d);
  while (true) {
    int next = -1;
    for (int u = cur - 1; u >= 0; --u) {
      if (valley_points[u].y <= valley_points[cur].y) {
        next = u;
        break;
      }
    }
    if (next < 0) break;
    chain.push_back(next + 1);
    cur = next;
  }
  return chain;
}

namespace {

std::vector<int> height_profile(const DyckPath& path) {
  std::vector<int> h(path.length() + 1, 0);
  for (int i = 1; i <= path.length(); ++i) {
    h[i] = h[i - 1] + (path.step_is_up(i) ? 1 : -1);
  }
  return h;
}

void require(bool ok, const char* message) {
  if (!ok) throw std::domain_error(message);
}

}  // namespace

DyckPath psi(const DyckPath& path, int m, int n) {
  const int s = path.length();
  require(m >= 1 && n >= m && s >= m, "psi: requires n, s >= m >= 1");
  require((s - n) % 2 == 0 && s >= n, "psi: length minus end height must be in 2Z+");
  require(path.end_height() == n, "psi: path does not end at the stated height");
  for (int i = 1; i <= m; ++i) {
    require(path.step_is_up(i), "psi: path must start with m up-steps");
  }
  const AdmissiblePairSet pairs(m, n);
  require(is_admissible(path, pairs), "psi: path is not admissible");

  const auto heights = height_profile(path);
  const auto peak_points = path.peaks();
  std::vector<uint8_t> steps = path.steps();
  for (int t : eta_indices(path)) {
    const auto [x, y] = peak_points[t - 1];
    int x2 = x + 1;
    while (heights[x2] != y) ++x2;  // the next return to height y exists: y <= n
    for (int i = x; i < x2; ++i) steps[i] = steps[i] ? 0 : 1;
  }
  steps.erase(steps.begin(), steps.begin() + m);
  return DyckPath(std::move(steps));
}

DyckPath psi_inverse(const DyckPath& path, int m, int n) {
  const int s = path.length() + m;
  require(m >= 1 && n >= m && s >= m, "psi_inverse: requires n, s >= m >= 1");
  require((s - n) % 2 == 0 && s >= n, "psi_inverse: length minus end height must be in 2Z+");
  require(path.end_height() == n - m, "psi_inverse: path does not end at height n-m");
  const AdmissiblePairSet pairs(m, n - m);
  require(is_admissible(path, pairs), "psi_inverse: path is not admissible");

  const auto heights = height_profile(path);
  const auto valley_points = path.valleys();
  std::vector<uint8_t> steps = path.steps();
  for (int t : zeta_indices(path)) {
    const auto [x, y] = valley_points[t - 1];
    int x2 = x - 1;
    while (heights[x2] != y) --x2;  // an earlier point at height y exists: y >= 0
    for (int i = x2; i < x; ++i) steps[i] = steps[i] ? 0 : 1;
  }
  steps.insert(steps.begin(), m, uint8_t{1});
  return DyckPath(std::move(steps));
}

std::pair<int, DyckPath> tau(const DyckPath& path, int j, int m) {
  const int s = path.length();
  if (j < 1 || j >= m) throw std::domain_error("tau: requires 1 <= j < m");
  require(s >= j, "tau: path shorter than the up-step prefix");
  for (int i = 1; i <= j; ++i) {
    require(path.step_is_up(i), "tau: path must start with j up-steps");
  }
  int r = 0;
  while (j + r < s && !path.step_is_up(j + r + 1)) ++r;
  std::vector<uint8_t> steps(static_cast<size_t>(j - r), 1);
  steps.insert(steps.end(), path.steps().begin() + j + r, path.steps().end());
  return {r, DyckPath(std::move(steps))};
}

int TwoRowTableau::comaj() const {
  const int s = size();
  int total = 0;
  for (int i : row1) {
    if (i < s && std::binary_search(row2.begin(), row2.end(), i + 1)) total += s - i;
  }
  return total;
}

TwoRowTableau to_syt(const DyckPath& path) {
  TwoRowTableau t;
  for (int i = 1; i <= path.length(); ++i) {
    (path.step_is_up(i) ? t.row1 : t.row2).push_back(i);
  }
  return t;
}

DyckPath syt_to_path(const TwoRowTableau& tableau) {
  const int s = tableau.size();
  if (static_cast<int>(tableau.row1.size()) < static_cast<int>(tableau.row2.size())) {
    throw std::invalid_argument("syt_to_path: first row shorter than second");
  }
  std::vector<uint8_t> steps(s, 2);
  for (int i : tableau.row1) {
    if (i < 1 || i > s || steps[i - 1] != 2) throw std::invalid_argument("syt_to_path: rows do not partition 1..s");
    steps[i - 1] = 1;
  }
  for (int i : tableau.row2) {
    if (i < 1 || i > s || steps[i - 1] != 2) throw std::invalid_argument("syt_to_path: rows do not partition 1..s");
    steps[i - 1] = 0;
  }
  for (size_t i = 0; i + 1 < tableau.row2.size(); ++i) {
    if (tableau.row2[i] >= tableau.row2[i + 1]) throw std::invalid_argument("syt_to_path: second row not increasing");
  }
  for (size_t i = 0; i < tableau.row2.size(); ++i) {
    if (tableau.row2[i] <= tableau.row1[i]) throw std::invalid_argument("syt_to_path: columns not strictly increasing");
  }
  return DyckPath(std::move(steps));
}

ExtremalComaj extremal_comaj(int m, int n, int s) {
  if (n < 0 || s < n || (s - n) % 2 != 0) {
    throw std::domain_error("extremal_comaj: length minus end height must be in 2Z+");
  }
  const int k = (s - n) / 2;
  if (k > 0 && m < 2) {
    throw std::domain_error("extremal_comaj: no admissible paths at level < 2 with down-steps");
  }
  ExtremalComaj result;
  result.max_comaj = static_cast<long long>(k) * (n + k);
  std::vector<uint8_t> steps;
  steps.reserve(s);
  if (k > 0) {
    const int block = m - 1;
    const int full_blocks = k / block;
    const int p = k % block;
    for (int t = 0; t < full_blocks; ++t) {
      steps.insert(steps.end(), block, uint8_t{1});
      steps.insert(steps.end(), block, uint8_t{0});
    }
    steps.insert(steps.end(), p, uint8_t{1});
    steps.insert(steps.end(), p, uint8_t{0});
  }
  steps.insert(steps.end(), n, uint8_t{1});
  result.min_path = DyckPath(std::move(steps));
  return result;
}

}  // namespace demflag
