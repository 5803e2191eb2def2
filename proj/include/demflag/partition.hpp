#pragma once

#include <string>
#include <vector>

namespace demflag {

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);  // validates, throws

  /// (m^{n1}, n0) where n = m*n1 + n0, 0 <= n0 < m: the partition whose
  /// fusion product is the level-m Demazure module of weight n.
  static Partition demazure_partition(int m, int n);

  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i - 1]; }  // 1-based
  int largest() const { return parts_.empty() ? 0 : parts_[0]; }
  int sum() const;              // |xi|
  int tail_sum(int i) const;    // |xi|_i = sum of parts j >= i (1-based)
  Partition tail() const;       // drop the first part
  const std::vector<int>& parts() const { return parts_; }

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& other) const { return parts_ < other.parts_; }

  std::string to_string() const;  // "(2,1,1)"

 private:
  std::vector<int> parts_;
};

}  // namespace demflag
