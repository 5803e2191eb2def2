#include "demflag/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace demflag {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }
}

Partition Partition::demazure_partition(int m, int n) {
  if (m < 1) throw std::invalid_argument("demazure_partition: level must be positive");
  if (n < 0) throw std::invalid_argument("demazure_partition: weight must be non-negative");
  std::vector<int> parts(n / m, m);
  if (n % m != 0) parts.push_back(n % m);
  return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::tail_sum(int i) const {
  int total = 0;
  for (int j = i; j <= length(); ++j) total += parts_[j - 1];
  return total;
}

Partition Partition::tail() const {
  if (parts_.empty()) throw std::invalid_argument("Partition::tail of the empty partition");
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

}  // namespace demflag
