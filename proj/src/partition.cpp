#include "schurpos/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schurpos {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::trimmed(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::to_string() const { return join_parts(parts_); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("dominance requires equal size");
  const std::size_t len = std::min(mu.length(), lambda.length());
  int mu_sum = 0;
  int lambda_sum = 0;
  for (std::size_t i = 0; i < len; ++i) {
    mu_sum += mu[i];
    lambda_sum += lambda[i];
    if (mu_sum > lambda_sum) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return Partition(std::move(out));
}

Composition reverse(const Composition& alpha) {
  std::vector<int> parts(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(parts));
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n, int length) {
  std::vector<Composition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      if (length == 0 || static_cast<int>(current.size()) == length)
        out.emplace_back(current);
      return;
    }
    if (length > 0 && static_cast<int>(current.size()) >= length) return;
    for (int p = 1; p <= remaining; ++p) {
      current.push_back(p);
      rec(remaining - p);
      current.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<int> runs(std::initializer_list<std::pair<int, int>> value_count) {
  std::vector<int> out;
  for (auto [value, count] : value_count) {
    if (count < 0) throw std::invalid_argument("negative run length");
    if (value == 0) continue;
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  return out;
}

}  // namespace schurpos
