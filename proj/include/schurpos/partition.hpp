#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace schurpos {

/// A weakly decreasing list of positive integers. The empty list is the
/// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Drops trailing zeros before validating.
  static Partition trimmed(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// An ordered list of positive integers.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Dominance order on partitions of the same size. Throws
/// std::invalid_argument when the sizes differ.
bool dominance_leq(const Partition& mu, const Partition& lambda);

Partition conjugate(const Partition& lambda);
Composition reverse(const Composition& alpha);
Partition sort_to_partition(const Composition& alpha);

/// All partitions of n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

/// All compositions of n, in lexicographic order. With `length` > 0 only
/// compositions with exactly that many parts are produced.
std::vector<Composition> compositions_of(int n, int length = 0);

/// Builds a part list from (value, multiplicity) runs, skipping empty runs.
/// Mirrors the a^j exponent notation.
std::vector<int> runs(std::initializer_list<std::pair<int, int>> value_count);

}  // namespace schurpos
