#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schurpos/diagram.hpp"
#include "schurpos/partition.hpp"

namespace schurpos {

using Coefficient = std::int64_t;

/// Orders partitions lexicographically from the largest, so (3) < (2,1) <
/// (1,1,1) in iteration order.
struct DescendingLex {
  bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

/// A homogeneous Schur-basis expansion with strictly positive coefficients.
class SchurVector {
 public:
  using Terms = std::map<Partition, Coefficient, DescendingLex>;

  SchurVector() = default;
  explicit SchurVector(int degree) : degree_(degree) {}

  /// Adds `coefficient` copies of s_index. The index must have size equal to
  /// the degree; the stored coefficient must stay non-negative.
  void add(const Partition& index, Coefficient coefficient);

  Coefficient coefficient(const Partition& index) const;
  const Terms& terms() const { return terms_; }
  int degree() const { return degree_; }
  bool empty() const { return terms_.empty(); }

  /// Sum of all coefficients.
  Coefficient total() const;

  std::string to_string() const;

  friend bool operator==(const SchurVector&, const SchurVector&) = default;

 private:
  int degree_ = 0;
  Terms terms_;
};

/// A filling of a skew shape; entries follow the order of shape.cells().
struct Ssyt {
  SkewDiagram shape;
  std::vector<int> entries;
};

bool is_semistandard(const Ssyt& t);

/// Entries read right to left along each row, rows top to bottom.
std::vector<int> reading_word(const Ssyt& t);

bool is_lattice_word(std::span<const int> word);

inline constexpr int kDefaultExpansionLimit = 16;

/// Calls `visit` with every LR filling of `shape`, given as its reading word.
/// Returns the number of fillings visited.
std::uint64_t for_each_lr_filling(const SkewDiagram& shape,
                                  const std::function<void(std::span<const int>)>& visit);

/// Schur expansion of s_shape by the Littlewood-Richardson rule. Throws
/// std::out_of_range when the shape exceeds `max_size` cells.
SchurVector expand(const SkewDiagram& shape, int max_size = kDefaultExpansionLimit);

/// Conjugates every index partition.
SchurVector omega_vec(const SchurVector& v);

bool is_multiplicity_free_vec(const SchurVector& v);

enum class Comparison { Equal, Greater, Less, Incomparable };

std::string to_string(Comparison c);

struct ComparisonResult {
  Comparison tag = Comparison::Incomparable;
  /// Present for Greater (v1 - v2) and Less (v2 - v1); always Schur positive.
  std::optional<SchurVector> difference;
};

ComparisonResult compare_vectors(const SchurVector& v1, const SchurVector& v2);

}  // namespace schurpos
