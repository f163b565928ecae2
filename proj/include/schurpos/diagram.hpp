#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "schurpos/partition.hpp"

namespace schurpos {

/// A box of a diagram; rows and columns are 1-indexed from the top-left.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// The skew diagram outer/inner, stored in basic form: no empty rows and no
/// empty columns. Any valid presentation is canonicalized on construction,
/// so two SkewDiagram values are equal exactly when their cell sets agree up
/// to translation.
class SkewDiagram {
 public:
  SkewDiagram() = default;
  explicit SkewDiagram(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  int num_rows() const { return static_cast<int>(outer_.length()); }
  int num_cols() const { return outer_.empty() ? 0 : outer_[0]; }

  bool contains(int row, int col) const;
  std::vector<Cell> cells() const;

  /// "4,3,3/2,2", or just "4,3,3" when the inner shape is empty.
  std::string to_string() const;

  friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;
  friend std::strong_ordering operator<=>(const SkewDiagram& a, const SkewDiagram& b) {
    if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
    return a.inner_ <=> b.inner_;
  }

 private:
  Partition outer_;
  Partition inner_;
};

struct Profile {
  Partition rows;
  Partition cols;
};

SkewDiagram ribbon_of(const Composition& alpha);

/// Row lengths top to bottom. Throws std::invalid_argument("not a ribbon").
Composition composition_of(const SkewDiagram& a);

Profile profile(const SkewDiagram& a);
SkewDiagram rotate180(const SkewDiagram& a);
SkewDiagram transpose(const SkewDiagram& a);

bool is_connected(const SkewDiagram& a);
bool is_ribbon(const SkewDiagram& a);

/// Number of positions of an m-row by n-column rectangle fully inside `a`.
long rectangle_count(const SkewDiagram& a, int m, int n);

/// alpha = (m, 1^k, n, 1^l), reversed when `reversed` is set.
struct MfPattern {
  int m = 0;
  int k = 0;
  int n = 0;
  int l = 0;
  bool reversed = false;

  friend bool operator==(const MfPattern&, const MfPattern&) = default;
};

Composition compose(const MfPattern& p);

/// Matches alpha against the multiplicity-free ribbon shape. Prefers the
/// unreversed reading, then the smallest k. A single-part composition (N)
/// is reported as m = 0, n = N.
std::optional<MfPattern> mf_pattern(const Composition& alpha);

inline constexpr int kDefaultEnumerationLimit = 8;

/// Every basic skew diagram with n cells, connected or not, sorted by
/// (outer, inner).
std::vector<SkewDiagram> enumerate_basic_skew(int n, int limit = kDefaultEnumerationLimit);

}  // namespace schurpos
