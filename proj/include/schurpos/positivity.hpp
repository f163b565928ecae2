#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "schurpos/diagram.hpp"
#include "schurpos/lr.hpp"
#include "schurpos/poset.hpp"

namespace schurpos {

/// Necessary conditions for s_a - s_b to be Schur positive: rows and columns
/// dominated, and no more m-by-n rectangles in `a` than in `b`. A false
/// answer rules out Greater and Equal for compare_diagrams(a, b).
bool necessary_filter(const SkewDiagram& a, const SkewDiagram& b);

/// Thread-safe memo of expansions keyed by diagram.
class ExpansionCache {
 public:
  explicit ExpansionCache(int max_size = kDefaultExpansionLimit) : max_size_(max_size) {}

  SchurVector get(const SkewDiagram& a);
  int max_size() const { return max_size_; }

 private:
  int max_size_;
  std::mutex mutex_;
  std::map<SkewDiagram, SchurVector> memo_;
};

/// Compares s_a against s_b. Sizes, ribbon row counts and the necessary
/// filters are tried first; otherwise the full expansions decide. Throws
/// std::logic_error if a filter contradicts the expansions.
ComparisonResult compare_diagrams(const SkewDiagram& a, const SkewDiagram& b,
                                  ExpansionCache& cache);
ComparisonResult compare_diagrams(const SkewDiagram& a, const SkewDiagram& b,
                                  int max_size = kDefaultExpansionLimit);

struct PosetClass {
  /// Sorted; the first member is the canonical representative.
  std::vector<SkewDiagram> members;
  SchurVector expansion;
};

/// Equivalence classes of equal skew Schur functions ordered by Schur
/// positivity: class i <= class j when s_j - s_i is Schur positive.
struct PosetModel {
  std::vector<PosetClass> classes;
  FinitePoset order;

  std::size_t size() const { return classes.size(); }
  bool leq(std::size_t i, std::size_t j) const { return order.leq(i, j); }
  const std::vector<Edge>& hasse() const { return order.hasse(); }

  /// Index of the class holding `a`, or size() when absent.
  std::size_t class_of(const SkewDiagram& a) const;
};

struct BuildOptions {
  int max_size = kDefaultExpansionLimit;
  unsigned threads = 0;
};

/// Throws std::invalid_argument when the diagrams differ in size.
PosetModel build_poset(const std::vector<SkewDiagram>& diagrams, const BuildOptions& options = {});

/// Ribbons with n cells; `rows` > 0 fixes the row count. With
/// `multiplicity_free_only` set, ribbons failing mf_pattern are dropped.
std::vector<SkewDiagram> ribbon_diagrams(int n, int rows = 0, bool multiplicity_free_only = false);

/// Membership mask over classes.
std::vector<bool> class_mask(const PosetModel& p, const std::function<bool(const PosetClass&)>& pred);

bool check_graded(const PosetModel& p);
bool check_join_semilattice(const PosetModel& p);
bool check_convex(const PosetModel& p, const std::function<bool(const PosetClass&)>& member);

}  // namespace schurpos
