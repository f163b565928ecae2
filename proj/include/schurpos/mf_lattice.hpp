#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "schurpos/lr.hpp"
#include "schurpos/partition.hpp"
#include "schurpos/poset.hpp"
#include "schurpos/positivity.hpp"

namespace schurpos::mf {

/// Multiplicity-free ribbons with `n` cells and `rows` rows, 2 <= rows <= n-1.
struct Context {
  int n = 0;
  int rows = 0;

  /// Throws std::invalid_argument outside 2 <= rows <= n-1.
  static Context make(int n, int rows);

  /// Largest rectangle height, rows - 1.
  int height() const { return rows - 1; }
  /// Largest rectangle width, n - rows.
  int width() const { return n - rows; }

  friend bool operator==(const Context&, const Context&) = default;
  friend auto operator<=>(const Context&, const Context&) = default;
};

/// The class of r[a,b] = r(n-rows-b+1, 1^(a-1), b+1, 1^(rows-a-1)): the
/// ribbon whose inner shape is the a-by-b rectangle.
struct RectLabel {
  int a = 0;
  int b = 0;
  Context ctx;

  std::string to_string() const;

  friend bool operator==(const RectLabel&, const RectLabel&) = default;
  friend auto operator<=>(const RectLabel&, const RectLabel&) = default;
};

/// True for the canonical labels that index distinct classes.
bool is_valid(const RectLabel& label);

/// Applies the boundary conventions: on a = rows-1 keep the smaller of b and
/// width-b, on b = width keep the smaller of a and height-a, and send the
/// degenerate [rows-1, 0] and [0, width] to [rows-1, width].
RectLabel normalize(int a, int b, Context ctx);

enum class ChainKind { H, W };

/// Strictly increasing along the chain order of the given kind. H ranks
/// 1..rows-1, W ranks 1..n-rows.
int chain_rank(ChainKind kind, int x, int n, int rows);

/// Chain elements from bottom to top.
std::vector<int> chain(ChainKind kind, Context ctx);

std::vector<RectLabel> elements(int n, int rows);

Composition ribbon_of_label(const RectLabel& label);

/// Canonical label of a multiplicity-free ribbon with 2 <= rows <= n-1.
RectLabel label_of_ribbon(const Composition& alpha);

bool leq_s_closed(const RectLabel& lower, const RectLabel& upper);

std::vector<std::pair<RectLabel, RectLabel>> covers(int n, int rows);

RectLabel meet(const RectLabel& x, const RectLabel& y);
RectLabel join(const RectLabel& x, const RectLabel& y);

/// The poset on elements(n, rows) ordered by leq_s_closed.
FinitePoset closed_form_poset(int n, int rows);

/// Ribbon pair (greater, lesser) of the four covering identities.
std::pair<Composition, Composition> fourcovers_sides(int which, int m, int k, int n, int l);

/// Closed-form Schur expansion of r(greater) - r(lesser). Throws
/// std::invalid_argument naming the failed hypothesis.
SchurVector fourcovers_delta(int which, int m, int k, int n, int l);

/// One instance of the four non-relations: lower() is not <=_s upper().
/// Cases 1 and 2 take k', l' in k2, l2; cases 3 and 4 take m', n' in m2, n2.
struct OnlyCoversInstance {
  int which = 1;
  int m = 1, k = 0, n = 1, l = 0;
  int m2 = 1, k2 = 0, n2 = 1, l2 = 0;

  /// Throws std::invalid_argument naming the failed hypothesis.
  void validate() const;
  Composition lower() const;
  Composition upper() const;
};

struct Evidence {
  enum class Kind { RowDominance, ColumnDominance, Content };
  Kind kind = Kind::Content;
  /// Dominance: the upper side's profile fails to be dominated by the
  /// lower side's.
  Partition upper_profile;
  Partition lower_profile;
  /// Content: s_nu appears in the lower ribbon but not the upper one.
  Partition nu;
  Coefficient in_lower = 0;
  Coefficient in_upper = 0;
  /// The evidence was re-checked against profiles and full expansions.
  bool confirmed = false;

  std::string to_string() const;
};

Evidence onlycovers_witness(const OnlyCoversInstance& instance, ExpansionCache& cache);

/// Index pair of the Schubert classes attached to a label.
std::pair<Partition, Partition> schubert_pair(const RectLabel& label);

struct TrimReport {
  std::size_t elements = 0;
  std::size_t join_irreducibles = 0;
  std::size_t meet_irreducibles = 0;
  std::size_t longest_chain_elements = 0;
  /// Some maximum-length chain is made of left modular elements.
  bool left_modular_max_chain = false;
  /// Every element on every maximum-length chain is left modular.
  bool left_modular_every_max_chain = false;
  bool spine_distributive = false;
  bool is_lattice = false;

  bool is_trim() const {
    return is_lattice && join_irreducibles == meet_irreducibles &&
           longest_chain_elements == join_irreducibles + 1 && left_modular_max_chain;
  }
};

TrimReport trim_report(int n, int rows);

}  // namespace schurpos::mf
