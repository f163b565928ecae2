#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schurpos/mf_lattice.hpp"
#include "schurpos/positivity.hpp"

namespace schurpos {

/// Outcome of a verification sweep. The LR engine is ground truth; the
/// closed forms are what is being checked.
struct Report {
  std::size_t checked = 0;
  std::vector<std::string> disagreements;

  bool ok() const { return disagreements.empty(); }
  void fail(std::string what) { disagreements.push_back(std::move(what)); }
  void merge(const Report& other);
};

/// The four covering identities against LR differences, for every parameter
/// tuple with m + k + n + l <= max_size.
Report verify_fourcovers(int max_size, ExpansionCache& cache);

/// The four non-relations, with k', l' (or m', n') ranging independently,
/// for every instance of total size <= max_size. Each witness must also be
/// confirmed.
Report verify_onlycovers(int max_size, ExpansionCache& cache);

/// leq_s_closed against compare_diagrams on every ordered pair of labels.
Report verify_bigdiff(int n, int rows, ExpansionCache& cache);

/// Closed-form meet, join and covers against bounds computed from
/// leq_s_closed.
Report verify_lattice_ops(int n, int rows);

/// Each class of the multiplicity-free ribbon poset is {alpha, alpha*}, and
/// the classes correspond one-to-one to elements(n, rows).
Report verify_classes(int n, int rows, ExpansionCache& cache);

/// Ribbons with fixed row count, their multiplicity-free part, and fibres
/// of fixed rows(A) or cols(A) are convex in P_n.
Report verify_convexity(int n, const BuildOptions& options = {});

/// mf_pattern against multiplicity-freeness of the expansion, for every
/// composition of size 1..max_size.
Report verify_mflemma(int max_size, ExpansionCache& cache);

/// The lattice on elements(n, rows) is trim with n - 3 irreducibles of each
/// kind, every element of a maximum-length chain is left modular, and the
/// spine is a distributive sublattice.
Report verify_trim(int n, int rows);

}  // namespace schurpos
