#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace schurpos {

using Edge = std::pair<std::size_t, std::size_t>;

/// A finite partial order on 0..n-1 held as up-set and down-set bitsets.
/// The cover relation is derived once on construction.
class FinitePoset {
 public:
  using Relation = std::function<bool(std::size_t, std::size_t)>;

  FinitePoset() = default;
  /// Throws std::invalid_argument unless `leq` is reflexive, antisymmetric
  /// and transitive on 0..n-1.
  FinitePoset(std::size_t n, const Relation& leq);

  std::size_t size() const { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }

  /// Cover pairs (lower, upper), sorted.
  const std::vector<Edge>& hasse() const { return hasse_; }
  const std::vector<std::size_t>& upper_covers(std::size_t a) const { return upper_[a]; }
  const std::vector<std::size_t>& lower_covers(std::size_t a) const { return lower_[a]; }

  std::optional<std::size_t> join(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;

  /// Every pair x < y has all saturated chains from x to y of equal length.
  bool is_graded() const;
  /// Every pair with a common upper bound has a least upper bound.
  bool is_join_semilattice() const;
  bool is_meet_semilattice() const;
  /// Non-empty, with every pair having a join and a meet.
  bool is_lattice() const;

  /// For all a < b < c with a and c members, b is a member.
  bool is_convex(const std::vector<bool>& member) const;
  bool is_down_set(const std::vector<bool>& member) const;

  /// Elements ordered so that a < b implies a comes first.
  std::vector<std::size_t> linear_extension() const;

  /// Number of elements in a longest chain (0 for the empty poset).
  std::size_t longest_chain() const;
  /// Membership of each element in some chain of maximum length.
  std::vector<bool> spine() const;

 private:
  bool semilattice(const std::vector<boost::dynamic_bitset<>>& sets) const;

  std::vector<boost::dynamic_bitset<>> up_;
  std::vector<boost::dynamic_bitset<>> down_;
  std::vector<Edge> hasse_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<std::vector<std::size_t>> lower_;
};

/// Elements with exactly one lower cover.
std::vector<std::size_t> join_irreducibles(const FinitePoset& p);
/// Elements with exactly one upper cover.
std::vector<std::size_t> meet_irreducibles(const FinitePoset& p);

/// x is left modular when (y v x) ^ z = y v (x ^ z) for all y < z.
/// Requires a lattice.
bool is_left_modular(const FinitePoset& lattice, std::size_t x);

struct MaxChainModularity {
  /// Some chain of maximum length consists of left modular elements.
  bool some_chain = false;
  /// Every element on every chain of maximum length is left modular.
  bool every_chain = false;
};

MaxChainModularity left_modular_max_chains(const FinitePoset& lattice);

/// Closed under the ambient join and meet, and distributive.
bool is_distributive_sublattice(const FinitePoset& lattice, const std::vector<bool>& member);

}  // namespace schurpos
