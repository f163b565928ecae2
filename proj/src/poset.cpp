#include "schurpos/poset.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace schurpos {

FinitePoset::FinitePoset(std::size_t n, const Relation& leq)
    : up_(n, boost::dynamic_bitset<>(n)), down_(n, boost::dynamic_bitset<>(n)), upper_(n),
      lower_(n) {
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up_[a].set(b);
        down_[b].set(a);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (!up_[a].test(a)) throw std::invalid_argument("relation is not reflexive");
    for (std::size_t b = a + 1; b < n; ++b)
      if (up_[a].test(b) && up_[b].test(a))
        throw std::invalid_argument("relation is not antisymmetric");
    for (std::size_t b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = up_[a].find_next(b))
      if (!up_[b].is_subset_of(up_[a])) throw std::invalid_argument("relation is not transitive");
  }
  // a is covered by b when nothing lies strictly between them.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = up_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = up_[a].find_next(b)) {
      if (a == b) continue;
      boost::dynamic_bitset<> between = up_[a] & down_[b];
      if (between.count() == 2) {
        hasse_.emplace_back(a, b);
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
  }
}

std::optional<std::size_t> FinitePoset::join(std::size_t a, std::size_t b) const {
  const boost::dynamic_bitset<> bounds = up_[a] & up_[b];
  for (std::size_t u = bounds.find_first(); u != boost::dynamic_bitset<>::npos;
       u = bounds.find_next(u))
    if (up_[u] == bounds) return u;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t a, std::size_t b) const {
  const boost::dynamic_bitset<> bounds = down_[a] & down_[b];
  for (std::size_t u = bounds.find_first(); u != boost::dynamic_bitset<>::npos;
       u = bounds.find_next(u))
    if (down_[u] == bounds) return u;
  return std::nullopt;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return down_[a].count() < down_[b].count();
  });
  return order;
}

bool FinitePoset::is_graded() const {
  const std::vector<std::size_t> order = linear_extension();
  constexpr int kUnset = -1;
  std::vector<int> shortest(size());
  std::vector<int> longest(size());
  for (std::size_t x = 0; x < size(); ++x) {
    std::fill(shortest.begin(), shortest.end(), kUnset);
    std::fill(longest.begin(), longest.end(), kUnset);
    shortest[x] = longest[x] = 0;
    for (std::size_t y : order) {
      if (y == x || !less(x, y)) continue;
      int lo = std::numeric_limits<int>::max();
      int hi = 0;
      for (std::size_t z : lower_[y]) {
        if (shortest[z] == kUnset) continue;
        lo = std::min(lo, shortest[z] + 1);
        hi = std::max(hi, longest[z] + 1);
      }
      if (lo != hi) return false;
      shortest[y] = lo;
      longest[y] = hi;
    }
  }
  return true;
}

bool FinitePoset::semilattice(const std::vector<boost::dynamic_bitset<>>& sets) const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      const boost::dynamic_bitset<> bounds = sets[a] & sets[b];
      if (bounds.none()) continue;
      bool found = false;
      for (std::size_t u = bounds.find_first(); u != boost::dynamic_bitset<>::npos && !found;
           u = bounds.find_next(u))
        found = sets[u] == bounds;
      if (!found) return false;
    }
  }
  return true;
}

bool FinitePoset::is_join_semilattice() const { return semilattice(up_); }
bool FinitePoset::is_meet_semilattice() const { return semilattice(down_); }

bool FinitePoset::is_lattice() const {
  if (size() == 0) return false;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = a + 1; b < size(); ++b)
      if (!join(a, b) || !meet(a, b)) return false;
  return true;
}

bool FinitePoset::is_convex(const std::vector<bool>& member) const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (!member[a]) continue;
    for (std::size_t c = up_[a].find_first(); c != boost::dynamic_bitset<>::npos;
         c = up_[a].find_next(c)) {
      if (!member[c] || c == a) continue;
      const boost::dynamic_bitset<> between = up_[a] & down_[c];
      for (std::size_t b = between.find_first(); b != boost::dynamic_bitset<>::npos;
           b = between.find_next(b))
        if (!member[b]) return false;
    }
  }
  return true;
}

bool FinitePoset::is_down_set(const std::vector<bool>& member) const {
  for (std::size_t a = 0; a < size(); ++a) {
    if (!member[a]) continue;
    for (std::size_t b = down_[a].find_first(); b != boost::dynamic_bitset<>::npos;
         b = down_[a].find_next(b))
      if (!member[b]) return false;
  }
  return true;
}

namespace {

// Elements in the longest chain ending (below) or starting (above) at each x.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> chain_depths(const FinitePoset& p) {
  const std::vector<std::size_t> order = p.linear_extension();
  std::vector<std::size_t> below(p.size(), 1);
  std::vector<std::size_t> above(p.size(), 1);
  for (std::size_t y : order)
    for (std::size_t z : p.lower_covers(y)) below[y] = std::max(below[y], below[z] + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t z : p.upper_covers(*it)) above[*it] = std::max(above[*it], above[z] + 1);
  return {below, above};
}

}  // namespace

std::size_t FinitePoset::longest_chain() const {
  if (size() == 0) return 0;
  const auto [below, above] = chain_depths(*this);
  return *std::max_element(below.begin(), below.end());
}

std::vector<bool> FinitePoset::spine() const {
  std::vector<bool> on(size(), false);
  const std::size_t best = longest_chain();
  const auto [below, above] = chain_depths(*this);
  for (std::size_t x = 0; x < size(); ++x) on[x] = below[x] + above[x] - 1 == best;
  return on;
}

std::vector<std::size_t> join_irreducibles(const FinitePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.lower_covers(x).size() == 1) out.push_back(x);
  return out;
}

std::vector<std::size_t> meet_irreducibles(const FinitePoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

namespace {

std::size_t must(std::optional<std::size_t> v) {
  if (!v) throw std::invalid_argument("poset is not a lattice");
  return *v;
}

}  // namespace

bool is_left_modular(const FinitePoset& lattice, std::size_t x) {
  for (std::size_t y = 0; y < lattice.size(); ++y) {
    for (std::size_t z = 0; z < lattice.size(); ++z) {
      if (!lattice.less(y, z)) continue;
      const std::size_t lhs = must(lattice.meet(must(lattice.join(y, x)), z));
      const std::size_t rhs = must(lattice.join(y, must(lattice.meet(x, z))));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

MaxChainModularity left_modular_max_chains(const FinitePoset& lattice) {
  MaxChainModularity out;
  const std::size_t n = lattice.size();
  if (n == 0) return out;
  std::vector<bool> modular(n);
  for (std::size_t x = 0; x < n; ++x) modular[x] = is_left_modular(lattice, x);

  const std::vector<bool> spine = lattice.spine();
  out.every_chain = true;
  for (std::size_t x = 0; x < n; ++x)
    if (spine[x] && !modular[x]) out.every_chain = false;

  // Longest chain through left modular elements only.
  std::vector<std::size_t> depth(n, 0);
  std::size_t best = 0;
  for (std::size_t y : lattice.linear_extension()) {
    if (!modular[y]) continue;
    depth[y] = 1;
    for (std::size_t z : lattice.lower_covers(y))
      if (modular[z]) depth[y] = std::max(depth[y], depth[z] + 1);
    best = std::max(best, depth[y]);
  }
  out.some_chain = best == lattice.longest_chain();
  return out;
}

bool is_distributive_sublattice(const FinitePoset& lattice, const std::vector<bool>& member) {
  std::vector<std::size_t> elems;
  for (std::size_t x = 0; x < lattice.size(); ++x)
    if (member[x]) elems.push_back(x);
  for (std::size_t a : elems) {
    for (std::size_t b : elems) {
      if (!member[must(lattice.join(a, b))] || !member[must(lattice.meet(a, b))]) return false;
    }
  }
  for (std::size_t x : elems)
    for (std::size_t y : elems)
      for (std::size_t z : elems) {
        const std::size_t lhs = must(lattice.meet(x, must(lattice.join(y, z))));
        const std::size_t rhs =
            must(lattice.join(must(lattice.meet(x, y)), must(lattice.meet(x, z))));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace schurpos
