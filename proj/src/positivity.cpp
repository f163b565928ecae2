#include "schurpos/positivity.hpp"

#include <algorithm>
#include <stdexcept>

#include "schurpos/parallel.hpp"

namespace schurpos {

bool necessary_filter(const SkewDiagram& a, const SkewDiagram& b) {
  if (a.size() != b.size()) throw std::invalid_argument("diagrams differ in size");
  const Profile pa = profile(a);
  const Profile pb = profile(b);
  if (!dominance_leq(pa.rows, pb.rows) || !dominance_leq(pa.cols, pb.cols)) return false;
  const int height = std::max(a.num_rows(), b.num_rows());
  const int width = std::max(a.num_cols(), b.num_cols());
  for (int m = 1; m <= height; ++m)
    for (int n = 1; n <= width; ++n)
      if (rectangle_count(a, m, n) > rectangle_count(b, m, n)) return false;
  return true;
}

SchurVector ExpansionCache::get(const SkewDiagram& a) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(a); it != memo_.end()) return it->second;
  }
  SchurVector v = expand(a, max_size_);
  std::lock_guard lock(mutex_);
  return memo_.emplace(a, std::move(v)).first->second;
}

ComparisonResult compare_diagrams(const SkewDiagram& a, const SkewDiagram& b,
                                  ExpansionCache& cache) {
  if (a.size() != b.size()) return {Comparison::Incomparable, std::nullopt};
  if (a.num_rows() != b.num_rows() && is_ribbon(a) && is_ribbon(b))
    return {Comparison::Incomparable, std::nullopt};
  const bool a_may_exceed = necessary_filter(a, b);
  const bool b_may_exceed = necessary_filter(b, a);
  if (!a_may_exceed && !b_may_exceed) return {Comparison::Incomparable, std::nullopt};

  ComparisonResult result = compare_vectors(cache.get(a), cache.get(b));
  const bool a_over = result.tag == Comparison::Greater || result.tag == Comparison::Equal;
  const bool b_over = result.tag == Comparison::Less || result.tag == Comparison::Equal;
  if ((a_over && !a_may_exceed) || (b_over && !b_may_exceed))
    throw std::logic_error("necessary filter contradicts expansion for " + a.to_string() +
                           " vs " + b.to_string());
  return result;
}

ComparisonResult compare_diagrams(const SkewDiagram& a, const SkewDiagram& b, int max_size) {
  ExpansionCache cache(max_size);
  return compare_diagrams(a, b, cache);
}

std::size_t PosetModel::class_of(const SkewDiagram& a) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), a)) return i;
  return classes.size();
}

PosetModel build_poset(const std::vector<SkewDiagram>& diagrams, const BuildOptions& options) {
  for (const SkewDiagram& d : diagrams)
    if (d.size() != diagrams.front().size())
      throw std::invalid_argument("poset diagrams must all have the same size");

  std::vector<SkewDiagram> unique = diagrams;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  ExpansionCache cache(options.max_size);
  std::vector<SchurVector> expansions(unique.size());
  parallel_for(
      unique.size(), [&](std::size_t i) { expansions[i] = cache.get(unique[i]); },
      options.threads);

  std::map<SchurVector::Terms, std::vector<SkewDiagram>> groups;
  for (std::size_t i = 0; i < unique.size(); ++i)
    groups[expansions[i].terms()].push_back(unique[i]);

  PosetModel model;
  for (auto& [terms, members] : groups) {
    std::sort(members.begin(), members.end());
    model.classes.push_back({members, cache.get(members.front())});
  }
  std::sort(model.classes.begin(), model.classes.end(),
            [](const PosetClass& x, const PosetClass& y) { return x.members[0] < y.members[0]; });

  const std::size_t n = model.classes.size();
  std::vector<char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  parallel_for(
      n * n,
      [&](std::size_t idx) {
        const std::size_t i = idx / n;
        const std::size_t j = idx % n;
        if (i >= j) return;
        const ComparisonResult r =
            compare_diagrams(model.classes[i].members[0], model.classes[j].members[0], cache);
        if (r.tag == Comparison::Equal)
          throw std::logic_error("distinct classes compare equal");
        if (r.tag == Comparison::Less) leq[i * n + j] = 1;
        if (r.tag == Comparison::Greater) leq[j * n + i] = 1;
      },
      options.threads);
  model.order = FinitePoset(n, [&](std::size_t i, std::size_t j) { return leq[i * n + j] != 0; });
  return model;
}

std::vector<SkewDiagram> ribbon_diagrams(int n, int rows, bool multiplicity_free_only) {
  std::vector<SkewDiagram> out;
  for (const Composition& alpha : compositions_of(n, rows)) {
    if (multiplicity_free_only && !mf_pattern(alpha)) continue;
    out.push_back(ribbon_of(alpha));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> class_mask(const PosetModel& p,
                             const std::function<bool(const PosetClass&)>& pred) {
  std::vector<bool> mask(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mask[i] = pred(p.classes[i]);
  return mask;
}

bool check_graded(const PosetModel& p) { return p.order.is_graded(); }

bool check_join_semilattice(const PosetModel& p) { return p.order.is_join_semilattice(); }

bool check_convex(const PosetModel& p, const std::function<bool(const PosetClass&)>& member) {
  return p.order.is_convex(class_mask(p, member));
}

}  // namespace schurpos
