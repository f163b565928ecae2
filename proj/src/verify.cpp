#include "schurpos/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schurpos {

void Report::merge(const Report& other) {
  checked += other.checked;
  disagreements.insert(disagreements.end(), other.disagreements.begin(),
                       other.disagreements.end());
}

namespace {

std::string params(int which, int m, int k, int n, int l) {
  return "case " + std::to_string(which) + " (m,k,n,l)=(" + std::to_string(m) + "," +
         std::to_string(k) + "," + std::to_string(n) + "," + std::to_string(l) + ")";
}

bool fourcovers_applies(int which, int m, int k, int n, int l) {
  switch (which) {
    case 1: return n - 1 > m;
    case 2: return n > m && l >= 1;
    case 3: return n >= 2 && l > k;
    default: return m >= 2 && n >= 2 && l - 1 > k;
  }
}

template <typename Fn>
void for_each_shape_params(int max_size, Fn&& fn) {
  for (int m = 1; m <= max_size; ++m)
    for (int n = 1; m + n <= max_size; ++n)
      for (int k = 0; m + n + k <= max_size; ++k)
        for (int l = 0; m + n + k + l <= max_size; ++l) fn(m, k, n, l);
}

}  // namespace

Report verify_fourcovers(int max_size, ExpansionCache& cache) {
  Report report;
  for (int which = 1; which <= 4; ++which) {
    for_each_shape_params(max_size, [&](int m, int k, int n, int l) {
      if (!fourcovers_applies(which, m, k, n, l)) return;
      ++report.checked;
      const auto [greater, lesser] = mf::fourcovers_sides(which, m, k, n, l);
      const SchurVector delta = mf::fourcovers_delta(which, m, k, n, l);
      const ComparisonResult r =
          compare_vectors(cache.get(ribbon_of(greater)), cache.get(ribbon_of(lesser)));
      if (r.tag != Comparison::Greater || *r.difference != delta)
        report.fail(params(which, m, k, n, l) + ": expected " + delta.to_string() + ", got " +
                    to_string(r.tag) +
                    (r.difference ? " " + r.difference->to_string() : std::string()));
    });
  }
  return report;
}

Report verify_onlycovers(int max_size, ExpansionCache& cache) {
  Report report;
  auto check = [&](const mf::OnlyCoversInstance& inst) {
    ++report.checked;
    const Composition lower = inst.lower();
    const Composition upper = inst.upper();
    const ComparisonResult r = compare_diagrams(ribbon_of(lower), ribbon_of(upper), cache);
    const std::string what = "case " + std::to_string(inst.which) + " " + lower.to_string() +
                             " vs " + upper.to_string();
    if (r.tag == Comparison::Less || r.tag == Comparison::Equal)
      report.fail(what + ": forbidden relation holds (" + to_string(r.tag) + ")");
    const mf::Evidence ev = mf::onlycovers_witness(inst, cache);
    if (!ev.confirmed) report.fail(what + ": witness not confirmed: " + ev.to_string());
  };
  for (int which = 1; which <= 4; ++which) {
    for_each_shape_params(max_size, [&](int m, int k, int n, int l) {
      mf::OnlyCoversInstance inst{which, m, k, n, l, m, k, n, l};
      if (which <= 2) {
        if (which == 1 && !(n - 1 > m)) return;
        if (which == 2 && !(n > m && l >= 1)) return;
        for (int k2 = 0; k2 <= k + l; ++k2) {
          inst.k2 = k2;
          inst.l2 = k + l - k2;
          check(inst);
        }
      } else {
        if (n < 2) return;
        if (which == 3 && !(l > k)) return;
        if (which == 4 && !(m >= 2 && l - 1 > k)) return;
        for (int m2 = 1; m + n - m2 >= 2; ++m2) {
          inst.m2 = m2;
          inst.n2 = m + n - m2;
          check(inst);
        }
      }
    });
  }
  return report;
}

Report verify_bigdiff(int n, int rows, ExpansionCache& cache) {
  Report report;
  const std::vector<mf::RectLabel> elems = mf::elements(n, rows);
  for (const mf::RectLabel& x : elems) {
    for (const mf::RectLabel& y : elems) {
      ++report.checked;
      const bool closed = mf::leq_s_closed(x, y);
      const ComparisonResult r = compare_diagrams(ribbon_of(mf::ribbon_of_label(y)),
                                                  ribbon_of(mf::ribbon_of_label(x)), cache);
      const bool oracle = r.tag == Comparison::Greater || r.tag == Comparison::Equal;
      if (closed != oracle)
        report.fail(x.to_string() + " <= " + y.to_string() + " at (" + std::to_string(n) + "," +
                    std::to_string(rows) + "): closed form " + (closed ? "true" : "false") +
                    ", expansion " + to_string(r.tag));
    }
  }
  return report;
}

Report verify_lattice_ops(int n, int rows) {
  Report report;
  const std::vector<mf::RectLabel> elems = mf::elements(n, rows);
  const FinitePoset poset = mf::closed_form_poset(n, rows);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      ++report.checked;
      const auto bj = poset.join(i, j);
      const auto bm = poset.meet(i, j);
      const mf::RectLabel cj = mf::join(elems[i], elems[j]);
      const mf::RectLabel cm = mf::meet(elems[i], elems[j]);
      const std::string pair = elems[i].to_string() + "," + elems[j].to_string();
      if (!bj || elems[*bj] != cj)
        report.fail("join " + pair + ": closed form " + cj.to_string() + ", poset " +
                    (bj ? elems[*bj].to_string() : "none"));
      if (!bm || elems[*bm] != cm)
        report.fail("meet " + pair + ": closed form " + cm.to_string() + ", poset " +
                    (bm ? elems[*bm].to_string() : "none"));
    }
  }
  std::set<std::pair<mf::RectLabel, mf::RectLabel>> reduced;
  for (const auto& [lo, hi] : poset.hasse()) reduced.emplace(elems[lo], elems[hi]);
  const auto closed = mf::covers(n, rows);
  const std::set<std::pair<mf::RectLabel, mf::RectLabel>> listed(closed.begin(), closed.end());
  ++report.checked;
  if (listed != reduced)
    report.fail("covers at (" + std::to_string(n) + "," + std::to_string(rows) +
                ") differ from the transitive reduction: " + std::to_string(listed.size()) +
                " listed, " + std::to_string(reduced.size()) + " reduced");
  return report;
}

Report verify_classes(int n, int rows, ExpansionCache& cache) {
  Report report;
  const PosetModel model =
      build_poset(ribbon_diagrams(n, rows, true), BuildOptions{cache.max_size(), 0});
  const std::vector<mf::RectLabel> elems = mf::elements(n, rows);
  std::map<mf::RectLabel, std::size_t> label_class;
  for (std::size_t c = 0; c < model.size(); ++c) {
    ++report.checked;
    const std::vector<SkewDiagram>& members = model.classes[c].members;
    const Composition alpha = composition_of(members.front());
    std::vector<SkewDiagram> expected{ribbon_of(alpha), ribbon_of(reverse(alpha))};
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    if (members != expected)
      report.fail("class of " + alpha.to_string() + " has " + std::to_string(members.size()) +
                  " members, expected {alpha, alpha*}");
    const mf::RectLabel label = mf::label_of_ribbon(alpha);
    if (!label_class.emplace(label, c).second)
      report.fail("label " + label.to_string() + " names two classes");
  }
  ++report.checked;
  if (label_class.size() != elems.size())
    report.fail(std::to_string(label_class.size()) + " classes but " +
                std::to_string(elems.size()) + " labels at (" + std::to_string(n) + "," +
                std::to_string(rows) + ")");
  for (const mf::RectLabel& x : elems)
    if (!label_class.contains(x)) report.fail("label " + x.to_string() + " has no class");
  for (const auto& [x, cx] : label_class) {
    for (const auto& [y, cy] : label_class) {
      ++report.checked;
      if (mf::leq_s_closed(x, y) != model.leq(cx, cy))
        report.fail("order between " + x.to_string() + " and " + y.to_string() +
                    " differs from the ribbon poset");
    }
  }
  return report;
}

Report verify_convexity(int n, const BuildOptions& options) {
  Report report;
  const PosetModel p = build_poset(enumerate_basic_skew(n, std::max(n, kDefaultEnumerationLimit)),
                                   options);
  auto check = [&](const std::string& what, const std::function<bool(const PosetClass&)>& pred) {
    ++report.checked;
    if (!check_convex(p, pred)) report.fail(what + " is not convex in P_" + std::to_string(n));
  };
  for (int rows = 1; rows <= n; ++rows) {
    check("ribbons with " + std::to_string(rows) + " rows", [&](const PosetClass& c) {
      return is_ribbon(c.members[0]) && c.members[0].num_rows() == rows;
    });
    check("multiplicity-free ribbons with " + std::to_string(rows) + " rows",
          [&](const PosetClass& c) {
            return is_ribbon(c.members[0]) && c.members[0].num_rows() == rows &&
                   mf_pattern(composition_of(c.members[0])).has_value();
          });
  }
  for (const Partition& lambda : partitions_of(n)) {
    check("rows(A) = (" + lambda.to_string() + ")",
          [&](const PosetClass& c) { return profile(c.members[0]).rows == lambda; });
    check("cols(A) = (" + lambda.to_string() + ")",
          [&](const PosetClass& c) { return profile(c.members[0]).cols == lambda; });
  }
  return report;
}

Report verify_mflemma(int max_size, ExpansionCache& cache) {
  Report report;
  for (int n = 1; n <= max_size; ++n) {
    for (const Composition& alpha : compositions_of(n)) {
      ++report.checked;
      const bool by_pattern = mf_pattern(alpha).has_value();
      const bool by_expansion = is_multiplicity_free_vec(cache.get(ribbon_of(alpha)));
      if (by_pattern != by_expansion)
        report.fail("ribbon " + alpha.to_string() + ": pattern " + (by_pattern ? "yes" : "no") +
                    ", expansion " + (by_expansion ? "yes" : "no"));
    }
  }
  return report;
}

Report verify_trim(int n, int rows) {
  Report report;
  const mf::TrimReport t = mf::trim_report(n, rows);
  const std::string at = " at (" + std::to_string(n) + "," + std::to_string(rows) + ")";
  const std::size_t expected = static_cast<std::size_t>(std::max(n - 3, 0));
  report.checked += 6;
  if (!t.is_lattice) report.fail("not a lattice" + at);
  if (t.join_irreducibles != expected)
    report.fail(std::to_string(t.join_irreducibles) + " join-irreducibles, expected " +
                std::to_string(expected) + at);
  if (t.meet_irreducibles != expected)
    report.fail(std::to_string(t.meet_irreducibles) + " meet-irreducibles, expected " +
                std::to_string(expected) + at);
  if (t.longest_chain_elements != expected + 1)
    report.fail("longest chain has " + std::to_string(t.longest_chain_elements) +
                " elements, expected " + std::to_string(expected + 1) + at);
  if (!t.left_modular_max_chain || !t.left_modular_every_max_chain)
    report.fail("maximum-length chain with a non-left-modular element" + at);
  if (!t.spine_distributive) report.fail("spine is not a distributive sublattice" + at);
  return report;
}

}  // namespace schurpos
