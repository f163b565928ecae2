// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "schurpos/lr.hpp"
#include "schurpos/mf_lattice.hpp"
#include "schurpos/positivity.hpp"
#include "schurpos/verify.hpp"

using namespace schurpos;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void absorb(const Report& r, std::size_t& checked) {
    checked += r.checked;
    for (const auto& d : r.disagreements) require(false, d);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.notes.push_back(std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  if (!o.pass) ++failures;
  std::printf("[%2d] %s  %s (%s; %.2f s)\n", id, o.pass ? "PASS" : "FAIL", title.c_str(),
              o.detail.c_str(), elapsed);
  const std::size_t shown = std::min<std::size_t>(o.notes.size(), 12);
  for (std::size_t i = 0; i < shown; ++i) std::printf("       - %s\n", o.notes[i].c_str());
  if (o.notes.size() > shown) std::printf("       - ... %zu more\n", o.notes.size() - shown);
  std::fflush(stdout);
}

SchurVector vec(int degree, std::initializer_list<std::pair<Partition, Coefficient>> terms) {
  SchurVector v(degree);
  for (const auto& [p, c] : terms) v.add(p, c);
  return v;
}

}  // namespace

int main() {
  ExpansionCache cache(kDefaultExpansionLimit);

  criterion(1, "small skew expansions are exact and fast", [] {
    Outcome o;
    struct Case {
      SkewDiagram shape;
      SchurVector expected;
    };
    const Case cases[] = {
        {SkewDiagram({3, 2, 1}, {2, 1}), vec(3, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}})},
        {SkewDiagram({2, 2}, {1}), vec(3, {{{2, 1}, 1}})},
    };
    for (const auto& c : cases) {
      const auto start = Clock::now();
      const SchurVector got = expand(c.shape);
      const double ms = seconds_since(start) * 1e3;
      o.require(got == c.expected, c.shape.to_string() + " expanded to " + got.to_string());
      o.require(ms < 1.0, c.shape.to_string() + " took " + std::to_string(ms) + " ms");
      o.detail += (o.detail.empty() ? "" : ", ") + c.shape.to_string() + " = " + got.to_string() +
                  " in " + std::to_string(ms).substr(0, 6) + " ms";
    }
    return o;
  });

  criterion(2, "covering identities match LR differences, total size <= 12", [&] {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checked = 0;
    o.absorb(verify_fourcovers(12, cache), checked);
    const double s = seconds_since(start);
    o.require(s < 60.0, "took " + std::to_string(s) + " s, limit 60 s");
    o.detail = std::to_string(checked) + " tuples";
    return o;
  });

  criterion(3, "non-relations never compare the forbidden way, total size <= 12", [&] {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checked = 0;
    o.absorb(verify_onlycovers(12, cache), checked);
    const double s = seconds_since(start);
    o.require(s < 120.0, "took " + std::to_string(s) + " s, limit 120 s");
    o.detail = std::to_string(checked) + " instances, witnesses confirmed";
    return o;
  });

  criterion(4, "closed-form order equals LR order on every M(N,l), N <= 12", [&] {
    Outcome o;
    const auto start = Clock::now();
    std::size_t checked = 0;
    for (int n = 3; n <= 12; ++n)
      for (int rows = 2; rows <= n - 1; ++rows) o.absorb(verify_bigdiff(n, rows, cache), checked);
    const double s = seconds_since(start);
    o.require(s < 300.0, "took " + std::to_string(s) + " s, limit 300 s");
    o.detail = std::to_string(checked) + " ordered pairs";
    return o;
  });

  criterion(5, "closed-form meet and join equal the poset bounds, N <= 12", [] {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 3; n <= 12; ++n)
      for (int rows = 2; rows <= n - 1; ++rows) o.absorb(verify_lattice_ops(n, rows), checked);
    o.detail = std::to_string(checked) + " checks";
    return o;
  });

  criterion(6, "gradedness and join-semilattice properties of P_4, P_5, P_6", [] {
    Outcome o;
    const PosetModel p4 = build_poset(enumerate_basic_skew(4));
    const PosetModel p5 = build_poset(enumerate_basic_skew(5));
    const auto start = Clock::now();
    const PosetModel p6 = build_poset(enumerate_basic_skew(6));
    const double s6 = seconds_since(start);
    o.require(check_graded(p4), "P_4 is not graded");
    o.require(!check_graded(p5), "P_5 is graded");
    o.require(check_join_semilattice(p5), "P_5 is not a join-semilattice");
    o.require(!check_join_semilattice(p6), "P_6 is a join-semilattice");
    o.require(s6 < 600.0, "P_6 build took " + std::to_string(s6) + " s, limit 600 s");
    o.detail = "P_4/P_5/P_6 classes " + std::to_string(p4.size()) + "/" + std::to_string(p5.size()) +
               "/" + std::to_string(p6.size()) + ", P_6 built in " + std::to_string(s6).substr(0, 5) +
               " s";
    return o;
  });

  criterion(7, "multiplicity-free ribbon pattern matches expansions, |alpha| <= 10", [&] {
    Outcome o;
    std::size_t checked = 0;
    o.absorb(verify_mflemma(10, cache), checked);
    o.detail = std::to_string(checked) + " ribbons";
    return o;
  });

  criterion(8, "fixed-row ribbons, their mf part and rows fibres are convex in P_N, N <= 6", [] {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 1; n <= 6; ++n) o.absorb(verify_convexity(n), checked);
    o.detail = std::to_string(checked) + " subposets";
    return o;
  });

  criterion(9, "trim statistics: (12,6) and N - 3 irreducibles for every N <= 12", [] {
    Outcome o;
    const mf::TrimReport t = mf::trim_report(12, 6);
    o.require(t.join_irreducibles == 9 && t.meet_irreducibles == 9 && t.longest_chain_elements == 10 &&
                  t.left_modular_max_chain,
              "(12,6) gave (" + std::to_string(t.join_irreducibles) + ", " +
                  std::to_string(t.meet_irreducibles) + ", " +
                  std::to_string(t.longest_chain_elements) + ", " +
                  (t.left_modular_max_chain ? "true" : "false") + ")");
    o.require(t.left_modular_every_max_chain, "(12,6) has a non-left-modular spine element");
    o.require(t.spine_distributive, "(12,6) spine is not a distributive sublattice");
    std::size_t swept = 0;
    std::size_t off = 0;
    for (int n = 3; n <= 12; ++n)
      for (int rows = 2; rows <= n - 1; ++rows) {
        ++swept;
        const mf::TrimReport r = mf::trim_report(n, rows);
        const std::size_t expected = static_cast<std::size_t>(n - 3);
        if (r.join_irreducibles != expected || r.meet_irreducibles != expected) {
          ++off;
          o.require(false, "(" + std::to_string(n) + "," + std::to_string(rows) + "): " +
                               std::to_string(r.join_irreducibles) + " join- and " +
                               std::to_string(r.meet_irreducibles) + " meet-irreducibles, expected " +
                               std::to_string(expected) + (r.is_trim() ? " (still trim)" : ""));
        }
      }
    o.detail = "(12,6) = (" + std::to_string(t.join_irreducibles) + ", " +
               std::to_string(t.meet_irreducibles) + ", " + std::to_string(t.longest_chain_elements) +
               ", " + (t.left_modular_max_chain ? "true" : "false") + "), sweep " +
               std::to_string(swept - off) + "/" + std::to_string(swept) + " (N,l) match N - 3";
    return o;
  });

  criterion(10, "M(N,l) classes are {alpha, alpha*} for N <= 10; 111171 = 171111", [&] {
    Outcome o;
    std::size_t checked = 0;
    for (int n = 3; n <= 10; ++n)
      for (int rows = 2; rows <= n - 1; ++rows) o.absorb(verify_classes(n, rows, cache), checked);
    const bool same = cache.get(ribbon_of({1, 1, 1, 1, 7, 1})) == cache.get(ribbon_of({1, 7, 1, 1, 1, 1}));
    o.require(same, "r(1,1,1,1,7,1) and r(1,7,1,1,1,1) differ");
    o.detail = std::to_string(checked) + " checks, r(1,1,1,1,7,1) " + (same ? "=" : "!=") +
               " r(1,7,1,1,1,1)";
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
