#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "generators.hpp"
#include "oracle.hpp"
#include "schurpos/diagram.hpp"

using namespace schurpos;

namespace {

int distinct_columns(const SkewDiagram& d) {
  std::set<int> cols;
  for (const Cell& c : d.cells()) cols.insert(c.col);
  return static_cast<int>(cols.size());
}

}  // namespace

TEST_CASE("construction canonicalizes to basic form") {
  const SkewDiagram a({4, 3, 3}, {2, 2});
  CHECK(a.size() == 6);
  CHECK(a.num_rows() == 3);
  CHECK(a.to_string() == "4,3,3/2,2");
  // Empty rows and columns are dropped.
  CHECK(SkewDiagram({3, 3, 1}, {3, 1}) == SkewDiagram({3, 1}, {1}));
  CHECK(SkewDiagram({3, 3}, {1, 1}) == SkewDiagram({2, 2}));
  CHECK(SkewDiagram({3, 1}, {2}).to_string() == "2,1/1");
  CHECK_THROWS_AS(SkewDiagram({2}, {3}), std::invalid_argument);
  CHECK_THROWS_AS(SkewDiagram({2, 1}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("cells are listed row by row") {
  const SkewDiagram a({4, 3, 3}, {2, 2});
  const std::vector<Cell> expected{{1, 3}, {1, 4}, {2, 3}, {3, 1}, {3, 2}, {3, 3}};
  CHECK(a.cells() == expected);
  CHECK(a.contains(2, 3));
  CHECK_FALSE(a.contains(2, 2));
}

TEST_CASE("ribbons and compositions") {
  CHECK(ribbon_of({2, 1, 3}) == SkewDiagram({4, 3, 3}, {2, 2}));
  CHECK(ribbon_of({5}) == SkewDiagram({5}));
  CHECK(ribbon_of({1, 1, 1}) == SkewDiagram({1, 1, 1}));
  CHECK(composition_of(SkewDiagram({4, 3, 3}, {2, 2})) == Composition{2, 1, 3});
  CHECK(composition_of(SkewDiagram({5})) == Composition{5});
  CHECK_THROWS_AS(composition_of(SkewDiagram({2, 2})), std::invalid_argument);
  CHECK_THROWS_AS(ribbon_of(Composition{}), std::invalid_argument);

  for (int n = 1; n <= 12; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const SkewDiagram r = ribbon_of(alpha);
      REQUIRE(is_ribbon(r));
      REQUIRE(composition_of(r) == alpha);
      REQUIRE(distinct_columns(r) + static_cast<int>(alpha.length()) == n + 1);
    }
}

TEST_CASE("profiles") {
  const Profile p = profile(SkewDiagram({4, 3, 3}, {2, 2}));
  CHECK(p.rows == Partition{3, 2, 1});
  CHECK(p.cols == Partition{3, 1, 1, 1});
  const Profile row = profile(SkewDiagram({6}));
  CHECK(row.rows == Partition{6});
  CHECK(row.cols == Partition{1, 1, 1, 1, 1, 1});

  const SkewDiagram r = ribbon_of({1, 7, 1, 1, 1, 1});
  const Profile q = profile(r);
  CHECK(q.rows == Partition{7, 1, 1, 1, 1, 1});
  std::map<int, int> by_col;
  for (const Cell& c : r.cells()) ++by_col[c.col];
  std::vector<int> cols;
  for (const auto& [col, count] : by_col) cols.push_back(count);
  CHECK(q.cols == sort_to_partition(Composition(cols)));
}

TEST_CASE("rotation and transposition") {
  CHECK(rotate180(ribbon_of({2, 1, 3})) == ribbon_of({3, 1, 2}));
  CHECK(rotate180(SkewDiagram({4, 3, 3}, {2, 2})) == SkewDiagram({4, 2, 2}, {1, 1}));
  CHECK(rotate180(SkewDiagram({2, 2})) == SkewDiagram({2, 2}));
  CHECK(transpose(SkewDiagram({4, 3, 3}, {2, 2})) == SkewDiagram({3, 3, 3, 1}, {2, 2}));
  CHECK(transpose(SkewDiagram({5})) == SkewDiagram({1, 1, 1, 1, 1}));

  std::mt19937 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const SkewDiagram d = gen::skew(rng, 10);
    REQUIRE(rotate180(rotate180(d)) == d);
    REQUIRE(transpose(transpose(d)) == d);
    const Profile p = profile(d);
    const Profile t = profile(transpose(d));
    REQUIRE(t.rows == p.cols);
    REQUIRE(t.cols == p.rows);
    REQUIRE(rotate180(d).size() == d.size());
  }
  for (int n = 1; n <= 10; ++n)
    for (const auto& alpha : compositions_of(n))
      REQUIRE(composition_of(rotate180(ribbon_of(alpha))) == reverse(alpha));
}

TEST_CASE("connectivity and ribbon detection") {
  CHECK(is_ribbon(SkewDiagram({4, 3, 3}, {2, 2})));
  CHECK_FALSE(is_ribbon(SkewDiagram({2, 2})));
  CHECK_FALSE(is_ribbon(SkewDiagram({3, 2, 1}, {2, 1})));
  CHECK_FALSE(is_connected(SkewDiagram({3, 2, 1}, {2, 1})));
  CHECK(is_connected(SkewDiagram({3, 3}, {1})));
  CHECK_FALSE(is_ribbon(SkewDiagram({3, 3}, {1})));
}

TEST_CASE("rectangle counts") {
  CHECK(rectangle_count(SkewDiagram({2, 2}), 2, 2) == 1);
  CHECK(rectangle_count(SkewDiagram({3, 2}), 1, 2) == 3);
  CHECK(rectangle_count(SkewDiagram({3, 2}), 2, 1) == 2);
  CHECK(rectangle_count(SkewDiagram({3, 2}), 1, 1) == 5);
  CHECK(rectangle_count(SkewDiagram({3, 2}), 3, 1) == 0);
  CHECK_THROWS_AS(rectangle_count(SkewDiagram({3, 2}), 0, 1), std::invalid_argument);
  for (int n = 1; n <= 8; ++n)
    for (const auto& alpha : compositions_of(n))
      REQUIRE(rectangle_count(ribbon_of(alpha), 2, 2) == 0);
}

TEST_CASE("multiplicity-free pattern") {
  const auto p = mf_pattern({2, 1, 3});
  REQUIRE(p);
  CHECK(*p == MfPattern{2, 1, 3, 0, false});
  CHECK_FALSE(mf_pattern({1, 3, 2, 1}));
  const auto ones = mf_pattern({1, 1, 1, 1, 1});
  REQUIRE(ones);
  CHECK(compose(*ones) == Composition{1, 1, 1, 1, 1});
  const auto single = mf_pattern({6});
  REQUIRE(single);
  CHECK(compose(*single) == Composition{6});
  const auto rev = mf_pattern({1, 1, 3, 2});
  REQUIRE(rev);
  CHECK(compose(*rev) == Composition{1, 1, 3, 2});

  for (int n = 1; n <= 12; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const auto q = mf_pattern(alpha);
      REQUIRE(q.has_value() == mf_pattern(reverse(alpha)).has_value());
      if (q) REQUIRE(compose(*q) == alpha);
    }
}

TEST_CASE("basic skew enumeration") {
  CHECK(enumerate_basic_skew(1) == std::vector<SkewDiagram>{SkewDiagram({1})});
  const std::vector<SkewDiagram> two{SkewDiagram({1, 1}), SkewDiagram({2}),
                                     SkewDiagram({2, 1}, {1})};
  CHECK(enumerate_basic_skew(2) == two);
  CHECK_THROWS_AS(enumerate_basic_skew(9), std::out_of_range);
  CHECK_THROWS_AS(enumerate_basic_skew(0), std::out_of_range);

  for (int n = 1; n <= 6; ++n) {
    const auto list = enumerate_basic_skew(n);
    const std::set<SkewDiagram> got(list.begin(), list.end());
    REQUIRE(got.size() == list.size());
    REQUIRE(std::is_sorted(list.begin(), list.end()));
    REQUIRE(got == oracle::basic_skew(n));
  }
  for (int n = 1; n <= 8; ++n) {
    const auto list = enumerate_basic_skew(n);
    const std::set<SkewDiagram> got(list.begin(), list.end());
    for (const auto& d : list) {
      REQUIRE(d.size() == n);
      REQUIRE(got.count(rotate180(d)) == 1);
      REQUIRE(got.count(transpose(d)) == 1);
    }
  }
}
