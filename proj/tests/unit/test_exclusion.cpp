#include <doctest.h>

#include <random>
#include <vector>

#include "esc/error.hpp"
#include "esc/exclusion.hpp"
#include "support.hpp"

using namespace esc;

TEST_CASE("exclusion clause lengths") {
  CHECK(exclusion_clause_length(7) == 280);
  CHECK(exclusion_clause_length(5) == 40);
  CHECK(exclusion_clause_length(6) == 120);
}

TEST_CASE("exclusion clause lists the non-convex selectors of every 4-subset") {
  const int n = 10;
  const std::vector<int> kset{1, 2, 4, 7, 9};
  const auto clause = exclusion_clause(kset, n);
  REQUIRE(clause.size() == 40);
  std::vector<Lit> expect;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c)
        for (int d = c + 1; d < 5; ++d) {
          const std::vector<int> q{kset[a], kset[b], kset[c], kset[d]};
          // Rank by counting the 4-sets that precede q lexicographically.
          std::uint64_t rank = 0;
          for_each_combination(n, 4, [&](std::span<const int> r) {
            if (std::lexicographical_compare(r.begin(), r.end(), q.begin(), q.end()))
              ++rank;
          });
          for (int p = 6; p < 14; ++p)
            expect.push_back(Lit(static_cast<Var>(binomial(n, 3) + 14 * rank + p + 1), true));
        }
  CHECK(clause == expect);
}

TEST_CASE("exclusion block streams one clause per k-set") {
  const auto params = EncodingParams::make(9, 6);
  std::uint64_t count = 0;
  bool match = true;
  std::vector<int> kset{0, 1, 2, 3, 4, 5};
  for_each_exclusion_clause(params, [&](std::span<const Lit> c) {
    const auto expect = exclusion_clause(kset, 9);
    match &= std::equal(c.begin(), c.end(), expect.begin(), expect.end());
    next_combination(kset, 9);
    ++count;
  });
  CHECK(match);
  CHECK(count == binomial(9, 6));
  CHECK(binomial(33, 7) == 4272048);
}

TEST_CASE("convex position two ways") {
  const std::vector<Point> pentagon{{0, 100}, {95, 31}, {59, -81}, {-59, -81}, {-95, 31}};
  const auto v = convex_position_iff_4subsets(pentagon);
  CHECK(v.by_hull);
  CHECK(v.by_foursets);

  const std::vector<Point> square_center{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}};
  const auto w = convex_position_iff_4subsets(square_center);
  CHECK_FALSE(w.by_hull);
  CHECK_FALSE(w.by_foursets);

  const std::vector<Point> collinear{{0, 0}, {1, 1}, {2, 2}, {0, 5}};
  CHECK_THROWS_AS((convex_position_iff_4subsets(collinear)), collinear_error);

  std::mt19937_64 rng(5);
  int disagreements = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 5 + trial % 6;
    const PointSet ps = esc_test::random_points(n, 60, rng);
    const auto r = convex_position_iff_4subsets(ps.points());
    disagreements += r.by_hull != r.by_foursets;
    disagreements += r.by_hull != esc_test::naive_convex_position(ps.points());
  }
  CHECK(disagreements == 0);
}
