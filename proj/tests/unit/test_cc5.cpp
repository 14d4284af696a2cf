#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "esc/cc5.hpp"
#include "esc/error.hpp"
#include "esc/geometry.hpp"
#include "support.hpp"

using namespace esc;

namespace {

// Literal for the ordered triple computed without the library's parity code.
Lit oracle_lit(int a, int b, int c, int n) {
  std::array<int, 3> v{a, b, c};
  std::array<int, 3> s = v;
  std::sort(s.begin(), s.end());
  return Lit(triple_index({s[0], s[1], s[2]}, n), esc_test::even_permutation(v));
}

std::set<Lit> oracle_clause(const std::array<int, 5> &p, int n) {
  return {~oracle_lit(p[0], p[1], p[2], n), ~oracle_lit(p[0], p[1], p[3], n),
          ~oracle_lit(p[0], p[1], p[4], n), ~oracle_lit(p[0], p[2], p[3], n),
          ~oracle_lit(p[0], p[3], p[4], n), oracle_lit(p[0], p[2], p[4], n)};
}

std::set<std::set<Lit>> oracle_distinct(const std::array<int, 5> &s, int n) {
  std::array<int, 5> p = s;
  std::set<std::set<Lit>> out;
  do
    out.insert(oracle_clause(p, n));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<Lit>> stream(const EncodingParams &params, Cc5Mode mode) {
  std::vector<std::vector<Lit>> out;
  for_each_cc5_clause(params, mode,
                      [&](std::span<const Lit> c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

Var x(int i, int j, int k) { return triple_index({i, j, k}, 33); }

} // namespace

TEST_CASE("cc5 clause for a sorted tuple") {
  const std::array<int, 5> p{0, 1, 2, 3, 4};
  const Cc5Clause c = cc5_clause_for_tuple(p, 33);
  const Cc5Clause expect{Lit(x(0, 1, 2), false), Lit(x(0, 1, 3), false), Lit(x(0, 1, 4), false),
                         Lit(x(0, 2, 3), false), Lit(x(0, 3, 4), false), Lit(x(0, 2, 4), true)};
  CHECK(c == expect);
}

TEST_CASE("cc5 clause for a tuple with a transposed prefix") {
  // Premises 102, 103, 104 are odd permutations of 012, 013, 014, so their
  // negations become positive; 123 and 134 are sorted; the conclusion is 124.
  const std::array<int, 5> p{1, 0, 2, 3, 4};
  const Cc5Clause c = cc5_clause_for_tuple(p, 33);
  const Cc5Clause expect{Lit(x(0, 1, 2), true),  Lit(x(0, 1, 3), true),  Lit(x(0, 1, 4), true),
                         Lit(x(1, 2, 3), false), Lit(x(1, 3, 4), false), Lit(x(1, 2, 4), true)};
  CHECK(c == expect);
  const std::set<Lit> as_set(c.begin(), c.end());
  CHECK(as_set == oracle_clause({1, 0, 2, 3, 4}, 33));
}

TEST_CASE("cc5 rejects repeated labels") {
  const std::array<int, 5> p{0, 1, 2, 1, 4};
  CHECK_THROWS_AS((cc5_clause_for_tuple(p, 33)), degenerate_tuple_error);
}

TEST_CASE("dedupe oracle: 40 distinct clauses per 5-set") {
  const auto distinct = oracle_distinct({0, 1, 2, 3, 4}, 5);
  CHECK(distinct.size() == 40);
  CHECK(cc5_clauses_per_fiveset == static_cast<int>(distinct.size()));

  for (Cc5Mode mode : {Cc5Mode::full, Cc5Mode::reduced}) {
    const auto got = stream(EncodingParams::make(5, 5), mode);
    CHECK(got.size() == distinct.size());
    std::set<std::set<Lit>> got_sets;
    for (const auto &c : got)
      got_sets.emplace(c.begin(), c.end());
    CHECK(got_sets == distinct);
  }
}

TEST_CASE("dedupe oracle on other 5-sets") {
  const int n = 12;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i)
      all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::array<int, 5> s{all[0], all[1], all[2], all[3], all[4]};
    std::sort(s.begin(), s.end());
    const auto distinct = oracle_distinct(s, n);
    CHECK(distinct.size() == 40);
    std::set<std::set<Lit>> reduced;
    {
      auto f = [&](std::span<const Lit> c) { reduced.emplace(c.begin(), c.end()); };
      detail::cc5_reduced_for_fiveset(std::span<const int>(s), n, f);
    }
    CHECK(reduced == distinct);
  }
}

TEST_CASE("reduced stream equals the deduplicated full stream") {
  const auto params = EncodingParams::make(8, 5);
  const auto full = stream(params, Cc5Mode::full);
  const auto reduced = stream(params, Cc5Mode::reduced);
  CHECK(full.size() == 40 * binomial(8, 5));
  CHECK(cc5_clause_count(params, Cc5Mode::full) == full.size());
  CHECK(cc5_clause_count(params, Cc5Mode::reduced) == reduced.size());
  CHECK(reduced == full);
}

TEST_CASE("cc5 count at n=33") {
  const auto params = EncodingParams::make(33, 7);
  CHECK(cc5_clause_count(params, Cc5Mode::reduced) == 9493440);
  CHECK(9493440 / binomial(33, 5) == 40);
  CHECK(9493440 % binomial(33, 5) == 0);
}

TEST_CASE("cc5 stream is deterministic and range-splittable") {
  const auto params = EncodingParams::make(9, 5);
  const auto a = stream(params, Cc5Mode::reduced);
  const auto b = stream(params, Cc5Mode::reduced);
  CHECK(a == b);
  std::vector<std::vector<Lit>> pieces;
  const auto total = binomial(9, 5);
  for (std::uint64_t lo = 0; lo < total; lo += 17)
    for_each_cc5_clause(params, Cc5Mode::reduced, lo, std::min(total, lo + 17),
                        [&](std::span<const Lit> c) { pieces.emplace_back(c.begin(), c.end()); });
  CHECK(pieces == a);
}

TEST_CASE("cc5 clauses hold on geometric orientations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet ps = esc_test::random_points(8, 1000, rng);
    const Assignment m = induced_assignment(ps);
    bool all = true;
    for_each_cc5_clause(EncodingParams::make(8, 5), Cc5Mode::full,
                        [&](std::span<const Lit> c) { all &= m.satisfies(c); });
    CHECK(all);
  }
}

TEST_CASE("cc5 mode names") {
  CHECK(parse_cc5_mode("full") == Cc5Mode::full);
  CHECK(parse_cc5_mode("reduced") == Cc5Mode::reduced);
  CHECK(to_string(Cc5Mode::full) == "full");
  CHECK_THROWS_AS((parse_cc5_mode("half")), parameter_error);
}
