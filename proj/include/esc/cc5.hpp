#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "esc/combinatorics.hpp"
#include "esc/orientation.hpp"

namespace esc {

enum class Cc5Mode { full, reduced };

std::string_view to_string(Cc5Mode m);
Cc5Mode parse_cc5_mode(std::string_view s);

/// Five negated premises followed by the conclusion.
using Cc5Clause = std::array<Lit, 6>;

/// Clause for the transitivity implication on (p1,..,p5): if p1p2p3, p1p2p4,
/// p1p2p5, p1p3p4 and p1p4p5 are all counterclockwise then so is p1p3p5.
Cc5Clause cc5_clause_for_tuple(std::span<const int, 5> p, int n);

/// Literals sorted by (variable, sign); equal literal sets compare equal.
Cc5Clause canonical(Cc5Clause c);

/// Distinct clauses contributed by one 5-set, in both modes.
inline constexpr int cc5_clauses_per_fiveset = 40;

std::uint64_t cc5_clause_count(const EncodingParams &params, Cc5Mode mode);

namespace detail {

template <class F> void cc5_full_for_fiveset(std::span<const int> s, int n, F &f) {
  std::array<int, 5> perm{s[0], s[1], s[2], s[3], s[4]};
  std::array<Cc5Clause, 120> seen;
  std::size_t seen_count = 0;
  do {
    const Cc5Clause clause = cc5_clause_for_tuple(perm, n);
    const Cc5Clause key = canonical(clause);
    if (std::find(seen.begin(), seen.begin() + seen_count, key) == seen.begin() + seen_count) {
      seen[seen_count++] = key;
      f(std::span<const Lit>(clause));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// One representative per rotation class of (p3,p4,p5): for every apex p1 and
// source p2, the two cyclic orders of the remaining three points starting at
// their smallest label. These are the lexicographically least orderings of
// each class, so the stream matches the first-occurrence order of the full
// deduplication.
template <class F> void cc5_reduced_for_fiveset(std::span<const int> s, int n, F &f) {
  std::array<int, 5> t{};
  for (int i1 = 0; i1 < 5; ++i1) {
    for (int i2 = 0; i2 < 5; ++i2) {
      if (i2 == i1)
        continue;
      std::array<int, 3> rest{};
      int r = 0;
      for (int j = 0; j < 5; ++j)
        if (j != i1 && j != i2)
          rest[r++] = s[j];
      t = {s[i1], s[i2], rest[0], rest[1], rest[2]};
      const Cc5Clause a = cc5_clause_for_tuple(t, n);
      f(std::span<const Lit>(a));
      t = {s[i1], s[i2], rest[0], rest[2], rest[1]};
      const Cc5Clause b = cc5_clause_for_tuple(t, n);
      f(std::span<const Lit>(b));
    }
  }
}

} // namespace detail

/// Clauses of the 5-sets with lexicographic rank in [first, last).
template <class F>
void for_each_cc5_clause(const EncodingParams &params, Cc5Mode mode, std::uint64_t first,
                         std::uint64_t last, F &&f) {
  for_each_combination(params.n, 5, first, last, [&](std::span<const int> s) {
    if (mode == Cc5Mode::full)
      detail::cc5_full_for_fiveset(s, params.n, f);
    else
      detail::cc5_reduced_for_fiveset(s, params.n, f);
  });
}

template <class F>
void for_each_cc5_clause(const EncodingParams &params, Cc5Mode mode, F &&f) {
  for_each_cc5_clause(params, mode, 0, binomial(params.n, 5), f);
}

} // namespace esc
