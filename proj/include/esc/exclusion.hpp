#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "esc/combinatorics.hpp"
#include "esc/fourset.hpp"
#include "esc/geometry.hpp"
#include "esc/orientation.hpp"

namespace esc {

/// Length of the exclusion clause of one k-set: C(k,4) 4-subsets times the
/// eight non-convex patterns.
inline std::uint64_t exclusion_clause_length(int k) {
  return binomial(k, 4) * nonconvex_pattern_count;
}

/// Non-convex selectors of every 4-subset of the ascending k-set `kset`,
/// 4-subsets in lexicographic order, patterns in selector order.
std::vector<Lit> exclusion_clause(std::span<const int> kset, int n);

/// Streams the exclusion block for k-sets with rank in [first, last).
template <class F>
void for_each_exclusion_clause(const EncodingParams &params, std::uint64_t first,
                               std::uint64_t last, F &&f) {
  const int n = params.n;
  const int k = params.k;
  const auto q_count = static_cast<std::size_t>(binomial(k, 4));
  std::vector<std::array<int, 4>> subsets;
  subsets.reserve(q_count);
  for_each_combination(k, 4, [&](std::span<const int> q) {
    subsets.push_back({q[0], q[1], q[2], q[3]});
  });
  std::vector<Lit> clause(q_count * nonconvex_pattern_count);
  const std::uint64_t ck4 = binomial(n, 4);
  for_each_combination(n, k, first, last, [&](std::span<const int> kset) {
    std::size_t pos = 0;
    for (const auto &q : subsets) {
      // Lexicographic rank of {kset[q0] < .. < kset[q3]} (see combination_rank).
      const std::uint64_t rank = ck4 - 1 - binomial(n - 1 - kset[q[0]], 4) -
                                 binomial(n - 1 - kset[q[1]], 3) -
                                 binomial(n - 1 - kset[q[2]], 2) -
                                 binomial(n - 1 - kset[q[3]], 1);
      const Var base = selector_var(rank, convex_pattern_count, n);
      for (int p = 0; p < nonconvex_pattern_count; ++p)
        clause[pos++] = Lit(base + static_cast<Var>(p), true);
    }
    f(std::span<const Lit>(clause));
  });
}

template <class F> void for_each_exclusion_clause(const EncodingParams &params, F &&f) {
  for_each_exclusion_clause(params, 0, binomial(params.n, params.k), f);
}

struct ConvexityVerdict {
  bool by_hull = false;
  bool by_foursets = false;
};

/// Convex position of S decided twice: by hull-vertex count and by requiring
/// every 4-subset to be convex. Throws collinear_error on a collinear triple.
ConvexityVerdict convex_position_iff_4subsets(std::span<const Point> pts);

} // namespace esc
