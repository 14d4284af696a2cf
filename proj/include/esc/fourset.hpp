#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "esc/combinatorics.hpp"
#include "esc/orientation.hpp"

namespace esc {

/// Ascending 4-set with its lexicographic rank among all C(n,4) 4-sets.
struct FourSet {
  std::array<int, 4> labels{};
  std::uint64_t rank = 0;

  static FourSet make(std::span<const int> labels, int n);
};

/// Signs of the cyclic triples (a,b,c), (b,c,d), (c,d,a), (d,a,b); true is +.
using SignVector = std::array<bool, 4>;

struct CyclicPattern {
  SignVector signs{};
  bool convex = false;

  std::string str() const;
  friend bool operator==(const CyclicPattern &, const CyclicPattern &) = default;
};

inline constexpr int pattern_count = 14;
inline constexpr int convex_pattern_count = 6;
inline constexpr int nonconvex_pattern_count = 8;

/// The 14 realizable patterns: the six convex ones (++++, ----, ++--, --++,
/// -++-, +--+), then the eight non-convex ones in lexicographic order with
/// '+' before '-'. Index i in this list is selector i+1 of every 4-set.
const std::array<CyclicPattern, pattern_count> &realizable_patterns();

/// 0-based index into realizable_patterns(), or -1 for the two alternating
/// sign vectors no four points in general position induce.
int pattern_index(SignVector s);

/// Literals of the four cyclic triples, resolved through permutation parity.
std::array<Lit, 4> cyclic_literals(const FourSet &q, int n);

/// Id of the selector for pattern index `pattern` (0-based) of the 4-set with
/// the given rank. Selectors follow the C(n,3) triple variables.
inline Var selector_var(std::uint64_t fourset_rank, int pattern, int n) {
  return static_cast<Var>(binomial(n, 3) + fourset_rank * pattern_count +
                          static_cast<std::uint64_t>(pattern) + 1);
}

inline constexpr int fourset_clause_count = pattern_count * 5 + 1;

/// Reification t <-> (L1 & L2 & L3 & L4) for every pattern (four binary
/// clauses then the 5-clause), followed by t_1 | ... | t_14.
template <class F> void for_each_fourset_clause(const FourSet &q, int n, F &&f) {
  const auto cyc = cyclic_literals(q, n);
  const auto &patterns = realizable_patterns();
  std::array<Lit, pattern_count> alo{};
  for (int p = 0; p < pattern_count; ++p) {
    const Lit t(selector_var(q.rank, p, n), true);
    std::array<Lit, 4> body{};
    for (int i = 0; i < 4; ++i)
      body[i] = patterns[p].signs[i] ? cyc[i] : ~cyc[i];
    for (int i = 0; i < 4; ++i) {
      const std::array<Lit, 2> c{~t, body[i]};
      f(std::span<const Lit>(c));
    }
    const std::array<Lit, 5> back{t, ~body[0], ~body[1], ~body[2], ~body[3]};
    f(std::span<const Lit>(back));
    alo[p] = t;
  }
  f(std::span<const Lit>(alo));
}

template <class F> void for_each_fourset_block_clause(int n, std::uint64_t first,
                                                      std::uint64_t last, F &&f) {
  std::uint64_t rank = first;
  for_each_combination(n, 4, first, last, [&](std::span<const int> c) {
    FourSet q{{c[0], c[1], c[2], c[3]}, rank++};
    for_each_fourset_clause(q, n, f);
  });
}

/// Sign vector the assignment gives the cyclic triples of q.
SignVector cyclic_signs(const FourSet &q, const OrientationAssignment &a);

/// The realizable pattern matching the assignment on q; throws
/// unrealizable_pattern_error for the alternating sign vectors.
CyclicPattern classify_assignment(const FourSet &q, const OrientationAssignment &a);

} // namespace esc
