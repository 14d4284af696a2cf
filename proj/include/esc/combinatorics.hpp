#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace esc {

// Largest point count the binomial table covers.
inline constexpr int max_points = 200;

/// C(n, m), saturating at UINT64_MAX. Requires 0 <= n <= max_points.
std::uint64_t binomial(int n, int m);

/// Same as binomial() but throws capacity_error on saturation.
std::uint64_t checked_binomial(int n, int m);

/// Lexicographic rank of the ascending combination `c` among all
/// |c|-subsets of {0..n-1}. {0,1,..,m-1} has rank 0.
std::uint64_t combination_rank(std::span<const int> c, int n);

/// Inverse of combination_rank(); writes the combination into `out`.
void combination_unrank(std::uint64_t rank, int n, std::span<int> out);

/// Advances `c` to the next ascending m-subset of {0..n-1} in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::span<int> c, int n) {
  const int m = static_cast<int>(c.size());
  int i = m - 1;
  while (i >= 0 && c[i] == n - m + i)
    --i;
  if (i < 0)
    return false;
  ++c[i];
  for (int j = i + 1; j < m; ++j)
    c[j] = c[j - 1] + 1;
  return true;
}

/// Calls f(span<const int>) for every m-subset of {0..n-1} whose rank lies in
/// [first, last), in rank order.
template <class F>
void for_each_combination(int n, int m, std::uint64_t first, std::uint64_t last,
                          F &&f) {
  if (first >= last || m > n)
    return;
  std::vector<int> c(static_cast<std::size_t>(m));
  combination_unrank(first, n, c);
  for (std::uint64_t r = first; r < last; ++r) {
    f(std::span<const int>(c));
    if (!next_combination(c, n))
      break;
  }
}

template <class F> void for_each_combination(int n, int m, F &&f) {
  for_each_combination(n, m, 0, binomial(n, m), std::forward<F>(f));
}

} // namespace esc
