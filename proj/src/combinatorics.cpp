#include "esc/combinatorics.hpp"

#include <array>
#include <limits>
#include <string>

#include "esc/error.hpp"

namespace esc {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

struct BinomialTable {
  std::array<std::array<std::uint64_t, max_points + 1>, max_points + 1> c{};

  BinomialTable() {
    for (int n = 0; n <= max_points; ++n) {
      c[n][0] = 1;
      for (int m = 1; m <= n; ++m) {
        const std::uint64_t a = c[n - 1][m - 1];
        const std::uint64_t b = m <= n - 1 ? c[n - 1][m] : 0;
        c[n][m] = (a == saturated || b == saturated || a > saturated - b) ? saturated : a + b;
      }
    }
  }
};

const BinomialTable &table() {
  static const BinomialTable t;
  return t;
}

} // namespace

std::uint64_t binomial(int n, int m) {
  if (m < 0 || n < 0 || m > n)
    return 0;
  if (n > max_points)
    throw capacity_error("binomial table covers at most " + std::to_string(max_points) +
                         " points");
  return table().c[n][m];
}

std::uint64_t checked_binomial(int n, int m) {
  const std::uint64_t v = binomial(n, m);
  if (v == saturated)
    throw capacity_error("C(" + std::to_string(n) + "," + std::to_string(m) +
                         ") overflows 64 bits");
  return v;
}

std::uint64_t combination_rank(std::span<const int> c, int n) {
  const int m = static_cast<int>(c.size());
  std::uint64_t r = checked_binomial(n, m) - 1;
  for (int i = 0; i < m; ++i)
    r -= binomial(n - 1 - c[i], m - i);
  return r;
}

void combination_unrank(std::uint64_t rank, int n, std::span<int> out) {
  const int m = static_cast<int>(out.size());
  if (rank >= checked_binomial(n, m))
    throw parameter_error("combination rank " + std::to_string(rank) + " out of range");
  int next = 0;
  for (int i = 0; i < m; ++i) {
    for (int c = next;; ++c) {
      const std::uint64_t block = binomial(n - 1 - c, m - 1 - i);
      if (rank < block) {
        out[i] = c;
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
}

} // namespace esc
