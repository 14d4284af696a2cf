#include "esc/exclusion.hpp"

#include "esc/error.hpp"

namespace esc {

std::vector<Lit> exclusion_clause(std::span<const int> kset, int n) {
  const int k = static_cast<int>(kset.size());
  for (int i = 0; i < k; ++i)
    if (kset[i] < 0 || kset[i] >= n || (i > 0 && kset[i - 1] >= kset[i]))
      throw parameter_error("k-set labels must be ascending and in [0, n)");
  std::vector<Lit> clause;
  clause.reserve(exclusion_clause_length(k));
  for_each_combination(k, 4, [&](std::span<const int> q) {
    const std::array<int, 4> labels{kset[q[0]], kset[q[1]], kset[q[2]], kset[q[3]]};
    const std::uint64_t rank = combination_rank(labels, n);
    for (int p = convex_pattern_count; p < pattern_count; ++p)
      clause.emplace_back(selector_var(rank, p, n), true);
  });
  return clause;
}

ConvexityVerdict convex_position_iff_4subsets(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (orientation_sign(pts[i], pts[j], pts[k]) == 0)
          throw collinear_error("general position violated by points " + std::to_string(i) +
                                ", " + std::to_string(j) + ", " + std::to_string(k));
  return {convex_position_by_hull(pts), convex_position_by_foursets(pts)};
}

} // namespace esc
