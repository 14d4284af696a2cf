#include "esc/cc5.hpp"

#include <set>
#include <string>

#include "esc/error.hpp"

namespace esc {

std::string_view to_string(Cc5Mode m) { return m == Cc5Mode::full ? "full" : "reduced"; }

Cc5Mode parse_cc5_mode(std::string_view s) {
  if (s == "full")
    return Cc5Mode::full;
  if (s == "reduced")
    return Cc5Mode::reduced;
  throw parameter_error("unknown cc5 mode '" + std::string(s) + "' (expected full|reduced)");
}

Cc5Clause cc5_clause_for_tuple(std::span<const int, 5> p, int n) {
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (p[i] == p[j])
        throw degenerate_tuple_error("repeated label " + std::to_string(p[i]) +
                                      " in 5-point tuple");
  return {~literal_of_ordered(p[0], p[1], p[2], n), ~literal_of_ordered(p[0], p[1], p[3], n),
          ~literal_of_ordered(p[0], p[1], p[4], n), ~literal_of_ordered(p[0], p[2], p[3], n),
          ~literal_of_ordered(p[0], p[3], p[4], n), literal_of_ordered(p[0], p[2], p[4], n)};
}

Cc5Clause canonical(Cc5Clause c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::uint64_t cc5_clause_count(const EncodingParams &params, Cc5Mode) {
  return cc5_clauses_per_fiveset * checked_binomial(params.n, 5);
}

} // namespace esc
