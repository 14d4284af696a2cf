#include "esc/fourset.hpp"

#include "esc/error.hpp"

namespace esc {

namespace {

constexpr bool P = true;
constexpr bool M = false;

constexpr std::array<CyclicPattern, pattern_count> patterns{{
    {{P, P, P, P}, true},
    {{M, M, M, M}, true},
    {{P, P, M, M}, true},
    {{M, M, P, P}, true},
    {{M, P, P, M}, true},
    {{P, M, M, P}, true},
    {{P, P, P, M}, false},
    {{P, P, M, P}, false},
    {{P, M, P, P}, false},
    {{P, M, M, M}, false},
    {{M, P, P, P}, false},
    {{M, P, M, M}, false},
    {{M, M, P, M}, false},
    {{M, M, M, P}, false},
}};

} // namespace

FourSet FourSet::make(std::span<const int> labels, int n) {
  if (labels.size() != 4)
    throw parameter_error("a 4-set needs exactly four labels");
  for (int i = 0; i < 4; ++i) {
    if (labels[i] < 0 || labels[i] >= n || (i > 0 && labels[i - 1] >= labels[i]))
      throw parameter_error("4-set labels must be ascending and in [0, n)");
  }
  return FourSet{{labels[0], labels[1], labels[2], labels[3]}, combination_rank(labels, n)};
}

std::string CyclicPattern::str() const {
  std::string s;
  for (bool b : signs)
    s += b ? '+' : '-';
  return s;
}

const std::array<CyclicPattern, pattern_count> &realizable_patterns() { return patterns; }

int pattern_index(SignVector s) {
  for (int i = 0; i < pattern_count; ++i)
    if (patterns[i].signs == s)
      return i;
  return -1;
}

std::array<Lit, 4> cyclic_literals(const FourSet &q, int n) {
  const auto [a, b, c, d] = q.labels;
  return {literal_of_ordered(a, b, c, n), literal_of_ordered(b, c, d, n),
          literal_of_ordered(c, d, a, n), literal_of_ordered(d, a, b, n)};
}

SignVector cyclic_signs(const FourSet &q, const OrientationAssignment &o) {
  const auto [a, b, c, d] = q.labels;
  return {o.chi(a, b, c), o.chi(b, c, d), o.chi(c, d, a), o.chi(d, a, b)};
}

CyclicPattern classify_assignment(const FourSet &q, const OrientationAssignment &o) {
  const SignVector s = cyclic_signs(q, o);
  const int idx = pattern_index(s);
  if (idx < 0)
    throw unrealizable_pattern_error(
        "4-set {" + std::to_string(q.labels[0]) + "," + std::to_string(q.labels[1]) + "," +
        std::to_string(q.labels[2]) + "," + std::to_string(q.labels[3]) +
        "} has unrealizable cyclic pattern " + CyclicPattern{s, false}.str());
  return patterns[idx];
}

} // namespace esc
