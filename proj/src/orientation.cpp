#include "esc/orientation.hpp"

#include <array>
#include <limits>
#include <utility>

#include "esc/combinatorics.hpp"
#include "esc/error.hpp"

namespace esc {

EncodingParams EncodingParams::make(int n, int k) {
  if (k < 5)
    throw parameter_error("k must be at least 5 (got " + std::to_string(k) + ")");
  if (n < k)
    throw parameter_error("n must be at least k (got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  if (n > max_points)
    throw capacity_error("n exceeds " + std::to_string(max_points));
  const std::uint64_t vars = checked_binomial(n, 3) + 14 * checked_binomial(n, 4);
  if (vars > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
    throw capacity_error("variable count " + std::to_string(vars) +
                         " exceeds the DIMACS literal range");
  checked_binomial(n, k);
  return EncodingParams{n, k};
}

std::string to_string(Lit l) {
  return (l.positive() ? "+" : "-") + std::to_string(l.var());
}

std::uint64_t triple_count(int n) { return binomial(n, 3); }

Var triple_index(Triple t, int n) {
  if (!(0 <= t.i && t.i < t.j && t.j < t.k && t.k < n))
    throw invalid_triple_error("invalid triple (" + std::to_string(t.i) + "," +
                               std::to_string(t.j) + "," + std::to_string(t.k) +
                               ") for n=" + std::to_string(n));
  const std::array<int, 3> c{t.i, t.j, t.k};
  return static_cast<Var>(combination_rank(c, n) + 1);
}

Triple triple_at(Var id, int n) {
  std::array<int, 3> c{};
  if (id == 0 || id > triple_count(n))
    throw invalid_triple_error("triple id " + std::to_string(id) + " out of range");
  combination_unrank(id - 1, n, c);
  return {c[0], c[1], c[2]};
}

Lit literal_of_ordered(int a, int b, int c, int n) {
  if (a == b || b == c || a == c)
    throw degenerate_triple_error("repeated label in (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  bool even = true;
  if (a > b) {
    std::swap(a, b);
    even = !even;
  }
  if (b > c) {
    std::swap(b, c);
    even = !even;
  }
  if (a > b) {
    std::swap(a, b);
    even = !even;
  }
  return Lit(triple_index({a, b, c}, n), even);
}

OrientationAssignment::OrientationAssignment(int n)
    : n_(n), signs_(static_cast<std::size_t>(triple_count(n)), 0) {}

OrientationAssignment OrientationAssignment::from_model(const Assignment &model, int n) {
  OrientationAssignment o(n);
  for (Var v = 1; v <= o.signs_.size(); ++v)
    if (model.assigned(v))
      o.signs_[v - 1] = model.value(v) ? 1 : -1;
  return o;
}

bool OrientationAssignment::complete() const {
  for (auto s : signs_)
    if (s == 0)
      return false;
  return true;
}

void OrientationAssignment::set(Triple t, bool ccw) {
  signs_[triple_index(t, n_) - 1] = ccw ? 1 : -1;
}

bool OrientationAssignment::defined(int a, int b, int c) const {
  return signs_[literal_of_ordered(a, b, c, n_).var() - 1] != 0;
}

bool OrientationAssignment::chi(int a, int b, int c) const {
  const Lit l = literal_of_ordered(a, b, c, n_);
  const auto s = signs_[l.var() - 1];
  if (s == 0)
    throw parameter_error("orientation of (" + std::to_string(a) + "," + std::to_string(b) +
                          "," + std::to_string(c) + ") is unassigned");
  return (s > 0) == l.positive();
}

} // namespace esc
