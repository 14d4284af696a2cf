#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <unistd.h>

#include "esc/cnf.hpp"
#include "esc/dimacs.hpp"
#include "esc/geometry.hpp"

namespace esc_test {

// Sign of (q-p) x (r-p) for small coordinates, independent of the library.
inline int naive_orient(const esc::Point &p, const esc::Point &q, const esc::Point &r) {
  const long double d = static_cast<long double>(q.x - p.x) * static_cast<long double>(r.y - p.y) -
                        static_cast<long double>(q.y - p.y) * static_cast<long double>(r.x - p.x);
  return d > 0 ? 1 : d < 0 ? -1 : 0;
}

// Parity by counting inversions.
inline bool even_permutation(std::span<const int> v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      inv += v[i] > v[j];
  return inv % 2 == 0;
}

// Convex position by gift-wrapping style test: every point is a vertex iff it
// is not inside any triangle of other points (fine for tiny sets).
inline bool naive_convex_position(std::span<const esc::Point> pts) {
  const std::size_t n = pts.size();
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (d == a || d == b || d == c)
            continue;
          const int s1 = naive_orient(pts[a], pts[b], pts[d]);
          const int s2 = naive_orient(pts[b], pts[c], pts[d]);
          const int s3 = naive_orient(pts[c], pts[a], pts[d]);
          if (s1 == s2 && s2 == s3)
            return false;
        }
  return true;
}

inline esc::PointSet random_points(int n, std::int64_t range, std::mt19937_64 &rng) {
  return esc::random_general_position(n, range, rng);
}

// Parses a DIMACS string fully, returning all clauses.
struct ClauseCollector : esc::DimacsHandler {
  std::uint64_t vars = 0;
  std::uint64_t declared = 0;
  std::vector<std::vector<esc::Lit>> clauses;
  std::vector<std::string> comments;
  void comment(std::string_view c) override { comments.emplace_back(c); }
  void header(std::uint64_t v, std::uint64_t c) override {
    vars = v;
    declared = c;
  }
  void clause(std::span<const esc::Lit> l) override { clauses.emplace_back(l.begin(), l.end()); }
};

inline ClauseCollector parse_all(const std::string &dimacs) {
  ClauseCollector c;
  esc::DimacsParser p(c);
  p.feed(dimacs);
  p.finish();
  return c;
}

inline std::filesystem::path scratch_dir(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("esc_unit_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace esc_test
