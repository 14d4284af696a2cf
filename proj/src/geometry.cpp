#include "esc/geometry.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "esc/combinatorics.hpp"
#include "esc/error.hpp"
#include "esc/fourset.hpp"

namespace esc {

namespace {

__extension__ typedef __int128 wide;

std::string fmt_point(const Point &p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

bool in_range(std::int64_t v) { return v > -max_coordinate && v < max_coordinate; }

} // namespace

int orientation_sign(const Point &p, const Point &q, const Point &r) {
  const wide ux = static_cast<wide>(q.x) - p.x;
  const wide uy = static_cast<wide>(q.y) - p.y;
  const wide vx = static_cast<wide>(r.x) - p.x;
  const wide vy = static_cast<wide>(r.y) - p.y;
  const wide det = ux * vy - uy * vx;
  return (det > 0) - (det < 0);
}

bool orient(const Point &p, const Point &q, const Point &r) {
  const int s = orientation_sign(p, q, r);
  if (s == 0)
    throw collinear_error("collinear points " + fmt_point(p) + " " + fmt_point(q) + " " +
                          fmt_point(r));
  return s > 0;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  const std::size_t n = points_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_range(points_[i].x) || !in_range(points_[i].y))
      throw point_set_error("coordinate of point " + std::to_string(i) +
                            " exceeds the exact-arithmetic bound 2^61");
    for (std::size_t j = 0; j < i; ++j)
      if (points_[i] == points_[j])
        throw point_set_error("points " + std::to_string(j) + " and " + std::to_string(i) +
                              " coincide");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation_sign(points_[i], points_[j], points_[k]) == 0)
          throw collinear_error("points " + std::to_string(i) + ", " + std::to_string(j) +
                                ", " + std::to_string(k) + " are collinear");
}

PointSet PointSet::read(std::istream &in) {
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    Point p;
    std::string rest;
    if (!(ls >> p.x >> p.y) || (ls >> rest))
      throw parse_error("line " + std::to_string(lineno) + ": expected \"x y\"");
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

void PointSet::write(std::ostream &out) const {
  for (const auto &p : points_)
    out << p.x << ' ' << p.y << '\n';
}

std::vector<int> hull_vertices(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (n < 3)
    return idx;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  std::vector<int> h(2 * static_cast<std::size_t>(n));
  int m = 0;
  for (int i = 0; i < n; ++i) {
    while (m >= 2 && orientation_sign(pts[h[m - 2]], pts[h[m - 1]], pts[idx[i]]) <= 0)
      --m;
    h[m++] = idx[i];
  }
  for (int i = n - 2, lower = m + 1; i >= 0; --i) {
    while (m >= lower && orientation_sign(pts[h[m - 2]], pts[h[m - 1]], pts[idx[i]]) <= 0)
      --m;
    h[m++] = idx[i];
  }
  h.resize(static_cast<std::size_t>(m - 1));
  // Rotate to start at the lowest (then leftmost) vertex.
  auto low = std::min_element(h.begin(), h.end(), [&](int a, int b) {
    return pts[a].y != pts[b].y ? pts[a].y < pts[b].y : pts[a].x < pts[b].x;
  });
  std::rotate(h.begin(), low, h.end());
  return h;
}

bool convex_position_by_hull(std::span<const Point> pts) {
  return hull_vertices(pts).size() == pts.size();
}

bool fourpoint_convex(const Point &a, const Point &b, const Point &c, const Point &d) {
  const auto inside = [](const Point &p, const Point &q, const Point &r, const Point &x) {
    const bool s1 = orient(p, q, x);
    return s1 == orient(q, r, x) && s1 == orient(r, p, x);
  };
  return !inside(a, b, c, d) && !inside(b, c, d, a) && !inside(c, d, a, b) &&
         !inside(d, a, b, c);
}

bool convex_position_by_foursets(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  bool convex = true;
  for_each_combination(n, 4, [&](std::span<const int> q) {
    if (convex && !fourpoint_convex(pts[q[0]], pts[q[1]], pts[q[2]], pts[q[3]]))
      convex = false;
  });
  return convex;
}

std::vector<int> convex_layer_sizes(std::span<const Point> pts) {
  std::vector<Point> rest(pts.begin(), pts.end());
  std::vector<int> sizes;
  while (!rest.empty()) {
    if (rest.size() < 3) {
      sizes.push_back(static_cast<int>(rest.size()));
      break;
    }
    const auto hull = hull_vertices(rest);
    sizes.push_back(static_cast<int>(hull.size()));
    std::vector<bool> on_hull(rest.size(), false);
    for (int i : hull)
      on_hull[i] = true;
    std::vector<Point> next;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!on_hull[i])
        next.push_back(rest[i]);
    rest = std::move(next);
  }
  return sizes;
}

OrientationAssignment induced_orientations(const PointSet &ps) {
  const int n = static_cast<int>(ps.size());
  OrientationAssignment o(n);
  for_each_combination(n, 3, [&](std::span<const int> t) {
    o.set({t[0], t[1], t[2]}, orient(ps[t[0]], ps[t[1]], ps[t[2]]));
  });
  return o;
}

Assignment induced_assignment(const PointSet &ps) {
  const int n = static_cast<int>(ps.size());
  Assignment a(binomial(n, 3) + pattern_count * binomial(n, 4));
  Var v = 1;
  for_each_combination(n, 3, [&](std::span<const int> t) {
    a.set(v++, orient(ps[t[0]], ps[t[1]], ps[t[2]]));
  });
  std::uint64_t rank = 0;
  for_each_combination(n, 4, [&](std::span<const int> q) {
    const Point &pa = ps[q[0]], &pb = ps[q[1]], &pc = ps[q[2]], &pd = ps[q[3]];
    const SignVector s{orient(pa, pb, pc), orient(pb, pc, pd), orient(pc, pd, pa),
                       orient(pd, pa, pb)};
    const int idx = pattern_index(s);
    if (idx < 0)
      throw unrealizable_pattern_error("geometry produced an alternating cyclic pattern");
    for (int p = 0; p < pattern_count; ++p)
      a.set(selector_var(rank, p, n), p == idx);
    ++rank;
  });
  return a;
}

std::optional<std::vector<int>> find_convex_subset(const PointSet &ps, int k) {
  const int n = static_cast<int>(ps.size());
  if (k < 3)
    throw parameter_error("convex subset size must be at least 3");
  if (k > n)
    return std::nullopt;
  if (checked_binomial(n, k) > max_brute_force_subsets)
    throw capacity_error("C(" + std::to_string(n) + "," + std::to_string(k) +
                         ") exceeds the brute-force bound");
  std::optional<std::vector<int>> found;
  std::vector<Point> sub(static_cast<std::size_t>(k));
  for_each_combination(n, k, [&](std::span<const int> c) {
    if (found)
      return;
    for (int i = 0; i < k; ++i)
      sub[i] = ps[c[i]];
    const bool by_hull = convex_position_by_hull(sub);
    if (by_hull != convex_position_by_foursets(sub))
      throw error("hull and 4-subset convexity tests disagree");
    if (by_hull)
      found.emplace(c.begin(), c.end());
  });
  return found;
}

PointSet random_general_position(int n, std::int64_t range, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int attempts = 0; static_cast<int>(pts.size()) < n; ++attempts) {
    if (attempts > 1000 * (n + 1))
      throw point_set_error("grid too small for " + std::to_string(n) +
                            " points in general position");
    const Point p{coord(rng), coord(rng)};
    bool ok = true;
    for (std::size_t i = 0; ok && i < pts.size(); ++i) {
      if (pts[i] == p)
        ok = false;
      for (std::size_t j = i + 1; ok && j < pts.size(); ++j)
        if (orientation_sign(pts[i], pts[j], p) == 0)
          ok = false;
    }
    if (ok)
      pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

} // namespace esc
