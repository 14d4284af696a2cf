#include <doctest.h>

#include <random>
#include <sstream>

#include "esc/error.hpp"
#include "esc/exclusion.hpp"
#include "esc/geometry.hpp"
#include "support.hpp"

using namespace esc;

TEST_CASE("orient examples") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}));
  CHECK_FALSE(orient({0, 0}, {0, 1}, {1, 0}));
  CHECK_THROWS_AS((orient({0, 0}, {1, 1}, {2, 2})), collinear_error);
  CHECK(orientation_sign({0, 0}, {1, 1}, {2, 2}) == 0);
}

TEST_CASE("orient is exact near the coordinate bound") {
  const std::int64_t m = max_coordinate - 1;
  // det = m(m-2) - (m-1)^2 = -1, far below double resolution at this scale.
  CHECK(orientation_sign({0, 0}, {m, m - 1}, {m - 1, m - 2}) == -1);
  CHECK(orientation_sign({0, 0}, {m - 1, m - 2}, {m, m - 1}) == 1);
  CHECK(orientation_sign({-m, -m}, {m, m}, {m - 1, m}) == 1);
  CHECK_THROWS_AS((PointSet({{0, 0}, {max_coordinate, 0}, {0, 1}})), point_set_error);
}

TEST_CASE("orient antisymmetry and agreement with literal parity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet ps = esc_test::random_points(6, 1000, rng);
    const OrientationAssignment o = induced_orientations(ps);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 6; ++c) {
          if (a == b || b == c || a == c)
            continue;
          const bool ccw = orient(ps[a], ps[b], ps[c]);
          CHECK(ccw == (esc_test::naive_orient(ps[a], ps[b], ps[c]) > 0));
          CHECK(orient(ps[b], ps[a], ps[c]) == !ccw);
          CHECK(orient(ps[b], ps[c], ps[a]) == ccw);
          CHECK(o.chi(a, b, c) == ccw);
        }
  }
}

TEST_CASE("point set validation and text format") {
  CHECK_THROWS_AS((PointSet({{0, 0}, {0, 0}, {1, 2}})), point_set_error);
  CHECK_THROWS_AS((PointSet({{0, 0}, {1, 1}, {3, 3}})), collinear_error);
  std::istringstream in("# comment\n0 0\n\n4 0\n  2 3\n");
  const PointSet ps = PointSet::read(in);
  REQUIRE(ps.size() == 3);
  CHECK(ps[2] == Point{2, 3});
  std::ostringstream out;
  ps.write(out);
  std::istringstream again(out.str());
  CHECK(PointSet::read(again).points().size() == 3);
  std::istringstream bad("0 0\n1 x\n");
  CHECK_THROWS_AS((PointSet::read(bad)), parse_error);
}

TEST_CASE("hull and layers") {
  const std::vector<Point> pts{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}, {4, 6}, {6, 7}};
  CHECK(hull_vertices(pts) == std::vector<int>{0, 1, 2, 3});
  CHECK_FALSE(convex_position_by_hull(pts));
  CHECK(convex_layer_sizes(pts) == std::vector<int>{4, 3});
  CHECK(fourpoint_convex({0, 0}, {10, 0}, {10, 10}, {0, 10}));
  CHECK_FALSE(fourpoint_convex({0, 0}, {10, 0}, {0, 10}, {2, 2}));
}

TEST_CASE("induced assignment of a triangle") {
  const PointSet tri({{0, 0}, {1, 0}, {0, 1}});
  const Assignment m = induced_assignment(tri);
  CHECK(m.num_vars() == 1);
  CHECK(m.satisfies(Lit(1, true)));
}

TEST_CASE("convex subset search") {
  const PointSet tri({{0, 0}, {4, 0}, {2, 3}, {2, 1}});
  CHECK_FALSE(has_convex_subset(tri, 4));
  CHECK(has_convex_subset(tri, 3));
  const PointSet sq({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}});
  const auto w = find_convex_subset(sq, 4);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{0, 1, 2, 3});

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial)
    CHECK(has_convex_subset(esc_test::random_points(5, 100, rng), 4));
  for (int trial = 0; trial < 30; ++trial)
    CHECK(has_convex_subset(esc_test::random_points(9, 100, rng), 5));

  const PointSet big = esc_test::random_points(40, 100000, rng);
  CHECK_THROWS_AS((find_convex_subset(big, 10)), capacity_error);
}

TEST_CASE("four-set criterion matches the hull on random sets") {
  std::mt19937_64 rng(29);
  int bad = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + trial % 7;
    const PointSet ps = esc_test::random_points(n, 40, rng);
    bad += convex_position_by_hull(ps.points()) != convex_position_by_foursets(ps.points());
  }
  CHECK(bad == 0);
}

TEST_CASE("random general position") {
  std::mt19937_64 rng(1);
  const PointSet ps = esc_test::random_points(12, 20, rng);
  CHECK(ps.size() == 12);
  for (const auto &p : ps.points()) {
    CHECK(std::abs(p.x) <= 20);
    CHECK(std::abs(p.y) <= 20);
  }
}
