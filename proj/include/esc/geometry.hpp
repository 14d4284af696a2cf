#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "esc/orientation.hpp"

namespace esc {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point &, const Point &) = default;
};

// Coordinate bound under which orientation determinants are exact in 128 bits.
inline constexpr std::int64_t max_coordinate = std::int64_t{1} << 61;

/// Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
int orientation_sign(const Point &p, const Point &q, const Point &r);

/// True for counterclockwise; throws collinear_error on a zero determinant.
bool orient(const Point &p, const Point &q, const Point &r);

/// Points in general position, labelled by index.
class PointSet {
public:
  PointSet() = default;
  /// Throws point_set_error on duplicates or out-of-range coordinates and
  /// collinear_error on three collinear points.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  const Point &operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }

  /// One "x y" pair per line; blank lines and lines starting with '#' are
  /// skipped. Labels count point lines from 0.
  static PointSet read(std::istream &in);
  void write(std::ostream &out) const;

private:
  std::vector<Point> points_;
};

/// Indices of the convex hull vertices in counterclockwise order, starting
/// from the lowest-then-leftmost point (Andrew's monotone chain).
std::vector<int> hull_vertices(std::span<const Point> pts);

/// Convex position by hull-vertex count.
bool convex_position_by_hull(std::span<const Point> pts);

/// Whether four points are in convex position: none lies inside the
/// triangle of the other three.
bool fourpoint_convex(const Point &a, const Point &b, const Point &c, const Point &d);

/// Convex position by the 4-subset criterion.
bool convex_position_by_foursets(std::span<const Point> pts);

/// Sizes of the onion layers, outermost first. A final group of fewer than
/// three points is reported as its own entry.
std::vector<int> convex_layer_sizes(std::span<const Point> pts);

OrientationAssignment induced_orientations(const PointSet &ps);

/// Triple variables from the geometry plus the selector of each 4-set's
/// pattern set true and all others false. Sized for n = ps.size().
Assignment induced_assignment(const PointSet &ps);

// Brute-force search bound on the number of k-subsets examined.
inline constexpr std::uint64_t max_brute_force_subsets = 10'000'000;

/// Labels of the lexicographically first k-subset in convex position, if any.
/// Each candidate is checked by hull-vertex count and by the 4-subset
/// criterion; a disagreement throws. Throws capacity_error when
/// C(|ps|, k) exceeds max_brute_force_subsets.
std::optional<std::vector<int>> find_convex_subset(const PointSet &ps, int k);

inline bool has_convex_subset(const PointSet &ps, int k) {
  return find_convex_subset(ps, k).has_value();
}

/// Rejection-samples n points on the integer grid [-range, range]^2 until no
/// three are collinear.
PointSet random_general_position(int n, std::int64_t range, std::mt19937_64 &rng);

} // namespace esc
