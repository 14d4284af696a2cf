#include "esc/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "esc/error.hpp"

namespace esc {

namespace {

struct Vec {
  double x = 0;
  double y = 0;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
double norm(Vec a) { return std::hypot(a.x, a.y); }
Vec rotate(Vec a, double phi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}
double angle(Vec a) { return std::atan2(a.y, a.x); }

// Magnitude of the largest emitted coordinate.
constexpr double target_extent = 1e15;
// Below this the innermost features are too coarse for the integer grid.
constexpr double min_inner_extent = 1e3;

std::vector<Point> to_grid(const std::vector<Vec> &world, double inner_extent) {
  double extent = 0;
  for (const auto &p : world)
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  const double scale = target_extent / extent;
  if (inner_extent * scale < min_inner_extent)
    throw capacity_error("hull template too deep to embed on a 64-bit grid");
  std::vector<Point> pts;
  pts.reserve(world.size());
  for (const auto &p : world)
    pts.push_back({std::llround(p.x * scale), std::llround(p.y * scale)});
  return pts;
}

std::vector<Vec> interior_points(const std::vector<Vec> &poly, int count, std::mt19937_64 &rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<Vec> out;
  const double h = static_cast<double>(poly.size());
  for (int i = 0; i < count; ++i) {
    std::vector<double> w(poly.size());
    double sum = 0;
    for (auto &x : w)
      sum += x = ex(rng);
    Vec p;
    for (std::size_t j = 0; j < poly.size(); ++j)
      p = p + (0.5 / h + 0.5 * w[j] / sum) * poly[j];
    out.push_back(p);
  }
  return out;
}

// Layer polygon in its local frame: B = (1,0) first, a far arc of w edges
// over the upper unit semicircle to C = (-1,0), then a shallow near chain of
// h - w edges below the x-axis back to B. Viewed from (0,-Y) with Y > 2*bulge
// the chain faces the viewer and B, C are the two tangent points.
struct LocalLayer {
  std::vector<Vec> verts;
  double corner_lo = 0; // directions of the two edges leaving B
  double corner_hi = 0;
};

constexpr double bulge = 0.4;

LocalLayer make_local_layer(int h, int w, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> jitter(-0.15, 0.15);
  LocalLayer l;
  l.verts.push_back({1, 0});
  for (int j = 1; j < w; ++j) {
    const double t = std::numbers::pi * (j + jitter(rng)) / w;
    l.verts.push_back({std::cos(t), std::sin(t)});
  }
  l.verts.push_back({-1, 0});
  const int m = h - w;
  for (int j = 1; j < m; ++j) {
    const double x = -1 + 2.0 * (j + jitter(rng)) / m;
    l.verts.push_back({x, -bulge * (1 - x * x)});
  }
  l.corner_lo = angle(l.verts[1] - l.verts[0]);
  l.corner_hi = angle(l.verts.back() - l.verts[0]);
  if (l.corner_hi < l.corner_lo)
    l.corner_hi += 2 * std::numbers::pi;
  return l;
}

// Distance from vertex 0 along direction d to the polygon boundary.
double exit_length(const std::vector<Vec> &poly, Vec d) {
  const Vec o = poly[0];
  double best = std::numeric_limits<double>::infinity();
  const std::size_t h = poly.size();
  for (std::size_t j = 1; j + 1 < h; ++j) {
    const Vec p = poly[j], q = poly[j + 1];
    const double den = cross(d, q - p);
    if (std::abs(den) < 1e-15)
      continue;
    const double t = cross(p - o, q - p) / den;
    const double u = cross(p - o, d) / den;
    if (t > 0 && u >= -1e-12 && u <= 1 + 1e-12)
      best = std::min(best, t);
  }
  return best;
}

struct Frame {
  Vec origin;
  double scale = 1;
  double rotation = 0;
  Vec apply(Vec local) const { return origin + scale * rotate(local, rotation); }
};

std::vector<Vec> build_anchored(int n, const HullTemplate &t, const std::vector<int> &pairs,
                                std::mt19937_64 &rng, double &inner_extent) {
  const std::size_t r = t.layers.size();
  std::vector<LocalLayer> local;
  for (std::size_t i = 0; i < r; ++i)
    local.push_back(make_local_layer(t.layers[i], pairs[i], rng));

  std::vector<Frame> frames(r);
  std::uniform_real_distribution<double> spin(0, 2 * std::numbers::pi);
  frames[r - 1] = {{0, 0}, 1, spin(rng)};
  for (std::size_t i = r - 1; i >= 1; --i) {
    const LocalLayer &outer = local[i - 1];
    const double corner = outer.corner_hi - outer.corner_lo;
    const double view = std::max(2 * bulge + 1, 1 / std::tan(0.4 * corner));
    const Vec anchor = frames[i].apply({0, -view});
    const double axis = frames[i].rotation + std::numbers::pi / 2;
    Frame f;
    f.rotation = axis - 0.5 * (outer.corner_lo + outer.corner_hi);
    double need = 0;
    for (const Vec &v : local[i].verts) {
      const Vec p = frames[i].apply(v);
      const Vec d = p - anchor;
      const double len = exit_length(outer.verts, rotate((1 / norm(d)) * d, -f.rotation));
      if (!std::isfinite(len) || len <= 0)
        throw error("inner layer does not fit the outer corner");
      need = std::max(need, norm(d) / len);
    }
    f.scale = 1.3 * need;
    f.origin = anchor - f.scale * rotate(outer.verts[0], f.rotation);
    frames[i - 1] = f;
  }

  std::vector<Vec> world;
  for (std::size_t i = 0; i < r; ++i)
    for (const Vec &v : local[i].verts)
      world.push_back(frames[i].apply(v));
  std::vector<Vec> inner;
  for (const Vec &v : local[r - 1].verts)
    inner.push_back(frames[r - 1].apply(v));
  for (const Vec &p : interior_points(inner, n - t.total(), rng))
    world.push_back(p);
  inner_extent = frames[r - 1].scale;
  return world;
}

bool satisfies_all(const PointSet &ps, const std::vector<Lit> &units) {
  const auto o = induced_orientations(ps);
  for (Lit u : units) {
    const Triple tr = triple_at(u.var(), static_cast<int>(ps.size()));
    if (o.chi(tr.i, tr.j, tr.k) != u.positive())
      return false;
  }
  return true;
}

} // namespace

PointSet concentric_configuration(int n, const HullTemplate &t, std::uint64_t seed) {
  t.validate(n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::uniform_real_distribution<double> spin(0, 2 * std::numbers::pi);
    std::vector<Vec> world;
    double radius = 1;
    std::vector<Vec> innermost;
    for (int h : t.layers) {
      const double phase = spin(rng);
      innermost.clear();
      for (int j = 0; j < h; ++j) {
        const double a = phase + 2 * std::numbers::pi * j / h;
        innermost.push_back({radius * std::cos(a), radius * std::sin(a)});
      }
      world.insert(world.end(), innermost.begin(), innermost.end());
      radius *= 0.6 * std::cos(std::numbers::pi / h);
      radius *= 1 + 0.05 * std::generate_canonical<double, 53>(rng);
    }
    for (const Vec &p : interior_points(innermost, n - t.total(), rng))
      world.push_back(p);
    try {
      PointSet ps(to_grid(world, radius));
      if (satisfies_all(ps, layer_units(t, n)))
        return ps;
    } catch (const collinear_error &) {
    } catch (const point_set_error &) {
    }
  }
  throw error("could not construct a concentric configuration for layers " + t.str());
}

PointSet anchored_configuration(int n, const HullTemplate &t, const std::optional<SubCube> &s,
                                std::uint64_t seed) {
  t.validate(n);
  if (s)
    s->validate(t);
  std::vector<int> pairs;
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    const int w = s ? s->offsets[i] : 0;
    pairs.push_back(w > 0 ? w : (t.layers[i] + 1) / 2);
  }
  std::vector<Lit> units = layer_units(t, n);
  if (s) {
    const auto wedge = wedge_units(t, *s, n);
    units.insert(units.end(), wedge.begin(), wedge.end());
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    double inner_extent = 0;
    const auto world = build_anchored(n, t, pairs, rng, inner_extent);
    try {
      PointSet ps(to_grid(world, inner_extent));
      if (satisfies_all(ps, units))
        return ps;
    } catch (const collinear_error &) {
    } catch (const point_set_error &) {
    }
  }
  throw error("could not construct an anchored configuration for layers " + t.str());
}

} // namespace esc
