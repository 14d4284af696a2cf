#include "esc/hull.hpp"

#include <charconv>
#include <numeric>

#include "esc/combinatorics.hpp"
#include "esc/error.hpp"

namespace esc {

namespace {

std::string join(const std::vector<int> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

} // namespace

void HullTemplate::validate(int n) const {
  if (layers.empty())
    throw template_error("hull template needs at least one layer");
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (layers[i] < 3)
      throw template_error("layer " + std::to_string(i) + " has size " +
                           std::to_string(layers[i]) + " (< 3)");
  if (total() > n)
    throw template_error("layer sizes sum to " + std::to_string(total()) + " > n = " +
                         std::to_string(n));
}

int HullTemplate::total() const { return std::accumulate(layers.begin(), layers.end(), 0); }

int HullTemplate::start(std::size_t layer) const {
  return std::accumulate(layers.begin(), layers.begin() + static_cast<std::ptrdiff_t>(layer), 0);
}

std::string HullTemplate::str() const { return join(layers); }

void SubCube::validate(const HullTemplate &t) const {
  if (offsets.size() != t.layers.size())
    throw subcube_error("sub-cube has " + std::to_string(offsets.size()) + " offsets for " +
                        std::to_string(t.layers.size()) + " layers");
  if (offsets[0] != 0)
    throw subcube_error("w_0 must be 0");
  for (std::size_t i = 0; i < offsets.size(); ++i)
    if (offsets[i] < 0 || offsets[i] >= t.layers[i])
      throw subcube_error("w_" + std::to_string(i) + " = " + std::to_string(offsets[i]) +
                          " outside [0, " + std::to_string(t.layers[i]) + ")");
}

bool SubCube::trivial() const {
  for (int w : offsets)
    if (w != 0)
      return false;
  return true;
}

std::string SubCube::str() const { return join(offsets); }

std::vector<Lit> layer_units(const HullTemplate &t, int n) {
  t.validate(n);
  std::vector<Lit> units;
  units.reserve(layer_unit_count(t, n));
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    const int s = t.start(i);
    for_each_combination(t.layers[i], 3, [&](std::span<const int> c) {
      units.push_back(literal_of_ordered(s + c[0], s + c[1], s + c[2], n));
    });
  }
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    const int s = t.start(i);
    const int h = t.layers[i];
    const int deeper = s + h;
    for (int j = 0; j < h; ++j) {
      const int u = s + j;
      const int v = s + (j + 1) % h;
      for (int x = deeper; x < n; ++x)
        units.push_back(literal_of_ordered(u, v, x, n));
    }
  }
  return units;
}

std::vector<Lit> wedge_units(const HullTemplate &t, const SubCube &sc, int n) {
  t.validate(n);
  sc.validate(t);
  std::vector<Lit> units;
  for (std::size_t i = 1; i < t.layers.size(); ++i) {
    if (sc.offsets[i] == 0)
      continue;
    const int a = t.start(i - 1);
    const int b = t.start(i);
    const int c = b + sc.offsets[i];
    for (int x = b + 1; x < n; ++x) {
      if (x == c)
        continue;
      units.push_back(literal_of_ordered(a, b, x, n));
      units.push_back(literal_of_ordered(a, x, c, n));
    }
  }
  return units;
}

std::uint64_t layer_unit_count(const HullTemplate &t, int n) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < t.layers.size(); ++i) {
    const int h = t.layers[i];
    count += binomial(h, 3) + static_cast<std::uint64_t>(h) * (n - t.start(i + 1));
  }
  return count;
}

std::uint64_t wedge_unit_count(const HullTemplate &t, const SubCube &s, int n) {
  std::uint64_t count = 0;
  for (std::size_t i = 1; i < t.layers.size(); ++i)
    if (s.offsets[i] != 0)
      count += 2 * static_cast<std::uint64_t>(n - t.start(i) - 2);
  return count;
}

std::vector<int> parse_int_list(const std::string &s) {
  std::vector<int> out;
  const char *p = s.data();
  const char *end = s.data() + s.size();
  while (p < end) {
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc())
      throw parse_error("bad integer list '" + s + "'");
    out.push_back(v);
    p = next;
    if (p < end) {
      if (*p != ',')
        throw parse_error("bad integer list '" + s + "'");
      ++p;
      if (p == end)
        throw parse_error("bad integer list '" + s + "'");
    }
  }
  return out;
}

} // namespace esc
