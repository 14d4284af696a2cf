#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "esc/orientation.hpp"

namespace esc {

/// Layer sizes h_0..h_{r-1}; layer i holds labels s_i..s_i+h_i-1 in
/// counterclockwise order, s_i = h_0 + .. + h_{i-1}.
struct HullTemplate {
  std::vector<int> layers;

  /// Throws template_error unless every h_i >= 3 and the sum is at most n.
  void validate(int n) const;
  int total() const;
  int start(std::size_t layer) const;
  std::string str() const;

  friend bool operator==(const HullTemplate &, const HullTemplate &) = default;
};

/// Per-layer offsets w_0..w_{r-1} with w_0 = 0; w_i = 0 disables the wedge at
/// layer i.
struct SubCube {
  std::vector<int> offsets;

  /// Throws subcube_error on a length mismatch, w_0 != 0 or w_i outside
  /// [0, h_i).
  void validate(const HullTemplate &t) const;
  bool trivial() const;
  std::string str() const;

  friend bool operator==(const SubCube &, const SubCube &) = default;
};

/// Within-layer units (layer by layer, triples in lexicographic order)
/// followed by nesting units (layer, edge, point). Every listed literal is a
/// unit clause.
std::vector<Lit> layer_units(const HullTemplate &t, int n);

/// For each layer i >= 1 with w_i > 0, anchor a = s_{i-1}, b = s_i and
/// c = s_i + w_i: every label x > s_i other than c gets chi(a,b,x) = + and
/// chi(a,x,c) = +, i.e. x lies inside the wedge swept counterclockwise from
/// ray ab to ray ac.
std::vector<Lit> wedge_units(const HullTemplate &t, const SubCube &s, int n);

std::uint64_t layer_unit_count(const HullTemplate &t, int n);
std::uint64_t wedge_unit_count(const HullTemplate &t, const SubCube &s, int n);

/// Parses "5,5,5" style integer lists.
std::vector<int> parse_int_list(const std::string &s);

} // namespace esc
