#pragma once

#include <cstdint>
#include <optional>

#include "esc/geometry.hpp"
#include "esc/hull.hpp"

namespace esc {

/// Concentric, randomly rotated regular polygons with shrinking radii, one
/// per layer, labelled counterclockwise; leftover labels are placed strictly
/// inside the innermost layer. Satisfies every layer unit of `t`.
PointSet concentric_configuration(int n, const HullTemplate &t, std::uint64_t seed);

/// Nested layers built from the inside out so that, for every layer i >= 1,
/// the first vertex of layer i-1 sees vertices s_i and s_i + w_i as the two
/// tangent points of layer i. Layers without an offset (or with w_i = 0) use
/// a default pair. The result satisfies every layer unit and every wedge
/// unit; throws error if no attempt passes the exact check.
PointSet anchored_configuration(int n, const HullTemplate &t, const std::optional<SubCube> &s,
                                std::uint64_t seed);

} // namespace esc
