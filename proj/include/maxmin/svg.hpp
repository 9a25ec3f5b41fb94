#pragma once

// Planar figures. The square [lo, hi]^2 is drawn on a 512 x 512 canvas with a
// 16 px margin and the y axis pointing up. Coordinates are printed with three
// decimals, so output is byte-for-byte reproducible.

#include <string>
#include <vector>

#include "maxmin/geometry.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin {

/// One polyline per elementary piece, plus the endpoints.
std::string render_segment_svg(const SegmentDecomposition& seg);

/// Every sector at the anchor as a box, plus the anchor.
std::string render_semispaces_svg(const SemispaceFamily& family);

/// The closure of S_index(anchor) (a hyperplane for diagonal anchors) shaded,
/// with optional generators drawn on top.
std::string render_hyperplane_svg(const SemispaceId& s, const SemiringBounds& bounds,
                                  const std::vector<Point>& generators = {});

}  // namespace maxmin
