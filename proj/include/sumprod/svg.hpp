#pragma once

#include <string>

#include "sumprod/gaussian.hpp"
#include "sumprod/scalar_set.hpp"

namespace sumprod {

// Figure of the slope-cover construction: origin lines of the cover of
// P = A x A, grid points, and the labeled witness sum points. Deterministic
// SVG 1.1, 1000x1000 viewBox, layers: axes, lines, points, witnesses.
std::string render_slope_cover_svg(const ScalarSet& a);

// Figure of the ratio-point picture: A/A as points, MST edges, and sampled
// Mobius-region outlines for the given wedge. Layers: axes, lines (edges and
// region outlines), points.
std::string render_complex_mst_svg(const ScalarSet& a, const WedgeSpec& wedge);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace sumprod
