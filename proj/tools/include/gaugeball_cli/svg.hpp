#pragma once

#include <string>

#include "gaugeball/circumcenter.hpp"

namespace gaugeball::cli {

/// q rounded half-up to 12 digits after the decimal point, e.g. "-0.333333333333".
std::string fixed_decimal(const Rational& q);

/// Planar scene: the gauge polygon, circumballs R*C + x for up to 8 vertices
/// x of the Chebyshev set, the Chebyshev set itself and the input points.
/// Throws UnsupportedDimension unless n = 2. SVG y points down, so every y is
/// negated.
std::string render_svg(const PointSet& points, const GaugeBody& c);

}  // namespace gaugeball::cli
