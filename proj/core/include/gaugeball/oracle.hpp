#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gaugeball/circumcenter.hpp"

namespace gaugeball {

/// Exact one-sided bounds lower <= R(A, C) <= upper.
struct GridBracket {
  Rational lower;
  Rational upper;
  Rational resolution;
  /// [lo_c, hi_c] per coordinate; contains every optimal center.
  std::vector<std::pair<Rational, Rational>> box;
  /// Grid levels visited.
  int levels = 0;
};

/// max_j (sum_c |u_jc|) / b_j: Lipschitz constant of the gauge in the
/// max-coordinate metric.
Rational gauge_lipschitz(const GaugeBody& c);

/// Bounds the circumradius without the simplex engine. The upper bound is the
/// smallest value of f(x) = max_i gauge(a_i - x) over nested dyadic grids of
/// the center box, refined until upper - lower <= L * resolution * n or the
/// grid spacing reaches `resolution`. The lower bound is the best value of
/// the dual over all supports of at most n+1 facets, each solved as a square
/// linear system. Halving `resolution` never widens the bracket.
GridBracket grid_radius(const PointSet& points, const GaugeBody& c, const Rational& resolution);

/// Grid points of the center box (corners included) plus seeded random box
/// points, kept iff max_i gauge(a_i - x) <= radius exactly. Requires
/// radius >= R(A, C).
std::vector<QVector> sample_chebyshev(const PointSet& points, const GaugeBody& c, const Rational& radius,
                                      int samples, std::uint64_t seed);

/// Number of proper faces per dimension, computed from the vertex side:
/// facets are hyperplanes through affinely independent point subsets with
/// every point on one side; faces are intersections of facet vertex sets.
/// Ambient dimension <= 3 (UnsupportedDimension otherwise).
std::map<int, std::size_t> dd_face_count(const VPolytope& v);

}  // namespace gaugeball
