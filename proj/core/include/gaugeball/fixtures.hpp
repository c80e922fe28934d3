#pragma once

#include <string>
#include <vector>

#include "gaugeball/polytope.hpp"
#include "gaugeball/random.hpp"

namespace gaugeball {

struct NamedGauge {
  std::string name;
  GaugeBody gauge;
};

GaugeBody square_gauge();
GaugeBody cross_polytope_gauge(int n);
/// {-y_i <= 1, y_1 + ... + y_n <= 1}
GaugeBody simplex_gauge(int n);
/// Hexagon with exactly one pair of anti-parallel edges (normals +-e_1).
GaugeBody hexagon_gauge();

/// square, cross2, cross3, simplex2, simplex3, cube, prism, hexagon.
std::vector<NamedGauge> fixture_family();
/// Throws InputError for an unknown name.
GaugeBody fixture(const std::string& name);

/// conv of n+1..8 random points (full-dimensional, recentred at their mean) in
/// dimension n <= 3, converted to an H-description.
GaugeBody random_vrep_gauge(Rng& rng, int n);

/// Random polygon; with `plant_opposing` an edge anti-parallel to an existing
/// edge is added.
GaugeBody random_polygon(Rng& rng, bool plant_opposing);

}  // namespace gaugeball
