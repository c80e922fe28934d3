#include "gaugeball/fixtures.hpp"

#include <algorithm>

#include "gaugeball/errors.hpp"

namespace gaugeball {

namespace {

GaugeBody from_vertices(std::vector<QVector> points) {
  VPolytope v = VPolytope::from_points(std::move(points));
  const std::size_t n = v.vertices.front().size();
  QVector mean(n);
  for (const auto& p : v.vertices) mean += p;
  mean *= Rational(1, static_cast<long>(v.vertices.size()));
  for (auto& p : v.vertices) p -= mean;
  return GaugeBody(vrep_to_hrep(v));
}

}  // namespace

GaugeBody square_gauge() {
  return GaugeBody(HPolytope(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}));
}

GaugeBody cross_polytope_gauge(int n) {
  const auto dim = static_cast<std::size_t>(n);
  std::vector<Halfspace> hs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    QVector u(dim);
    for (std::size_t i = 0; i < dim; ++i) u[i] = (mask >> i) & 1 ? -1 : 1;
    hs.push_back({std::move(u), Rational(1)});
  }
  return GaugeBody(HPolytope(dim, std::move(hs)));
}

GaugeBody simplex_gauge(int n) {
  const auto dim = static_cast<std::size_t>(n);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < dim; ++i) hs.push_back({-QVector::unit(dim, i), Rational(1)});
  QVector ones(dim);
  for (auto& q : ones) q = 1;
  hs.push_back({std::move(ones), Rational(1)});
  return GaugeBody(HPolytope(dim, std::move(hs)));
}

GaugeBody hexagon_gauge() {
  return from_vertices({{1, -1}, {1, 1}, {0, 2}, {-1, 1}, {-1, -1}, {Rational(1, 2), -2}});
}

std::vector<NamedGauge> fixture_family() {
  return {
      {"square", square_gauge()},
      {"cross2", cross_polytope_gauge(2)},
      {"cross3", cross_polytope_gauge(3)},
      {"simplex2", simplex_gauge(2)},
      {"simplex3", simplex_gauge(3)},
      {"cube", minkowski_sum_simplex_cube(3, 1).gauge},
      {"prism", minkowski_sum_simplex_cube(3, 0).gauge},
      {"hexagon", hexagon_gauge()},
  };
}

GaugeBody fixture(const std::string& name) {
  for (auto& f : fixture_family()) {
    if (f.name == name) return std::move(f.gauge);
  }
  throw InputError("unknown fixture '" + name + "'");
}

GaugeBody random_vrep_gauge(Rng& rng, int n) {
  if (n < 1 || n > 3) throw UnsupportedDimension("random_vrep_gauge: dimension must be 1..3");
  const auto dim = static_cast<std::size_t>(n);
  for (;;) {
    const auto count = static_cast<std::size_t>(rng.between(n + 1, 8));
    std::vector<QVector> points;
    for (std::size_t i = 0; i < count; ++i) points.push_back(rng.vector(dim, 10, 4));
    if (affine_dim(points) == n) return from_vertices(std::move(points));
  }
}

GaugeBody random_polygon(Rng& rng, bool plant_opposing) {
  for (;;) {
    const auto count = static_cast<std::size_t>(rng.between(3, 8));
    std::vector<QVector> points;
    for (std::size_t i = 0; i < count; ++i) points.push_back(rng.vector(2, 10, 4));
    if (affine_dim(points) != 2) continue;
    if (!plant_opposing) return from_vertices(std::move(points));

    // Pick an edge (normal u through v1, v2) and put a second point on the
    // support line of -u, giving an edge with normal -u.
    const HPolytope h = vrep_to_hrep(VPolytope::from_points(points));
    const auto& edge = h[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(h.size()) - 1))];
    std::vector<QVector> on_edge;
    const QVector* far = nullptr;
    Rational far_value;
    for (const auto& p : points) {
      const Rational v = dot(edge.normal, p);
      if (v == edge.offset) on_edge.push_back(p);
      if (far == nullptr || v < far_value) {
        far = &p;
        far_value = v;
      }
    }
    const QVector step = (on_edge[1] - on_edge[0]) * Rational(rng.between(1, 4), 4);
    QVector planted = *far + step;
    points.push_back(std::move(planted));
    return from_vertices(std::move(points));
  }
}

}  // namespace gaugeball
