#include <gtest/gtest.h>

#include "gaugeball/errors.hpp"
#include "gaugeball/exactlp.hpp"
#include "gaugeball/oracle.hpp"
#include "gaugeball/polytope.hpp"
#include "support.hpp"

namespace gaugeball {
namespace {

using testing::vec;

std::map<int, std::size_t> count_faces(const GaugeBody& c) {
  std::map<int, std::size_t> counts;
  for (const auto& f : enumerate_faces(c, static_cast<int>(c.dim()))) ++counts[f.dim];
  return counts;
}

TEST(GaugeBodyTest, ValidatesOriginAndBoundedness) {
  EXPECT_THROW(GaugeBody(HPolytope(1, {{vec({"1"}), 0}, {vec({"-1"}), 1}})), InputError);
  EXPECT_THROW(GaugeBody(HPolytope(2, {{vec({"1", "0"}), 1}, {vec({"-1", "0"}), 1}, {vec({"0", "1"}), 1}})),
               InputError);
  EXPECT_TRUE(square_gauge().symmetric());
  EXPECT_TRUE(cross_polytope_gauge(3).symmetric());
  EXPECT_FALSE(simplex_gauge(2).symmetric());
  EXPECT_FALSE(hexagon_gauge().symmetric());
}

TEST(GaugeEval, KnownValues) {
  EXPECT_EQ(gauge_eval(square_gauge(), vec({"2", "0"})), Rational(2));
  EXPECT_EQ(gauge_eval(simplex_gauge(2), vec({"1", "1"})), Rational(2));
  for (const auto& [name, c] : fixture_family()) EXPECT_EQ(gauge_eval(c, QVector(c.dim())), 0) << name;
}

TEST(SupportFunction, KnownValues) {
  EXPECT_EQ(support_function(square_gauge().body(), vec({"1", "1"})), Rational(2));
  EXPECT_EQ(support_function(square_gauge().body(), vec({"1", "0"})), Rational(1));
  EXPECT_EQ(support_function(HPolytope::singleton(vec({"3", "4"})), vec({"0", "1"})), Rational(4));
  EXPECT_THROW(support_function(HPolytope(1, {{vec({"1"}), 1}}), vec({"-1"})), PreconditionError);
}

TEST(NormalConeGenerators, KnownValues) {
  EXPECT_EQ(normal_cone_generators(square_gauge(), vec({"1", "0"})), (std::vector<QVector>{vec({"1", "0"})}));
  EXPECT_EQ(normal_cone_generators(square_gauge(), vec({"1", "1"})),
            (std::vector<QVector>{vec({"1", "0"}), vec({"0", "1"})}));
  EXPECT_EQ(normal_cone_generators(simplex_gauge(2), vec({"1/2", "1/2"})), (std::vector<QVector>{vec({"1", "1"})}));
  EXPECT_THROW(normal_cone_generators(square_gauge(), vec({"1/2", "0"})), PreconditionError);
  EXPECT_THROW(normal_cone_generators(square_gauge(), vec({"2", "0"})), PreconditionError);
}

TEST(EnumerateFaces, SquareAndTriangleCombinatorics) {
  EXPECT_EQ(count_faces(square_gauge()), (std::map<int, std::size_t>{{0, 4}, {1, 4}}));
  EXPECT_EQ(count_faces(simplex_gauge(2)), (std::map<int, std::size_t>{{0, 3}, {1, 3}}));
  EXPECT_EQ(enumerate_faces(square_gauge(), 1).size(), 4u);
}

TEST(EnumerateFaces, PrismMatchesVertexSideCount) {
  const GaugeBody prism = minkowski_sum_simplex_cube(3, 0).gauge;
  const auto counts = count_faces(prism);
  EXPECT_EQ(counts, (std::map<int, std::size_t>{{0, 6}, {1, 9}, {2, 5}}));
  EXPECT_EQ(counts, dd_face_count(hrep_to_vrep(prism.body())));
}

TEST(EnumerateFaces, AgreesWithVertexSideCountOnTheZoo) {
  for (const auto& [name, c] : testing::gauge_zoo(11, 8)) {
    EXPECT_EQ(count_faces(c), dd_face_count(hrep_to_vrep(c.body()))) << name;
  }
}

TEST(EnumerateFaces, FaceInvariants) {
  for (const auto& [name, c] : testing::gauge_zoo()) {
    const auto faces = enumerate_faces(c, static_cast<int>(c.dim()));
    for (std::size_t i = 0; i + 1 < faces.size(); ++i) EXPECT_LT(faces[i].active, faces[i + 1].active) << name;
    for (const auto& f : faces) {
      EXPECT_EQ(static_cast<int>(f.direction_basis.size()), f.dim) << name;
      EXPECT_EQ(c.body().tight_at(f.relint), f.active) << name;
      EXPECT_TRUE(c.body().contains(f.relint)) << name;
      EXPECT_EQ(gauge_eval(c, f.relint), 1) << name;
      EXPECT_LT(f.dim, static_cast<int>(c.dim())) << name;
      for (const auto& d : f.direction_basis) {
        for (auto j : f.active) EXPECT_EQ(dot(c[j].normal, d), 0) << name;
      }
    }
  }
}

TEST(RelintPoint, KnownValues) {
  const GaugeBody sq = square_gauge();
  const auto right = face_of(sq.body(), {0});
  ASSERT_TRUE(right.has_value());
  EXPECT_EQ(right->dim, 1);
  EXPECT_EQ(relint_point(*right, sq), vec({"1", "0"}));
  const auto corner = face_of(sq.body(), {0, 2});
  ASSERT_TRUE(corner.has_value());
  EXPECT_EQ(corner->dim, 0);
  EXPECT_EQ(relint_point(*corner, sq), vec({"1", "1"}));

  const GaugeBody tri = simplex_gauge(2);
  const auto facet = face_of(tri.body(), {2});
  ASSERT_TRUE(facet.has_value());
  const QVector x = relint_point(*facet, tri);
  EXPECT_EQ(tri.body().tight_at(x), (std::vector<std::size_t>{2}));
  EXPECT_EQ(tri.body().slack(0, x), tri.body().slack(1, x));
}

TEST(RelintPoint, ClosesTheActiveSet) {
  // Two adjacent facets of the square meet in a vertex, which is tight on both
  // and nothing else; the opposite pair is empty.
  const auto r = relint_point(square_gauge().body(), {0, 2});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->closure, (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(relint_point(square_gauge().body(), {0, 1}).has_value());
  EXPECT_FALSE(face_of(square_gauge().body(), {0, 1}).has_value());
}

TEST(MinkowskiSumSimplexCube, KnownValues) {
  const auto square = minkowski_sum_simplex_cube(2, 0);
  EXPECT_EQ(hrep_to_vrep(square.gauge.body()).vertices.size(), 4u);
  EXPECT_TRUE(polytope_contains(square.gauge.body(), square_gauge().body()));
  EXPECT_TRUE(polytope_contains(square_gauge().body(), square.gauge.body()));
  EXPECT_EQ(square.simplex_vertices, (std::vector<QVector>{vec({"1", "0"}), vec({"-1", "0"})}));

  const auto cube = minkowski_sum_simplex_cube(3, 1);
  EXPECT_EQ(cube.simplex_vertices, (std::vector<QVector>{vec({"1", "0", "0"}), vec({"-1", "0", "0"})}));
  EXPECT_EQ(hrep_to_vrep(cube.gauge.body()).vertices.size(), 8u);
  EXPECT_TRUE(cube.gauge.symmetric());

  const auto prism = minkowski_sum_simplex_cube(3, 0);
  EXPECT_EQ(prism.simplex_vertices.size(), 3u);
  QVector sum(3);
  for (const auto& v : prism.simplex_vertices) sum += v;
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(prism.gauge.size(), 5u);
  // The simplex plus the cube sit inside the body.
  for (const auto& v : prism.simplex_vertices) {
    EXPECT_TRUE(prism.gauge.body().contains(v + vec({"0", "0", "1"})));
    EXPECT_TRUE(prism.gauge.body().contains(v + vec({"0", "0", "-1"})));
  }
  EXPECT_THROW(minkowski_sum_simplex_cube(3, 2), InputError);
  EXPECT_THROW(minkowski_sum_simplex_cube(1, 0), InputError);
}

TEST(Conversions, KnownValues) {
  const HPolytope sq = vrep_to_hrep(VPolytope{{vec({"1", "1"}), vec({"-1", "1"}), vec({"1", "-1"}), vec({"-1", "-1"})}});
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_TRUE(polytope_contains(sq, square_gauge().body()) && polytope_contains(square_gauge().body(), sq));

  const std::vector<QVector> tri_pts = {vec({"2", "-1"}), vec({"-1", "2"}), vec({"-1", "-1"})};
  const HPolytope tri = vrep_to_hrep(VPolytope{tri_pts});
  EXPECT_EQ(tri.size(), 3u);
  EXPECT_TRUE(polytope_contains(tri, simplex_gauge(2).body()));
  EXPECT_TRUE(polytope_contains(simplex_gauge(2).body(), tri));
  auto back = hrep_to_vrep(tri).vertices;
  std::sort(back.begin(), back.end());
  auto expected = tri_pts;
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(back, expected);

  const HPolytope point = vrep_to_hrep(VPolytope{{vec({"1/2", "3"})}});
  EXPECT_EQ(affine_hull_dim(point).dim, 0);
  EXPECT_EQ(point.size(), 4u);
  EXPECT_EQ(hrep_to_vrep(point).vertices, (std::vector<QVector>{vec({"1/2", "3"})}));

  EXPECT_THROW(vrep_to_hrep(VPolytope{{QVector(4)}}), UnsupportedDimension);
}

TEST(Conversions, RoundTripOnTheZoo) {
  for (const auto& [name, c] : testing::gauge_zoo(3, 8)) {
    const VPolytope v = hrep_to_vrep(c.body());
    const HPolytope h = vrep_to_hrep(v);
    EXPECT_TRUE(polytope_contains(h, c.body())) << name;
    EXPECT_TRUE(polytope_contains(c.body(), h)) << name;
    EXPECT_EQ(h.size(), c.size()) << name;
    EXPECT_EQ(VPolytope::from_points(v.vertices).vertices.size(), v.vertices.size()) << name;
  }
}

TEST(ConeContains, Basics) {
  const std::vector<QVector> gens = {vec({"1", "0"}), vec({"0", "1"})};
  EXPECT_TRUE(cone_contains(gens, vec({"2", "1/3"})));
  EXPECT_TRUE(cone_contains(gens, vec({"0", "0"})));
  EXPECT_FALSE(cone_contains(gens, vec({"-1", "1"})));
  EXPECT_FALSE(cone_contains({}, vec({"1", "0"})));
}

// Positive homogeneity and the triangle inequality of the gauge, and the
// symmetric case gauge(-z) = gauge(z).
TEST(GaugeProperties, HomogeneitySubadditivitySymmetry) {
  Rng rng(77);
  for (const auto& [name, c] : testing::gauge_zoo()) {
    for (int t = 0; t < 40; ++t) {
      const QVector y = rng.vector(c.dim());
      const QVector z = rng.vector(c.dim());
      const Rational lambda = testing::ratio(rng.between(1, 50), rng.between(1, 7));
      EXPECT_EQ(gauge_eval(c, y * lambda), gauge_eval(c, y) * lambda) << name;
      EXPECT_LE(gauge_eval(c, y + z), gauge_eval(c, y) + gauge_eval(c, z)) << name;
      if (c.symmetric()) EXPECT_EQ(gauge_eval(c, -y), gauge_eval(c, y)) << name;
      const Rational g = gauge_eval(c, y);
      if (g > 0) {
        const QVector boundary = y * (1 / g);
        EXPECT_EQ(gauge_eval(c, boundary), 1) << name;
        EXPECT_FALSE(normal_cone_generators(c, boundary).empty()) << name;
        for (const auto& u : normal_cone_generators(c, boundary)) {
          EXPECT_EQ(support_function(c.body(), u), dot(u, boundary)) << name;
        }
      }
    }
  }
}

}  // namespace
}  // namespace gaugeball
