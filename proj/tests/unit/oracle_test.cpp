#include <gtest/gtest.h>

#include "gaugeball/errors.hpp"
#include "gaugeball/oracle.hpp"
#include "support.hpp"

namespace gaugeball {
namespace {

using testing::vec;

void expect_bracket(const GridBracket& b, const GaugeBody& c, const Rational& radius) {
  EXPECT_LE(b.lower, radius);
  EXPECT_GE(b.upper, radius);
  EXPECT_LE(b.upper - b.lower, gauge_lipschitz(c) * b.resolution * static_cast<long>(c.dim()));
}

TEST(GaugeLipschitz, Values) {
  EXPECT_EQ(gauge_lipschitz(square_gauge()), 1);
  EXPECT_EQ(gauge_lipschitz(cross_polytope_gauge(3)), 3);
  EXPECT_EQ(gauge_lipschitz(simplex_gauge(2)), 2);
}

TEST(GridRadius, KnownValues) {
  const auto sq = grid_radius({vec({"0", "0"}), vec({"2", "0"})}, square_gauge(), Rational(1, 8));
  expect_bracket(sq, square_gauge(), 1);
  const auto tri = grid_radius({vec({"0", "0"}), vec({"1", "1"})}, simplex_gauge(2), Rational(1, 64));
  expect_bracket(tri, simplex_gauge(2), Rational(2, 3));
  const auto one = grid_radius({vec({"3", "1/2"})}, square_gauge(), Rational(1, 8));
  EXPECT_EQ(one.lower, 0);
  EXPECT_LE(one.upper, gauge_lipschitz(square_gauge()) * Rational(1, 8) * 2);
  EXPECT_THROW(grid_radius({vec({"0", "0"})}, square_gauge(), Rational(0)), InputError);
}

TEST(GridRadius, BoxHoldsEveryOptimalCenter) {
  const PointSet pts = {vec({"0", "0"}), vec({"2", "0"})};
  const auto b = grid_radius(pts, square_gauge(), Rational(1, 8));
  const auto res = circumradius(pts, square_gauge());
  for (const auto& v : hrep_to_vrep(res.chebyshev).vertices) {
    for (std::size_t i = 0; i < 2; ++i) {
      EXPECT_LE(b.box[i].first, v[i]);
      EXPECT_GE(b.box[i].second, v[i]);
    }
  }
}

// Solver radius inside every bracket; halving the resolution never widens it.
TEST(GridRadiusProperties, BracketsTheSolverAndNests) {
  Rng rng(8080);
  for (const auto& [name, c] : testing::gauge_zoo(5, 2)) {
    for (int trial = 0; trial < 3; ++trial) {
      const PointSet pts = testing::random_points(rng, c.dim());
      const Rational radius = circumradius(pts, c).radius;
      Rational width;
      for (int level = 2; level <= 5; ++level) {
        const Rational res(1, 1L << level);
        const auto b = grid_radius(pts, c, res);
        expect_bracket(b, c, radius);
        if (level > 2) EXPECT_LE(b.upper - b.lower, width) << name;
        width = b.upper - b.lower;
      }
    }
  }
}

TEST(SampleChebyshev, KnownValues) {
  const PointSet sq_pts = {vec({"0", "0"}), vec({"2", "0"})};
  const auto on_line = sample_chebyshev(sq_pts, square_gauge(), 1, 200, 1);
  ASSERT_FALSE(on_line.empty());
  for (const auto& x : on_line) EXPECT_EQ(x[0], 1);
  EXPECT_LE(affine_dim(on_line), 1);

  const PointSet tri_pts = {vec({"0", "0"}), vec({"1", "1"})};
  const auto point = sample_chebyshev(tri_pts, simplex_gauge(2), Rational(2, 3), 200, 1);
  for (const auto& x : point) EXPECT_EQ(x, vec({"2/3", "2/3"}));

  const auto fat = sample_chebyshev(sq_pts, square_gauge(), 2, 200, 1);
  ASSERT_FALSE(fat.empty());
  EXPECT_EQ(affine_dim(fat), 2);
}

TEST(SampleChebyshevProperties, NeverExceedsSolverDimension) {
  Rng rng(99);
  for (const auto& [name, c] : testing::gauge_zoo(6, 2)) {
    for (int trial = 0; trial < 3; ++trial) {
      const PointSet pts = testing::random_points(rng, c.dim());
      const auto res = circumradius(pts, c);
      const auto samples = sample_chebyshev(pts, c, res.radius, 120, 5);
      for (const auto& x : samples) {
        EXPECT_TRUE(res.chebyshev.contains(x)) << name;
        EXPECT_LE(max_gauge_distance(pts, c, x), res.radius) << name;
      }
      if (!samples.empty()) EXPECT_LE(affine_dim(samples), res.dim_cc) << name;
    }
  }
}

TEST(DdFaceCount, KnownValues) {
  EXPECT_EQ(dd_face_count(VPolytope{{vec({"1", "1"}), vec({"-1", "1"}), vec({"1", "-1"}), vec({"-1", "-1"})}}),
            (std::map<int, std::size_t>{{0, 4}, {1, 4}}));
  EXPECT_EQ(dd_face_count(hrep_to_vrep(minkowski_sum_simplex_cube(3, 0).gauge.body())),
            (std::map<int, std::size_t>{{0, 6}, {1, 9}, {2, 5}}));
  EXPECT_EQ(dd_face_count(VPolytope{{vec({"0", "0"}), vec({"1", "2"})}}), (std::map<int, std::size_t>{{0, 2}}));
  EXPECT_EQ(dd_face_count(hrep_to_vrep(cross_polytope_gauge(3).body())),
            (std::map<int, std::size_t>{{0, 6}, {1, 12}, {2, 8}}));
  EXPECT_THROW(dd_face_count(VPolytope{{QVector(4), QVector::unit(4, 0)}}), UnsupportedDimension);
}

}  // namespace
}  // namespace gaugeball
