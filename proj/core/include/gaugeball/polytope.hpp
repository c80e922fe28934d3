#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gaugeball/hpolytope.hpp"
#include "gaugeball/qlinalg.hpp"

namespace gaugeball {

/// Unit ball of a generalized Minkowski space: a bounded H-polytope with
/// every offset strictly positive, so 0 is interior.
class GaugeBody {
 public:
  /// Throws InputError if some offset is <= 0 or the body is unbounded.
  explicit GaugeBody(HPolytope body);

  const HPolytope& body() const { return body_; }
  std::size_t dim() const { return body_.dim(); }
  std::size_t size() const { return body_.size(); }
  const Halfspace& operator[](std::size_t j) const { return body_[j]; }

  /// True iff for every (u, b) the constraint (-u, b) is present too.
  bool symmetric() const { return symmetric_; }

 private:
  HPolytope body_;
  bool symmetric_ = false;
};

/// Non-empty face of a polytope, identified by its active closure: the full
/// set of constraints tight on the whole face.
struct Face {
  std::vector<std::size_t> active;
  int dim = 0;
  /// Basis of the direction space of aff(F).
  std::vector<QVector> direction_basis;
  /// A point whose tight set is exactly `active`.
  QVector relint;

  bool contains_face(const Face& smaller) const;  // active subset of smaller.active
};

struct VPolytope {
  std::vector<QVector> vertices;

  /// Drops repeated and non-extreme points (exact LP membership test).
  static VPolytope from_points(std::vector<QVector> points);
};

/// gamma_C(z) = max(0, max_j <u_j, z> / b_j).
Rational gauge_eval(const GaugeBody& c, const QVector& z);

/// h(p, u) = max{<x, u> : x in p}. Throws PreconditionError when p is empty
/// or unbounded in direction u.
Rational support_function(const HPolytope& p, const QVector& u);

/// Facet normals u_j with <u_j, x> = b_j. The normal cone N(C, x) is their
/// nonnegative hull. Throws PreconditionError unless gauge_eval(c, x) == 1.
std::vector<QVector> normal_cone_generators(const GaugeBody& c, const QVector& x);

/// Result of the uniform-slack relative-interior LP on a face description.
struct RelintResult {
  QVector point;
  std::vector<std::size_t> closure;
};

/// Point of relint({y in p : <u_j, y> = b_j for j in active}) maximizing the
/// smallest slack of the remaining constraints; nullopt if that set is empty.
std::optional<RelintResult> relint_point(const HPolytope& p, const std::vector<std::size_t>& active);

/// Recomputes a relative-interior point of `f`.
QVector relint_point(const Face& f, const GaugeBody& c);

/// Face spanned by the given active set (after closure), or nullopt if empty.
std::optional<Face> face_of(const HPolytope& p, const std::vector<std::size_t>& active);

/// All non-empty proper faces of codimension <= max_codim, sorted by active
/// closure.
std::vector<Face> enumerate_faces(const GaugeBody& c, int max_codim);

struct SimplexCubeGauge {
  GaugeBody gauge;
  /// Vertices x_1..x_{n-k} of the simplex factor (centroid 0).
  std::vector<QVector> simplex_vertices;
};

/// Delta_{n-k-1} + Box_{k+1}: a rational simplex with centroid 0 in the first
/// n-k-1 coordinates plus the cube [-1,1]^{k+1} in the remaining ones.
/// Requires n >= 2 and 0 <= k <= n-2.
SimplexCubeGauge minkowski_sum_simplex_cube(int n, int k);

/// u in the nonnegative hull of `generators` (exact LP feasibility).
bool cone_contains(const std::vector<QVector>& generators, const QVector& u);

/// The face {y in p : <u_j, y> = b_j for j in active} as an H-polytope.
HPolytope face_polytope(const HPolytope& p, const std::vector<std::size_t>& active);

/// inner ⊆ outer, decided by one LP per constraint of `outer`. An empty
/// `inner` is contained in anything.
bool polytope_contains(const HPolytope& outer, const HPolytope& inner);

/// Exact conversions, ambient dimension <= 3 only (UnsupportedDimension).
HPolytope vrep_to_hrep(const VPolytope& v);
VPolytope hrep_to_vrep(const HPolytope& h);

}  // namespace gaugeball
