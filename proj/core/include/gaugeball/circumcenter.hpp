#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gaugeball/hpolytope.hpp"
#include "gaugeball/polytope.hpp"
#include "gaugeball/qlinalg.hpp"

namespace gaugeball {

/// Finite, non-empty point set; repeated points are allowed.
using PointSet = std::vector<QVector>;

struct CircumResult {
  Rational radius;
  /// The Chebyshev set cc(A, C) over the center variable x.
  HPolytope chebyshev;
  int dim_cc = 0;
  QVector center;

  /// Optimal multiplier of the containment constraint of each gauge facet
  /// (empty when radius == 0).
  std::vector<Rational> facet_duals;
  /// Index of the first point of A attaining max_i <u_j, a_i> per facet j.
  std::vector<std::size_t> extreme_point;
};

/// Circumradius, Chebyshev set and its dimension for A with respect to C.
/// Throws InputError on an empty or dimension-mismatched point set.
CircumResult circumradius(const PointSet& points, const GaugeBody& c);

/// max_i gauge(a_i - x).
Rational max_gauge_distance(const PointSet& points, const GaugeBody& c, const QVector& x);

struct CertificateTerm {
  std::size_t point_index = 0;
  /// (a_i - center) / radius, a boundary point of C.
  QVector touch;
  QVector normal;
  Rational weight;
};

/// Touching points and outer normals with 0 in the convex hull of the
/// normals: sum weight * normal = 0, weights > 0 summing to 1.
struct Certificate {
  std::vector<CertificateTerm> terms;
  QVector center;
  Rational radius;
};

/// Reads the optimality certificate from the circumradius LP duals, reduced
/// to at most n+1 terms. Throws PreconditionError when res.radius == 0.
Certificate extract_certificate(const PointSet& points, const GaugeBody& c, const CircumResult& res);

/// Exact check of every certificate invariant; returns a reason on failure.
std::optional<std::string> verify_certificate(const PointSet& points, const GaugeBody& c, const Certificate& cert);

struct CaratheodoryResult {
  std::vector<std::size_t> indices;  // into the input list, increasing
  std::vector<Rational> weights;     // positive, summing to 1
};

/// Shrinks a positive combination sum w_i v_i = 0 to an affinely independent
/// support (hence at most n+1 terms). Throws InputError if the combination is
/// not zero or some weight is not positive.
CaratheodoryResult caratheodory_reduce(const std::vector<QVector>& vectors, const std::vector<Rational>& weights);

/// Pair G ⊆ H of faces of C: the witness point is relint(G), the flat part
/// lives in H.
struct FacePair {
  Face inner;
  Face outer;
};

/// Witness of "n-k boundary points share a flat body of dimension > k and
/// have outer normals with 0 in their convex hull".
struct WitnessK {
  int k = 0;
  std::vector<FacePair> faces;
  std::vector<QVector> points;
  std::vector<QVector> normals;
  std::vector<Rational> weights;
  HPolytope flat_body;
  int flat_dim = 0;
  Rational validated_radius;
  int validated_dim_cc = 0;
};

/// Searches tuples of face pairs for a dimension-k witness; every returned
/// witness has been re-validated with circumradius(). Requires 0 <= k <= n-2.
std::optional<WitnessK> witness_search(const GaugeBody& c, int k);

/// Two-point witness {x_S, -x_S} built from a support set S with dim(S) > k of
/// a centrally symmetric body. Requires b.symmetric() and 0 <= k <= n-2.
std::optional<WitnessK> symmetric_witness(const GaugeBody& b, int k);

/// Independent exact check of all WitnessK invariants.
std::optional<std::string> verify_witness(const GaugeBody& c, const WitnessK& w);

/// True iff two edges of the polygon C have anti-parallel outer normals.
/// Requires dim 2.
bool opposing_segments_2d(const GaugeBody& c);

// --- consistency harnesses -------------------------------------------------

struct Counterexample {
  std::string kind;
  std::string message;
  int k = 0;
  PointSet points;
};

struct CheckReport {
  std::string check;
  int k = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  bool witness_found = false;
  bool witness_valid = false;
  int samples_above_k = 0;
  std::optional<WitnessK> witness;
  std::vector<Counterexample> violations;

  bool ok() const { return violations.empty(); }
};

struct HarnessOptions {
  int trials = 100;
  std::uint64_t seed = 1;
  /// 0 = hardware concurrency.
  unsigned threads = 1;
};

/// Both directions of the dimension-k characterization on one gauge: a found
/// witness must validate, and any random sample with dim cc > k requires a
/// witness to exist.
CheckReport check_witness_equivalence(const GaugeBody& c, int k, const HarnessOptions& opt);

/// Symmetric bodies: support-set witness, general witness search and random
/// two-point samples must agree on "dim cc > k is possible".
CheckReport check_symmetric_dimension(const GaugeBody& b, int k, const HarnessOptions& opt);

/// Planar gauges: opposing parallel edges vs witness search vs samples.
CheckReport check_planar_uniqueness(const GaugeBody& c, const HarnessOptions& opt);

}  // namespace gaugeball
