#include "gaugeball/circumcenter.hpp"

#include <algorithm>

#include "gaugeball/errors.hpp"
#include "gaugeball/exactlp.hpp"

namespace gaugeball {

namespace {

void validate_points(const PointSet& points, const GaugeBody& c) {
  if (points.empty()) throw InputError("point set is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != c.dim()) {
      throw InputError("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                       ", gauge has " + std::to_string(c.dim()));
    }
  }
}

}  // namespace

Rational max_gauge_distance(const PointSet& points, const GaugeBody& c, const QVector& x) {
  Rational best = 0;
  for (const auto& a : points) {
    Rational g = gauge_eval(c, a - x);
    if (g > best) best = std::move(g);
  }
  return best;
}

CircumResult circumradius(const PointSet& points, const GaugeBody& c) {
  validate_points(points, c);
  const std::size_t n = c.dim();
  CircumResult res;

  const bool all_equal =
      std::all_of(points.begin(), points.end(), [&](const QVector& p) { return p == points.front(); });
  if (all_equal) {
    res.radius = 0;
    res.chebyshev = HPolytope::singleton(points.front());
    res.dim_cc = 0;
    res.center = points.front();
    return res;
  }

  // Only the farthest point per facet direction matters:
  //   <u_j, x> + b_j * rho >= h_j := max_i <u_j, a_i>.
  const HPolytope& body = c.body();
  std::vector<Rational> h(body.size());
  res.extreme_point.assign(body.size(), 0);
  for (std::size_t j = 0; j < body.size(); ++j) {
    h[j] = dot(body[j].normal, points[0]);
    for (std::size_t i = 1; i < points.size(); ++i) {
      Rational v = dot(body[j].normal, points[i]);
      if (v > h[j]) {
        h[j] = std::move(v);
        res.extreme_point[j] = i;
      }
    }
  }

  LinearProgram lp;
  lp.objective = QVector::unit(n + 1, n);
  lp.bounds.assign(n + 1, VariableBounds{});
  lp.bounds[n].lower = Rational(0);
  for (std::size_t j = 0; j < body.size(); ++j) {
    QVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = body[j].normal[i];
    row[n] = body[j].offset;
    lp.constraints.push_back({std::move(row), h[j], Sense::GreaterEqual});
  }
  const LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) throw std::logic_error("circumradius LP did not reach an optimum");

  res.radius = sol.objective_value;
  res.facet_duals = sol.duals;

  std::vector<Halfspace> cc;
  cc.reserve(body.size());
  for (std::size_t j = 0; j < body.size(); ++j) cc.push_back({-body[j].normal, res.radius * body[j].offset - h[j]});
  res.chebyshev = HPolytope(n, std::move(cc));
  res.dim_cc = affine_hull_dim(res.chebyshev).dim;
  res.center = *feasible_point(res.chebyshev);
  return res;
}

CaratheodoryResult caratheodory_reduce(const std::vector<QVector>& vectors, const std::vector<Rational>& weights) {
  if (vectors.empty() || vectors.size() != weights.size()) {
    throw InputError("caratheodory_reduce: need matching, non-empty vector and weight lists");
  }
  const std::size_t n = vectors.front().size();
  QVector sum(n);
  Rational total = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw InputError("caratheodory_reduce: vectors of different lengths");
    if (weights[i] <= 0) throw InputError("caratheodory_reduce: weights must be positive");
    sum += vectors[i] * weights[i];
    total += weights[i];
  }
  if (!sum.is_zero()) throw InputError("caratheodory_reduce: weighted sum is not zero");

  CaratheodoryResult out;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.indices.push_back(i);
    out.weights.push_back(weights[i] / total);
  }

  for (;;) {
    // Columns (v_i, 1); a kernel vector mu moves weight while keeping both
    // sum w_i v_i = 0 and sum w_i = 1.
    const std::size_t l = out.indices.size();
    QMatrix lifted(n + 1, l);
    for (std::size_t c = 0; c < l; ++c) {
      for (std::size_t r = 0; r < n; ++r) lifted(r, c) = vectors[out.indices[c]][r];
      lifted(n, c) = 1;
    }
    const auto ker = kernel_basis(lifted);
    if (ker.empty()) return out;
    QVector mu = ker.front();
    if (std::none_of(mu.begin(), mu.end(), [](const Rational& q) { return q > 0; })) mu = -mu;

    Rational step;
    bool have_step = false;
    for (std::size_t c = 0; c < l; ++c) {
      if (mu[c] <= 0) continue;
      Rational s = out.weights[c] / mu[c];
      if (!have_step || s < step) {
        step = std::move(s);
        have_step = true;
      }
    }
    CaratheodoryResult next;
    for (std::size_t c = 0; c < l; ++c) {
      Rational w = out.weights[c] - step * mu[c];
      if (w != 0) {
        next.indices.push_back(out.indices[c]);
        next.weights.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
}

Certificate extract_certificate(const PointSet& points, const GaugeBody& c, const CircumResult& res) {
  validate_points(points, c);
  if (res.radius == 0) throw PreconditionError("extract_certificate: radius is 0 (singleton), no certificate");

  std::vector<std::size_t> facets;
  std::vector<QVector> normals;
  std::vector<Rational> weights;
  for (std::size_t j = 0; j < res.facet_duals.size(); ++j) {
    if (res.facet_duals[j] > 0) {
      facets.push_back(j);
      normals.push_back(c[j].normal);
      weights.push_back(res.facet_duals[j]);
    }
  }
  const auto reduced = caratheodory_reduce(normals, weights);

  Certificate cert;
  cert.center = res.center;
  cert.radius = res.radius;
  for (std::size_t t = 0; t < reduced.indices.size(); ++t) {
    const std::size_t j = facets[reduced.indices[t]];
    const std::size_t i = res.extreme_point[j];
    CertificateTerm term;
    term.point_index = i;
    term.touch = (points[i] - res.center) * Rational(1 / res.radius);
    term.normal = c[j].normal;
    term.weight = reduced.weights[t];
    cert.terms.push_back(std::move(term));
  }
  // Input order of the touching points, then facet order.
  std::stable_sort(cert.terms.begin(), cert.terms.end(),
                   [](const CertificateTerm& x, const CertificateTerm& y) { return x.point_index < y.point_index; });
  return cert;
}

std::optional<std::string> verify_certificate(const PointSet& points, const GaugeBody& c, const Certificate& cert) {
  const std::size_t n = c.dim();
  if (cert.radius <= 0) return "radius is not positive";
  const std::size_t l = cert.terms.size();
  if (l < 2 || l > n + 1) return "term count " + std::to_string(l) + " outside [2, n+1]";
  if (max_gauge_distance(points, c, cert.center) != cert.radius) return "center does not attain the radius";
  QVector sum(n);
  Rational total = 0;
  for (const auto& t : cert.terms) {
    if (t.weight <= 0) return "non-positive weight";
    if (t.point_index >= points.size()) return "point index out of range";
    if (t.touch * cert.radius + cert.center != points[t.point_index]) return "touch point does not match its input point";
    if (gauge_eval(c, t.touch) != 1) return "touch point is not on the boundary";
    if (t.normal.is_zero()) return "zero normal";
    if (!cone_contains(normal_cone_generators(c, t.touch), t.normal)) return "normal not in the normal cone";
    sum += t.normal * t.weight;
    total += t.weight;
  }
  if (total != 1) return "weights do not sum to 1";
  if (!sum.is_zero()) return "weighted normals do not sum to 0";
  return std::nullopt;
}

}  // namespace gaugeball
