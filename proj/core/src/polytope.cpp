#include "gaugeball/polytope.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "gaugeball/errors.hpp"
#include "gaugeball/exactlp.hpp"

namespace gaugeball {

namespace {

constexpr std::size_t kMaxConversionDim = 3;

void require_small_dim(std::size_t n, const char* op) {
  if (n > kMaxConversionDim) {
    throw UnsupportedDimension(std::string(op) + ": ambient dimension " + std::to_string(n) + " > 3 not supported");
  }
}

// Calls fn(subset) for every k-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<QVector> normals_of(const HPolytope& p, const std::vector<std::size_t>& idx) {
  std::vector<QVector> out;
  out.reserve(idx.size());
  for (auto j : idx) out.push_back(p[j].normal);
  return out;
}

}  // namespace

GaugeBody::GaugeBody(HPolytope body) : body_(std::move(body)) {
  if (body_.size() == 0) throw InputError("gauge body has no constraints");
  for (std::size_t j = 0; j < body_.size(); ++j) {
    if (body_[j].offset <= 0) {
      throw InputError("gauge constraint " + std::to_string(j) + " has offset <= 0 (origin not interior)");
    }
  }
  const std::size_t n = body_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      if (!maximize_linear(body_, QVector::unit(n, i) * Rational(s))) {
        throw InputError("gauge body is unbounded along coordinate " + std::to_string(i));
      }
    }
  }
  symmetric_ = std::all_of(body_.constraints().begin(), body_.constraints().end(), [&](const Halfspace& h) {
    const Halfspace mirror{-h.normal, h.offset};
    return std::find(body_.constraints().begin(), body_.constraints().end(), mirror) != body_.constraints().end();
  });
}

bool Face::contains_face(const Face& smaller) const {
  return std::includes(smaller.active.begin(), smaller.active.end(), active.begin(), active.end());
}

VPolytope VPolytope::from_points(std::vector<QVector> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  VPolytope out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    // Is points[p] a convex combination of the others?
    const std::size_t n = points[p].size();
    const std::size_t m = points.size() - 1;
    if (m == 0) {
      out.vertices.push_back(points[p]);
      continue;
    }
    LinearProgram lp;
    lp.objective = QVector(m);
    lp.bounds.assign(m, VariableBounds{Rational(0), std::nullopt});
    for (std::size_t c = 0; c < n; ++c) {
      QVector row(m);
      std::size_t col = 0;
      for (std::size_t q = 0; q < points.size(); ++q) {
        if (q != p) row[col++] = points[q][c];
      }
      lp.constraints.push_back({std::move(row), points[p][c], Sense::Equal});
    }
    QVector ones(m);
    for (auto& v : ones) v = 1;
    lp.constraints.push_back({std::move(ones), Rational(1), Sense::Equal});
    if (solve_lp(lp).status != LpStatus::Optimal) out.vertices.push_back(points[p]);
  }
  return out;
}

Rational gauge_eval(const GaugeBody& c, const QVector& z) {
  if (z.size() != c.dim()) throw InputError("gauge_eval: point has wrong dimension");
  Rational best = 0;
  for (const auto& h : c.body().constraints()) {
    Rational v = dot(h.normal, z) / h.offset;
    if (v > best) best = std::move(v);
  }
  return best;
}

Rational support_function(const HPolytope& p, const QVector& u) {
  const auto v = maximize_linear(p, u);
  if (!v) throw PreconditionError("support_function: polytope unbounded in the given direction");
  return *v;
}

std::vector<QVector> normal_cone_generators(const GaugeBody& c, const QVector& x) {
  if (gauge_eval(c, x) != 1) throw PreconditionError("normal_cone_generators: point is not on the boundary");
  return normals_of(c.body(), c.body().tight_at(x));
}

std::optional<RelintResult> relint_point(const HPolytope& p, const std::vector<std::size_t>& active) {
  const std::size_t n = p.dim();
  std::vector<bool> in_eq(p.size(), false);
  for (auto j : active) in_eq.at(j) = true;

  for (;;) {
    // Variables (y_1..y_n, t); minimize -t.
    LinearProgram lp;
    lp.objective = QVector(n + 1);
    lp.objective[n] = -1;
    std::vector<std::size_t> row_of_constraint(p.size());
    bool any_loose = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      QVector row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = p[j].normal[i];
      if (in_eq[j]) {
        lp.constraints.push_back({std::move(row), p[j].offset, Sense::Equal});
      } else {
        row[n] = 1;
        any_loose = true;
        lp.constraints.push_back({std::move(row), p[j].offset, Sense::LessEqual});
      }
      row_of_constraint[j] = lp.constraints.size() - 1;
    }
    if (!any_loose) lp.objective[n] = 0;  // t is unconstrained; only feasibility matters

    const LpSolution sol = solve_lp(lp);
    if (sol.status == LpStatus::Infeasible) return std::nullopt;
    if (sol.status == LpStatus::Unbounded) throw PreconditionError("relint_point: face is unbounded");

    const Rational& t = sol.x[n];
    if (!any_loose || t > 0) {
      RelintResult r;
      r.point = QVector(n);
      for (std::size_t i = 0; i < n; ++i) r.point[i] = sol.x[i];
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (in_eq[j]) r.closure.push_back(j);
      }
      return r;
    }
    if (t < 0) return std::nullopt;
    // t == 0: loose rows with a nonzero multiplier vanish on the whole set.
    bool grew = false;
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!in_eq[j] && sol.duals[row_of_constraint[j]] != 0) {
        in_eq[j] = true;
        grew = true;
      }
    }
    if (!grew) throw std::logic_error("relint_point: zero slack without a certifying multiplier");
  }
}

std::optional<Face> face_of(const HPolytope& p, const std::vector<std::size_t>& active) {
  auto r = relint_point(p, active);
  if (!r) return std::nullopt;
  Face f;
  f.active = std::move(r->closure);
  f.relint = std::move(r->point);
  const auto normals = normals_of(p, f.active);
  f.direction_basis = kernel_basis(QMatrix(normals, p.dim()));
  f.dim = static_cast<int>(f.direction_basis.size());
  return f;
}

QVector relint_point(const Face& f, const GaugeBody& c) {
  auto r = relint_point(c.body(), f.active);
  if (!r) throw PreconditionError("relint_point: face is empty");
  return r->point;
}

std::vector<Face> enumerate_faces(const GaugeBody& c, int max_codim) {
  const HPolytope& body = c.body();
  const int n = static_cast<int>(c.dim());
  std::map<std::vector<std::size_t>, Face> seen;
  std::deque<std::vector<std::size_t>> pending;

  auto consider = [&](const std::vector<std::size_t>& active) {
    auto f = face_of(body, active);
    if (!f || f->dim >= n || n - f->dim > max_codim) return;
    if (seen.count(f->active)) return;
    pending.push_back(f->active);
    seen.emplace(f->active, std::move(*f));
  };

  for (std::size_t j = 0; j < body.size(); ++j) consider({j});
  while (!pending.empty()) {
    const auto key = pending.front();
    pending.pop_front();
    const Face& f = seen.at(key);
    if (n - f.dim >= max_codim) continue;
    for (std::size_t j = 0; j < body.size(); ++j) {
      if (std::binary_search(key.begin(), key.end(), j)) continue;
      auto next = key;
      next.insert(std::upper_bound(next.begin(), next.end(), j), j);
      consider(next);
    }
  }

  std::vector<Face> out;
  out.reserve(seen.size());
  for (auto& [key, face] : seen) out.push_back(std::move(face));
  return out;
}

SimplexCubeGauge minkowski_sum_simplex_cube(int n, int k) {
  if (n < 2 || k < 0 || k > n - 2) {
    throw InputError("simplex+cube gauge needs n >= 2 and 0 <= k <= n-2 (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  const auto dim = static_cast<std::size_t>(n);
  const auto m = static_cast<std::size_t>(n - k - 1);  // simplex dimension

  // Vertices e_1..e_m and -(e_1 + ... + e_m) of the simplex factor.
  std::vector<QVector> local;
  QVector last(m);
  for (std::size_t i = 0; i < m; ++i) {
    local.push_back(QVector::unit(m, i));
    last[i] = -1;
  }
  local.push_back(last);

  std::vector<Halfspace> hs;
  for (std::size_t omit = 0; omit <= m; ++omit) {
    // Facet through every vertex but `omit`: <w, v> = 1.
    std::vector<QVector> rows;
    for (std::size_t v = 0; v <= m; ++v) {
      if (v != omit) rows.push_back(local[v]);
    }
    QVector ones(m);
    for (auto& q : ones) q = 1;
    const auto w = solve(QMatrix(rows, m), ones);
    QVector normal(dim);
    for (std::size_t i = 0; i < m; ++i) normal[i] = (*w)[i];
    hs.push_back({std::move(normal), Rational(1)});
  }
  for (std::size_t i = m; i < dim; ++i) {
    hs.push_back({QVector::unit(dim, i), Rational(1)});
    hs.push_back({-QVector::unit(dim, i), Rational(1)});
  }

  SimplexCubeGauge out{GaugeBody(HPolytope(dim, std::move(hs))), {}};
  for (const auto& v : local) {
    QVector x(dim);
    for (std::size_t i = 0; i < m; ++i) x[i] = v[i];
    out.simplex_vertices.push_back(std::move(x));
  }
  return out;
}

bool cone_contains(const std::vector<QVector>& generators, const QVector& u) {
  if (u.is_zero()) return true;
  if (generators.empty()) return false;
  LinearProgram lp;
  lp.objective = QVector(generators.size());
  lp.bounds.assign(generators.size(), VariableBounds{Rational(0), std::nullopt});
  for (std::size_t c = 0; c < u.size(); ++c) {
    QVector row(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) row[g] = generators[g][c];
    lp.constraints.push_back({std::move(row), u[c], Sense::Equal});
  }
  return solve_lp(lp).status == LpStatus::Optimal;
}

HPolytope face_polytope(const HPolytope& p, const std::vector<std::size_t>& active) {
  std::vector<Halfspace> hs = p.constraints();
  for (auto j : active) hs.push_back({-p[j].normal, -p[j].offset});
  return HPolytope(p.dim(), std::move(hs));
}

bool polytope_contains(const HPolytope& outer, const HPolytope& inner) {
  if (!feasible_point(inner)) return true;
  for (const auto& h : outer.constraints()) {
    const auto top = maximize_linear(inner, h.normal);
    if (!top || *top > h.offset) return false;
  }
  return true;
}

HPolytope vrep_to_hrep(const VPolytope& v) {
  if (v.vertices.empty()) throw InputError("vrep_to_hrep: no vertices");
  const std::size_t n = v.vertices.front().size();
  require_small_dim(n, "vrep_to_hrep");
  const auto& pts = v.vertices;
  const QVector& p0 = pts.front();

  std::vector<QVector> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - p0);
  const auto equalities = kernel_basis(QMatrix(diffs, n));
  const std::size_t d = n - equalities.size();

  std::vector<Halfspace> hs;
  for (const auto& w : equalities) {
    hs.push_back({w, dot(w, p0)});
    hs.push_back({-w, -dot(w, p0)});
  }
  if (d == 0) return HPolytope(n, std::move(hs));

  // Facets inside aff(P): hyperplanes of aff(P) through d affinely
  // independent points with every point on one side.
  for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& sub) {
    std::vector<QVector> rows = equalities;
    for (std::size_t i = 1; i < sub.size(); ++i) rows.push_back(pts[sub[i]] - pts[sub[0]]);
    if (rank_of(rows, n) != rows.size()) return;
    const auto ker = kernel_basis(QMatrix(rows, n));
    if (ker.size() != 1) return;
    QVector w = ker.front();
    const Rational c = dot(w, pts[sub[0]]);
    bool below = false;
    bool above = false;
    for (const auto& p : pts) {
      const Rational s = dot(w, p) - c;
      below = below || s < 0;
      above = above || s > 0;
    }
    if (below && above) return;
    if (above) {
      hs.push_back({-w, -c});
    } else {
      hs.push_back({w, c});
    }
  });
  return HPolytope(n, std::move(hs));
}

VPolytope hrep_to_vrep(const HPolytope& h) {
  const std::size_t n = h.dim();
  require_small_dim(n, "hrep_to_vrep");
  if (!feasible_point(h)) return {};
  for (std::size_t i = 0; i < n; ++i) {
    for (int s : {1, -1}) {
      if (!maximize_linear(h, QVector::unit(n, i) * Rational(s))) {
        throw PreconditionError("hrep_to_vrep: polytope is unbounded");
      }
    }
  }
  std::vector<QVector> verts;
  for_each_subset(h.size(), n, [&](const std::vector<std::size_t>& sub) {
    std::vector<QVector> rows;
    QVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(h[sub[i]].normal);
      rhs[i] = h[sub[i]].offset;
    }
    QMatrix m(rows, n);
    if (rank(m) != n) return;
    auto x = solve(m, rhs);
    if (x && h.contains(*x)) verts.push_back(std::move(*x));
  });
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return VPolytope{std::move(verts)};
}

}  // namespace gaugeball
