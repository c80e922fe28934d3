#include <algorithm>
#include <map>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/errors.hpp"
#include "gaugeball/exactlp.hpp"

namespace gaugeball {

namespace {

void require_k_range(const GaugeBody& c, int k) {
  const int n = static_cast<int>(c.dim());
  if (k < 0 || k > n - 2) {
    throw InputError("k = " + std::to_string(k) + " out of range [0, " + std::to_string(n - 2) + "]");
  }
}

// Pads to `size` points by duplicating the last one and splitting its weight.
void pad_witness(WitnessK& w, std::size_t size) {
  while (w.points.size() < size) {
    w.weights.back() /= 2;
    w.points.push_back(w.points.back());
    w.normals.push_back(w.normals.back());
    w.weights.push_back(w.weights.back());
    w.faces.push_back(w.faces.back());
  }
}

bool validate_with_solver(const GaugeBody& c, WitnessK& w) {
  const auto res = circumradius(w.points, c);
  w.validated_radius = res.radius;
  w.validated_dim_cc = res.dim_cc;
  return res.radius == 1 && res.dim_cc > w.k;
}

// A face pair G ⊆ H (H a facet) together with H - x, x = relint(G).
struct Candidate {
  const Face* inner;
  const Face* outer;
  std::size_t facet;
  HPolytope shifted_outer;
};

// Constraint indices a tuple of candidates depends on: the union of the
// inner active sets and the set of outer facets.
struct TupleKey {
  std::vector<std::size_t> active;
  std::vector<std::size_t> facets;
  auto operator<=>(const TupleKey&) const = default;
};

std::vector<std::size_t> sorted_union(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

class WitnessSearch {
 public:
  WitnessSearch(const GaugeBody& c, int k) : c_(c), k_(k), n_(static_cast<int>(c.dim())) {
    faces_ = enumerate_faces(c, n_);
    std::vector<const Face*> inner;
    std::vector<const Face*> facets;
    for (const auto& f : faces_) {
      inner.push_back(&f);
      if (f.dim == n_ - 1) facets.push_back(&f);
    }
    // Larger inner faces first; ties by active set (already sorted).
    std::stable_sort(inner.begin(), inner.end(), [](const Face* a, const Face* b) { return a->dim > b->dim; });
    const auto& body = c.body();
    for (const Face* g : inner) {
      for (const Face* h : facets) {
        if (!h->contains_face(*g)) continue;
        const std::size_t facet = h->active.front();
        if (flat_dim_bound({g->active, {facet}}) <= k_) continue;
        candidates_.push_back({g, h, facet, face_polytope(body, h->active).translated(g->relint)});
      }
    }
    compatible_.assign(candidates_.size(), std::vector<signed char>(candidates_.size(), -1));
  }

  std::optional<WitnessK> run() {
    const int max_size = n_ - k_;
    for (int size = 2; size <= max_size; ++size) {
      chosen_.clear();
      if (auto w = extend(0, static_cast<std::size_t>(size))) return w;
    }
    return std::nullopt;
  }

 private:
  TupleKey key_of(const std::vector<std::size_t>& members) const {
    TupleKey key;
    for (auto i : members) {
      key.active = sorted_union(std::move(key.active), candidates_[i].inner->active);
      key.facets = sorted_union(std::move(key.facets), {candidates_[i].facet});
    }
    return key;
  }

  // dim of ∩_i (H_i - x_i). Near 0 that set agrees with the cone
  // {d : <u_j, d> <= 0 for j in act(G_i), <u_{H_i}, d> = 0}, so its dimension
  // is the cone's; the cone is clipped to the unit box to keep LPs bounded.
  // Implicit equalities come from the uniform-slack closure loop.
  int flat_dim_bound(const TupleKey& key) {
    if (auto it = flat_cache_.find(key); it != flat_cache_.end()) return it->second;
    const auto& body = c_.body();
    const std::size_t n = c_.dim();
    std::vector<QVector> facet_normals;
    for (auto f : key.facets) facet_normals.push_back(body[f].normal);
    const auto common = kernel_basis(QMatrix(facet_normals, n));
    if (common.size() <= 1) {
      // The cone lives on the line spanned by e (or is {0}): it is a ray iff
      // every <u_j, e> has the same sign.
      int dim = 0;
      if (common.size() == 1) {
        bool up = true;
        bool down = true;
        for (auto j : key.active) {
          const int sign = sgn(dot(body[j].normal, common.front()));
          up = up && sign <= 0;
          down = down && sign >= 0;
        }
        dim = up || down ? 1 : 0;
      }
      flat_cache_.emplace(key, dim);
      return dim;
    }
    std::vector<Halfspace> hs;
    for (auto j : key.active) hs.push_back({body[j].normal, Rational(0)});
    for (auto f : key.facets) hs.push_back({-body[f].normal, Rational(0)});
    for (std::size_t i = 0; i < n; ++i) {
      hs.push_back({QVector::unit(n, i), Rational(1)});
      hs.push_back({-QVector::unit(n, i), Rational(1)});
    }
    const HPolytope cone(n, std::move(hs));
    const auto r = relint_point(cone, {});
    std::vector<QVector> normals;
    for (auto j : r->closure) normals.push_back(cone[j].normal);
    const int dim = static_cast<int>(n - rank_of(normals, n));
    flat_cache_.emplace(key, dim);
    return dim;
  }

  // 0 in conv{u_j : j in active}.
  bool spans_origin(const std::vector<std::size_t>& active) {
    if (auto it = conv_cache_.find(active); it != conv_cache_.end()) return it->second;
    const bool ok = solve_lp(origin_lp(active)).status == LpStatus::Optimal;
    conv_cache_.emplace(active, ok);
    return ok;
  }

  LinearProgram origin_lp(const std::vector<std::size_t>& columns) const {
    const auto& body = c_.body();
    const std::size_t n = c_.dim();
    LinearProgram lp;
    lp.objective = QVector(columns.size());
    lp.bounds.assign(columns.size(), VariableBounds{Rational(0), std::nullopt});
    for (std::size_t r = 0; r < n; ++r) {
      QVector row(columns.size());
      for (std::size_t v = 0; v < columns.size(); ++v) row[v] = body[columns[v]].normal[r];
      lp.constraints.push_back({std::move(row), Rational(0), Sense::Equal});
    }
    QVector ones(columns.size());
    for (auto& q : ones) q = 1;
    lp.constraints.push_back({std::move(ones), Rational(1), Sense::Equal});
    return lp;
  }

  bool compatible(std::size_t a, std::size_t b) {
    signed char& memo = compatible_[a][b];
    if (memo < 0) {
      bool ok = candidates_[a].inner != candidates_[b].inner;
      if (ok) {
        ok = static_cast<int>(rank_of({c_[candidates_[a].facet].normal, c_[candidates_[b].facet].normal},
                                      c_.dim())) <= n_ - k_ - 1;
      }
      if (ok) ok = flat_dim_bound(key_of({a, b})) > k_;
      memo = compatible_[b][a] = ok ? 1 : 0;
    }
    return memo == 1;
  }

  std::optional<WitnessK> extend(std::size_t from, std::size_t size) {
    if (chosen_.size() == size) return try_tuple();
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const bool fits = std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t j) { return compatible(i, j); });
      if (!fits) continue;
      chosen_.push_back(i);
      // The flat part lies in the common direction space of all outer facets.
      std::vector<QVector> normals;
      for (auto j : chosen_) normals.push_back(c_[candidates_[j].facet].normal);
      if (static_cast<int>(rank_of(normals, c_.dim())) <= n_ - k_ - 1) {
        if (auto w = extend(i + 1, size)) return w;
      }
      chosen_.pop_back();
    }
    return std::nullopt;
  }

  std::optional<WitnessK> try_tuple() {
    const TupleKey key = key_of(chosen_);
    if (!spans_origin(key.active)) return std::nullopt;
    if (chosen_.size() > 2 && flat_dim_bound(key) <= k_) return std::nullopt;

    // 0 in conv of normals drawn from the cones at relint(G_i):
    //   sum mu_ij u_j = 0, sum mu = 1, mu >= 0.
    const auto& body = c_.body();
    const std::size_t n = c_.dim();
    std::vector<std::size_t> slot;
    std::vector<std::size_t> columns;
    for (std::size_t s = 0; s < chosen_.size(); ++s) {
      for (auto j : candidates_[chosen_[s]].inner->active) {
        slot.push_back(s);
        columns.push_back(j);
      }
    }
    const LpSolution sol = solve_lp(origin_lp(columns));
    if (sol.status != LpStatus::Optimal) return std::nullopt;

    WitnessK w;
    w.k = k_;
    std::vector<std::size_t> support;
    for (std::size_t s = 0; s < chosen_.size(); ++s) {
      QVector u(n);
      Rational mass = 0;
      for (std::size_t v = 0; v < columns.size(); ++v) {
        if (slot[v] != s || sol.x[v] == 0) continue;
        u += body[columns[v]].normal * sol.x[v];
        mass += sol.x[v];
      }
      if (mass == 0) continue;
      const Candidate& cand = candidates_[chosen_[s]];
      support.push_back(chosen_[s]);
      w.faces.push_back({*cand.inner, *cand.outer});
      w.points.push_back(cand.inner->relint);
      w.normals.push_back(u * Rational(1 / mass));
      w.weights.push_back(mass);
    }

    HPolytope flat = candidates_[support.front()].shifted_outer;
    for (std::size_t s = 1; s < support.size(); ++s) flat = flat.intersect(candidates_[support[s]].shifted_outer);
    const int flat_dim = affine_hull_dim(flat).dim;
    if (flat_dim <= k_) return std::nullopt;
    w.flat_body = std::move(flat);
    w.flat_dim = flat_dim;

    pad_witness(w, static_cast<std::size_t>(n_ - k_));
    if (!validate_with_solver(c_, w)) return std::nullopt;
    return w;
  }

  const GaugeBody& c_;
  int k_;
  int n_;
  std::vector<Face> faces_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<signed char>> compatible_;
  std::map<TupleKey, int> flat_cache_;
  std::map<std::vector<std::size_t>, bool> conv_cache_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::optional<WitnessK> witness_search(const GaugeBody& c, int k) {
  require_k_range(c, k);
  return WitnessSearch(c, k).run();
}

std::optional<WitnessK> symmetric_witness(const GaugeBody& b, int k) {
  if (!b.symmetric()) throw PreconditionError("symmetric_witness: gauge body is not centrally symmetric");
  require_k_range(b, k);
  const auto& body = b.body();
  const std::size_t n = b.dim();

  const auto faces = enumerate_faces(b, static_cast<int>(n));
  const auto it = std::find_if(faces.begin(), faces.end(), [&](const Face& f) { return f.dim > k; });
  if (it == faces.end()) return std::nullopt;
  const Face& support_set = *it;
  const QVector& x = support_set.relint;

  // A = (S - x_S) ∩ (-S + x_S)
  const HPolytope s_poly = face_polytope(body, support_set.active);
  HPolytope flat = s_poly.translated(x).intersect(s_poly.reflected().translated(-x));

  std::vector<std::size_t> mirrored;
  for (auto j : support_set.active) {
    const Halfspace m{-body[j].normal, body[j].offset};
    mirrored.push_back(static_cast<std::size_t>(
        std::find(body.constraints().begin(), body.constraints().end(), m) - body.constraints().begin()));
  }
  std::sort(mirrored.begin(), mirrored.end());
  const auto opposite = face_of(body, mirrored);

  QVector u(n);
  for (auto j : support_set.active) u += body[j].normal;

  WitnessK w;
  w.k = k;
  w.faces = {{support_set, support_set}, {*opposite, *opposite}};
  w.points = {x, -x};
  w.normals = {u, -u};
  w.weights = {Rational(1, 2), Rational(1, 2)};
  w.flat_dim = affine_hull_dim(flat).dim;
  w.flat_body = std::move(flat);
  pad_witness(w, n - static_cast<std::size_t>(k));
  if (!validate_with_solver(b, w)) {
    throw std::logic_error("symmetric_witness: constructed witness failed solver validation");
  }
  return w;
}

std::optional<std::string> verify_witness(const GaugeBody& c, const WitnessK& w) {
  const int n = static_cast<int>(c.dim());
  const auto size = static_cast<std::size_t>(n - w.k);
  if (w.points.size() != size || w.normals.size() != size || w.weights.size() != size || w.faces.size() != size) {
    return "witness does not have n-k entries";
  }
  QVector sum(c.dim());
  Rational total = 0;
  for (std::size_t i = 0; i < size; ++i) {
    const QVector& x = w.points[i];
    if (gauge_eval(c, x) != 1) return "point " + std::to_string(i) + " is not on the boundary";
    if (w.normals[i].is_zero()) return "zero normal";
    if (!cone_contains(normal_cone_generators(c, x), w.normals[i])) return "normal not in the normal cone";
    if (w.weights[i] <= 0) return "non-positive weight";
    const auto& outer = w.faces[i].outer;
    if (outer.active.empty()) return "outer face is not proper";
    // x + A ⊆ H ⊆ bd(C)
    const HPolytope shifted = face_polytope(c.body(), outer.active).translated(x);
    if (!polytope_contains(shifted, w.flat_body)) return "x_i + A is not inside the outer face";
    sum += w.normals[i] * w.weights[i];
    total += w.weights[i];
  }
  if (total != 1) return "weights do not sum to 1";
  if (!sum.is_zero()) return "0 is not the weighted combination of the normals";
  const int flat_dim = affine_hull_dim(w.flat_body).dim;
  if (flat_dim != w.flat_dim || flat_dim <= w.k) return "flat body has dimension <= k";

  const auto res = circumradius(w.points, c);
  if (res.radius != 1) return "circumradius of the witness points is not 1";
  if (res.dim_cc != w.validated_dim_cc || res.dim_cc <= w.k) return "Chebyshev set dimension is not > k";
  if (!polytope_contains(res.chebyshev, w.flat_body.reflected())) return "-A is not contained in the Chebyshev set";
  return std::nullopt;
}

bool opposing_segments_2d(const GaugeBody& c) {
  if (c.dim() != 2) throw UnsupportedDimension("opposing_segments_2d: gauge must be planar");
  std::vector<QVector> edges;
  for (const auto& f : enumerate_faces(c, 1)) edges.push_back(c[f.active.front()].normal);
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (edges[a] == -edges[b]) return true;
    }
  }
  return false;
}

}  // namespace gaugeball
