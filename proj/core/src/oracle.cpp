#include "gaugeball/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gaugeball/errors.hpp"
#include "gaugeball/random.hpp"

namespace gaugeball {

namespace {

// f(x) = max(0, max_j level_j - <slope_j, x>) with slope_j = u_j / b_j and
// level_j = max_i <u_j, a_i> / b_j.
struct Objective {
  std::vector<QVector> slope;
  std::vector<Rational> level;

  Objective(const PointSet& points, const GaugeBody& c) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      Rational h = dot(c[j].normal, points.front());
      for (const auto& a : points) h = std::max(h, dot(c[j].normal, a));
      slope.push_back(c[j].normal * Rational(1 / c[j].offset));
      level.push_back(h / c[j].offset);
    }
  }

  Rational at(const QVector& x) const {
    Rational best = 0;
    for (std::size_t j = 0; j < slope.size(); ++j) best = std::max(best, Rational(level[j] - dot(slope[j], x)));
    return best;
  }
};

void for_each_subset(std::size_t m, std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (size > m) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t r = i; r < size; ++r) idx[r] = idx[r - 1] + 1;
  }
}

// Basic solutions of n constraints, kept when feasible.
std::vector<QVector> body_vertices(const HPolytope& h) {
  const std::size_t n = h.dim();
  std::vector<QVector> verts;
  for_each_subset(h.size(), n, [&](const std::vector<std::size_t>& sub) {
    std::vector<QVector> rows;
    QVector rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(h[sub[i]].normal);
      rhs[i] = h[sub[i]].offset;
    }
    const QMatrix m(rows, n);
    if (rank(m) != n) return;
    auto x = solve(m, rhs);
    if (x && h.contains(*x)) verts.push_back(std::move(*x));
  });
  return verts;
}

// a_i - x in R*C for all i  =>  max_i a_ic - R*h(C, e_c) <= x_c <= min_i a_ic + R*h(C, -e_c).
std::vector<std::pair<Rational, Rational>> center_box(const PointSet& points, const GaugeBody& c,
                                                      const Rational& radius) {
  const auto verts = body_vertices(c.body());
  std::vector<std::pair<Rational, Rational>> box;
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Rational top = verts.front()[k];
    Rational bottom = verts.front()[k];
    for (const auto& v : verts) {
      top = std::max(top, v[k]);
      bottom = std::min(bottom, v[k]);
    }
    Rational amax = points.front()[k];
    Rational amin = points.front()[k];
    for (const auto& a : points) {
      amax = std::max(amax, a[k]);
      amin = std::min(amin, a[k]);
    }
    box.emplace_back(amax - radius * top, amin - radius * bottom);
  }
  return box;
}

// Dual of min rho s.t. <u_j, x> + b_j rho >= h_j, rescaled to weights on the
// facets: max sum w_j level_j s.t. sum w_j slope_j = 0, sum w_j = 1, w >= 0.
// Every vertex of that polytope is the unique solution on its support.
Rational dual_lower_bound(const Objective& f, std::size_t n) {
  Rational best = 0;
  const std::size_t m = f.slope.size();
  QVector rhs(n + 1);
  rhs[n] = 1;
  for (std::size_t size = 2; size <= n + 1; ++size) {
    for_each_subset(m, size, [&](const std::vector<std::size_t>& sub) {
      QMatrix lifted(n + 1, size);
      for (std::size_t col = 0; col < size; ++col) {
        for (std::size_t r = 0; r < n; ++r) lifted(r, col) = f.slope[sub[col]][r];
        lifted(n, col) = 1;
      }
      if (rank(lifted) != size) return;
      const auto w = solve(lifted, rhs);
      if (!w || std::any_of(w->begin(), w->end(), [](const Rational& q) { return q < 0; })) return;
      Rational value = 0;
      for (std::size_t col = 0; col < size; ++col) value += (*w)[col] * f.level[sub[col]];
      best = std::max(best, value);
    });
  }
  return best;
}

struct Cell {
  std::vector<std::int64_t> index;
  Rational bound;
};

constexpr std::size_t kCellCap = 256;
constexpr int kMaxLevel = 60;

}  // namespace

Rational gauge_lipschitz(const GaugeBody& c) {
  Rational best = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    Rational s = 0;
    for (const auto& x : c[j].normal) s += abs(x);
    best = std::max(best, Rational(s / c[j].offset));
  }
  return best;
}

GridBracket grid_radius(const PointSet& points, const GaugeBody& c, const Rational& resolution) {
  if (resolution <= 0) throw InputError("grid_radius: resolution must be positive");
  if (points.empty()) throw InputError("grid_radius: point set is empty");
  const std::size_t n = c.dim();
  GridBracket out;
  out.resolution = resolution;

  const bool all_equal =
      std::all_of(points.begin(), points.end(), [&](const QVector& p) { return p == points.front(); });
  if (all_equal) {
    for (std::size_t k = 0; k < n; ++k) out.box.emplace_back(points.front()[k], points.front()[k]);
    return out;
  }

  const Objective f(points, c);
  out.upper = f.at(points.front());
  out.box = center_box(points, c, out.upper);
  out.lower = dual_lower_bound(f, n);
  const Rational tolerance = gauge_lipschitz(c) * resolution * static_cast<long>(n);

  std::vector<Cell> cells{{std::vector<std::int64_t>(n, 0), Rational(0)}};
  for (int level = 0; level <= kMaxLevel && !cells.empty(); ++level) {
    const Rational parts = Rational(Integer(1) << level);
    std::vector<Rational> width(n);
    Rational widest = 0;
    for (std::size_t k = 0; k < n; ++k) {
      width[k] = (out.box[k].second - out.box[k].first) / parts;
      widest = std::max(widest, width[k]);
    }
    for (auto& cell : cells) {
      QVector g(n);
      for (std::size_t k = 0; k < n; ++k) {
        g[k] = out.box[k].first + (Rational(cell.index[k]) + Rational(1, 2)) * width[k];
      }
      out.upper = std::min(out.upper, f.at(g));
      // f_j drops by at most sum_k |slope_jk| * width_k / 2 inside the cell.
      Rational bound = 0;
      for (std::size_t j = 0; j < f.slope.size(); ++j) {
        Rational v = f.level[j] - dot(f.slope[j], g);
        for (std::size_t k = 0; k < n; ++k) v -= abs(f.slope[j][k]) * width[k] / 2;
        bound = std::max(bound, v);
      }
      cell.bound = std::move(bound);
    }
    out.levels = level + 1;
    if (out.upper - out.lower <= tolerance || widest <= resolution) break;

    std::erase_if(cells, [&](const Cell& cell) { return cell.bound > out.upper; });
    std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.bound < b.bound; });
    if (cells.size() > kCellCap) cells.resize(kCellCap);

    std::vector<std::size_t> split;
    for (std::size_t k = 0; k < n; ++k) {
      if (out.box[k].second > out.box[k].first) split.push_back(k);
    }
    std::vector<Cell> next;
    for (const auto& cell : cells) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << split.size()); ++mask) {
        Cell child{cell.index, Rational(0)};
        for (std::size_t s = 0; s < split.size(); ++s) {
          child.index[split[s]] = 2 * cell.index[split[s]] + static_cast<std::int64_t>((mask >> s) & 1);
        }
        next.push_back(std::move(child));
      }
    }
    cells = std::move(next);
  }
  return out;
}

std::vector<QVector> sample_chebyshev(const PointSet& points, const GaugeBody& c, const Rational& radius,
                                      int samples, std::uint64_t seed) {
  if (points.empty()) throw InputError("sample_chebyshev: point set is empty");
  const std::size_t n = c.dim();
  const Objective f(points, c);
  const auto box = center_box(points, c, radius);

  std::vector<QVector> candidates;
  // Grid with `side` points per axis, (side)^n <= samples / 2.
  std::size_t side = 2;
  while (true) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= side + 1;
    if (total > static_cast<std::size_t>(std::max(samples, 0)) / 2) break;
    ++side;
  }
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    QVector x(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = box[k].first + (box[k].second - box[k].first) * Rational(static_cast<long>(idx[k]), static_cast<long>(side - 1));
    }
    candidates.push_back(std::move(x));
    std::size_t k = 0;
    while (k < n && ++idx[k] == side) idx[k++] = 0;
    if (k == n) break;
  }
  Rng rng(seed);
  while (candidates.size() < static_cast<std::size_t>(std::max(samples, 0))) {
    QVector x(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = box[k].first + (box[k].second - box[k].first) * Rational(rng.between(0, 64), 64);
    }
    candidates.push_back(std::move(x));
  }

  std::vector<QVector> kept;
  std::set<QVector> seen;
  for (auto& x : candidates) {
    if (f.at(x) <= radius && seen.insert(x).second) kept.push_back(std::move(x));
  }
  return kept;
}

std::map<int, std::size_t> dd_face_count(const VPolytope& v) {
  std::map<int, std::size_t> counts;
  if (v.vertices.empty()) return counts;
  const std::size_t ambient = v.vertices.front().size();
  if (ambient > 3) throw UnsupportedDimension("dd_face_count: ambient dimension must be <= 3");

  const int d = affine_dim(v.vertices);
  if (d == 0) return counts;

  // Coordinates on which the affine hull projects injectively.
  std::vector<QVector> diffs;
  for (const auto& p : v.vertices) diffs.push_back(p - v.vertices.front());
  std::vector<std::size_t> coords;
  for (std::size_t k = 0; k < ambient && static_cast<int>(coords.size()) < d; ++k) {
    std::vector<QVector> cols;
    for (auto c : coords) {
      QVector col(diffs.size());
      for (std::size_t i = 0; i < diffs.size(); ++i) col[i] = diffs[i][c];
      cols.push_back(std::move(col));
    }
    QVector col(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) col[i] = diffs[i][k];
    cols.push_back(std::move(col));
    if (static_cast<int>(rank_of(cols, diffs.size())) == static_cast<int>(cols.size())) coords.push_back(k);
  }
  const auto dim = static_cast<std::size_t>(d);
  std::vector<QVector> pts;
  for (const auto& p : v.vertices) {
    QVector q(dim);
    for (std::size_t k = 0; k < dim; ++k) q[k] = p[coords[k]];
    pts.push_back(std::move(q));
  }

  std::set<std::vector<std::size_t>> faces;
  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& sub) {
    std::vector<QVector> rows;
    for (std::size_t i = 1; i < sub.size(); ++i) rows.push_back(pts[sub[i]] - pts[sub[0]]);
    const auto ker = kernel_basis(QMatrix(rows, dim));
    if (ker.size() != 1) return;
    const QVector& w = ker.front();
    const Rational offset = dot(w, pts[sub[0]]);
    bool below = false;
    bool above = false;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational s = dot(w, pts[i]) - offset;
      if (s < 0) below = true;
      if (s > 0) above = true;
      if (s == 0) on.push_back(i);
    }
    if (!(below && above)) faces.insert(std::move(on));
  });

  std::vector<std::vector<std::size_t>> frontier(faces.begin(), faces.end());
  const std::vector<std::vector<std::size_t>> facets = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> fresh;
    for (const auto& a : frontier) {
      for (const auto& b : facets) {
        std::vector<std::size_t> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty() && faces.insert(both).second) fresh.push_back(std::move(both));
      }
    }
    frontier = std::move(fresh);
  }

  for (const auto& face : faces) {
    std::vector<QVector> members;
    for (auto i : face) members.push_back(pts[i]);
    ++counts[affine_dim(members)];
  }
  return counts;
}

}  // namespace gaugeball
