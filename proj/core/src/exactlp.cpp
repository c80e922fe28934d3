#include "gaugeball/exactlp.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gaugeball/errors.hpp"

namespace gaugeball {

void LinearProgram::validate() const {
  const std::size_t n = num_vars();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].row.size() != n) {
      throw InputError("linear program: constraint " + std::to_string(i) + " has " +
                       std::to_string(constraints[i].row.size()) + " coefficients, expected " + std::to_string(n));
    }
  }
  if (!bounds.empty() && bounds.size() != n) throw InputError("linear program: bounds vector has wrong length");
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Where an internal `<=` row came from.
struct RowOrigin {
  enum Kind { Constraint, Upper } kind;
  std::size_t index;
  int sign;  // internal row = sign * original row
};

// Condensed simplex dictionary over internal variables
//   ids [0, nstruct)            structural (shifted or split originals)
//   id  nstruct                 phase-1 artificial
//   ids nstruct + 1 + i         slack of internal row i
// Row i reads  basic_i = rhs_i - sum_j coef[i][j] * nonbasic_j,
// and the objective  z = z0 + sum_j cost[j] * nonbasic_j.
class Dictionary {
 public:
  Dictionary(std::vector<std::vector<Rational>> coef, std::vector<Rational> rhs, std::size_t nstruct)
      : coef_(std::move(coef)), rhs_(std::move(rhs)), nstruct_(nstruct) {
    const std::size_t m = rhs_.size();
    basic_.resize(m);
    for (std::size_t i = 0; i < m; ++i) basic_[i] = slack_id(i);
    nonbasic_.resize(nstruct);
    for (std::size_t j = 0; j < nstruct; ++j) nonbasic_[j] = j;
    cost_.assign(nstruct, Rational(0));
  }

  std::size_t rows() const { return rhs_.size(); }
  std::size_t cols() const { return nonbasic_.size(); }
  std::size_t artificial_id() const { return nstruct_; }
  std::size_t slack_id(std::size_t i) const { return nstruct_ + 1 + i; }
  std::size_t pivots() const { return pivots_; }

  void add_artificial_column() {
    for (auto& row : coef_) row.emplace_back(-1);
    nonbasic_.push_back(artificial_id());
    cost_.assign(nonbasic_.size(), Rational(0));
    cost_.back() = 1;
    z0_ = 0;
  }

  void drop_artificial_column() {
    const auto it = std::find(nonbasic_.begin(), nonbasic_.end(), artificial_id());
    const auto col = static_cast<std::size_t>(it - nonbasic_.begin());
    nonbasic_.erase(it);
    for (auto& row : coef_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    cost_.erase(cost_.begin() + static_cast<std::ptrdiff_t>(col));
  }

  std::size_t column_of(std::size_t id) const {
    const auto it = std::find(nonbasic_.begin(), nonbasic_.end(), id);
    return it == nonbasic_.end() ? kNone : static_cast<std::size_t>(it - nonbasic_.begin());
  }
  std::size_t row_of(std::size_t id) const {
    const auto it = std::find(basic_.begin(), basic_.end(), id);
    return it == basic_.end() ? kNone : static_cast<std::size_t>(it - basic_.begin());
  }

  const Rational& rhs(std::size_t i) const { return rhs_[i]; }
  const Rational& coef(std::size_t i, std::size_t j) const { return coef_[i][j]; }
  const Rational& cost(std::size_t j) const { return cost_[j]; }
  const Rational& objective() const { return z0_; }
  std::size_t basic(std::size_t i) const { return basic_[i]; }
  const std::vector<std::size_t>& basic_ids() const { return basic_; }
  std::size_t nonbasic(std::size_t j) const { return nonbasic_[j]; }

  // Replace the objective by sum_k c[k] * structural_k (+ constant).
  void set_structural_objective(const std::vector<Rational>& c, const Rational& constant) {
    z0_ = constant;
    for (std::size_t j = 0; j < cols(); ++j) cost_[j] = nonbasic_[j] < nstruct_ ? c[nonbasic_[j]] : Rational(0);
    for (std::size_t i = 0; i < rows(); ++i) {
      const std::size_t b = basic_[i];
      if (b >= nstruct_ || c[b] == 0) continue;
      z0_ += c[b] * rhs_[i];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (coef_[i][j] != 0) cost_[j] -= c[b] * coef_[i][j];
      }
    }
  }

  void pivot(std::size_t r, std::size_t s) {
    ++pivots_;
    const Rational a = coef_[r][s];
    const std::size_t m = rows();
    const std::size_t n = cols();
    auto& prow = coef_[r];
    rhs_[r] /= a;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != s && prow[j] != 0) prow[j] /= a;
    }
    prow[s] = 1 / a;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || coef_[i][s] == 0) continue;
      const Rational f = coef_[i][s];
      auto& row = coef_[i];
      rhs_[i] -= f * rhs_[r];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s && prow[j] != 0) row[j] -= f * prow[j];
      }
      row[s] = -f * prow[s];
    }
    if (cost_[s] != 0) {
      const Rational f = cost_[s];
      z0_ += f * rhs_[r];
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s && prow[j] != 0) cost_[j] -= f * prow[j];
      }
      cost_[s] = -f * prow[s];
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  enum class Outcome { Optimal, Unbounded };

  // Bland's rule: entering = improving nonbasic with smallest id; leaving =
  // minimum ratio, ties broken by smallest basic id.
  Outcome run(bool allow_artificial_entering = true) {
    for (;;) {
      std::size_t s = kNone;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (cost_[j] >= 0) continue;
        if (!allow_artificial_entering && nonbasic_[j] == artificial_id()) continue;
        if (s == kNone || nonbasic_[j] < nonbasic_[s]) s = j;
      }
      if (s == kNone) return Outcome::Optimal;
      std::size_t r = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (coef_[i][s] <= 0) continue;
        Rational ratio = rhs_[i] / coef_[i][s];
        if (r == kNone || ratio < best || (ratio == best && basic_[i] < basic_[r])) {
          r = i;
          best = std::move(ratio);
        }
      }
      if (r == kNone) return Outcome::Unbounded;
      pivot(r, s);
    }
  }

 private:
  std::vector<std::vector<Rational>> coef_;
  std::vector<Rational> rhs_;
  std::vector<Rational> cost_;
  Rational z0_ = 0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::size_t nstruct_;
  std::size_t pivots_ = 0;
};

// Mapping from original variables to internal structural variables.
struct VariableMap {
  // For original k: shifted (x_k = lower + x'_k) uses plus[k]; free uses
  // x_k = x_plus - x_minus.
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;  // kNone when shifted
  std::vector<Rational> shift;
  std::size_t count = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  const std::size_t n = lp.num_vars();
  auto bound = [&](std::size_t k) -> const VariableBounds* { return lp.bounds.empty() ? nullptr : &lp.bounds[k]; };

  VariableMap vm;
  vm.plus.resize(n);
  vm.minus.assign(n, kNone);
  vm.shift.assign(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    const auto* b = bound(k);
    vm.plus[k] = vm.count++;
    if (b && b->lower) {
      vm.shift[k] = *b->lower;
    } else {
      vm.minus[k] = vm.count++;
    }
  }

  // Internal rows, all of the form a' x' <= rhs'.
  std::vector<std::vector<Rational>> coef;
  std::vector<Rational> rhs;
  std::vector<RowOrigin> origin;
  auto push_row = [&](const QVector& row, const Rational& b, int sign, RowOrigin::Kind kind, std::size_t index) {
    std::vector<Rational> r(vm.count);
    Rational adj = b;
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k] == 0) continue;
      adj -= row[k] * vm.shift[k];
      r[vm.plus[k]] = sign * row[k];
      if (vm.minus[k] != kNone) r[vm.minus[k]] = -sign * row[k];
    }
    coef.push_back(std::move(r));
    rhs.push_back(sign * adj);
    origin.push_back({kind, index, sign});
  };
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    if (c.sense != Sense::GreaterEqual) push_row(c.row, c.rhs, +1, RowOrigin::Constraint, i);
    if (c.sense != Sense::LessEqual) push_row(c.row, c.rhs, -1, RowOrigin::Constraint, i);
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto* b = bound(k);
    if (b && b->upper) push_row(QVector::unit(n, k), *b->upper, +1, RowOrigin::Upper, k);
  }

  const std::size_t m = rhs.size();
  Dictionary dict(std::move(coef), std::move(rhs), vm.count);
  LpSolution sol;
  sol.duals.assign(lp.constraints.size(), Rational(0));
  sol.lower_duals.assign(n, Rational(0));
  sol.upper_duals.assign(n, Rational(0));

  // Reads multipliers from the current objective row (see header).
  auto read_multipliers = [&]() {
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t col = dict.column_of(dict.slack_id(i));
      if (col == kNone) continue;
      const Rational y = -dict.cost(col) * origin[i].sign;
      if (origin[i].kind == RowOrigin::Constraint) {
        sol.duals[origin[i].index] += y;
      } else {
        sol.upper_duals[origin[i].index] += y;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (vm.minus[k] != kNone) continue;
      const std::size_t col = dict.column_of(vm.plus[k]);
      if (col != kNone) sol.lower_duals[k] = dict.cost(col);
    }
  };

  // Phase 1: a single artificial x0 relaxes every row; the initial pivot on
  // the most negative right-hand side makes the dictionary feasible.
  std::size_t worst = kNone;
  for (std::size_t i = 0; i < m; ++i) {
    if (dict.rhs(i) < 0 && (worst == kNone || dict.rhs(i) < dict.rhs(worst))) worst = i;
  }
  if (worst != kNone) {
    dict.add_artificial_column();
    dict.pivot(worst, dict.cols() - 1);
    dict.run();
    if (dict.objective() > 0) {
      read_multipliers();
      sol.status = LpStatus::Infeasible;
      sol.pivots = dict.pivots();
      return sol;
    }
    const std::size_t r = dict.row_of(dict.artificial_id());
    if (r != kNone) {
      std::size_t s = kNone;
      for (std::size_t j = 0; j < dict.cols(); ++j) {
        if (dict.coef(r, j) != 0 && (s == kNone || dict.nonbasic(j) < dict.nonbasic(s))) s = j;
      }
      dict.pivot(r, s);
    }
    dict.drop_artificial_column();
  }

  // Phase 2.
  std::vector<Rational> c(vm.count);
  Rational constant = 0;
  for (std::size_t k = 0; k < n; ++k) {
    c[vm.plus[k]] = lp.objective[k];
    if (vm.minus[k] != kNone) c[vm.minus[k]] = -lp.objective[k];
    constant += lp.objective[k] * vm.shift[k];
  }
  dict.set_structural_objective(c, constant);
  if (dict.run() == Dictionary::Outcome::Unbounded) {
    sol.status = LpStatus::Unbounded;
    sol.pivots = dict.pivots();
    return sol;
  }

  std::vector<Rational> value(vm.count);
  for (std::size_t i = 0; i < m; ++i) {
    if (dict.basic(i) < vm.count) value[dict.basic(i)] = dict.rhs(i);
  }
  sol.x = QVector(n);
  for (std::size_t k = 0; k < n; ++k) {
    sol.x[k] = vm.shift[k] + value[vm.plus[k]];
    if (vm.minus[k] != kNone) sol.x[k] -= value[vm.minus[k]];
  }
  sol.objective_value = dict.objective();
  read_multipliers();
  sol.basis = dict.basic_ids();
  std::sort(sol.basis.begin(), sol.basis.end());
  sol.status = LpStatus::Optimal;
  sol.pivots = dict.pivots();
  return sol;
}

Rational dual_objective(const LinearProgram& lp, const LpSolution& sol) {
  Rational v = 0;
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) v += sol.duals[i] * lp.constraints[i].rhs;
  for (std::size_t k = 0; k < lp.bounds.size(); ++k) {
    if (lp.bounds[k].lower) v += sol.lower_duals[k] * *lp.bounds[k].lower;
    if (lp.bounds[k].upper) v += sol.upper_duals[k] * *lp.bounds[k].upper;
  }
  return v;
}

namespace {

LinearProgram polytope_program(const HPolytope& p, QVector objective) {
  LinearProgram lp;
  lp.objective = std::move(objective);
  lp.constraints.reserve(p.size());
  for (const auto& h : p.constraints()) lp.constraints.push_back({h.normal, h.offset, Sense::LessEqual});
  return lp;
}

}  // namespace

std::optional<QVector> feasible_point(const HPolytope& p) {
  const LpSolution sol = solve_lp(polytope_program(p, QVector(p.dim())));
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  return sol.x;
}

std::optional<Rational> maximize_linear(const HPolytope& p, const QVector& u, QVector* argmax) {
  const LpSolution sol = solve_lp(polytope_program(p, -u));
  if (sol.status == LpStatus::Infeasible) throw PreconditionError("maximize over an empty polytope");
  if (sol.status == LpStatus::Unbounded) return std::nullopt;
  if (argmax) *argmax = sol.x;
  return -sol.objective_value;
}

AffineHull affine_hull_dim(const HPolytope& p) {
  const auto start = feasible_point(p);
  if (!start) throw PreconditionError("affine_hull_dim: polytope is empty");

  // Only constraints tight at some feasible point can be implicit
  // equalities; every LP optimum found along the way rules out more.
  std::vector<bool> decided(p.size(), false);
  auto rule_out_loose = [&](const QVector& y) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!decided[j] && p.slack(j, y) > 0) decided[j] = true;
    }
  };
  rule_out_loose(*start);

  AffineHull hull;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (decided[j]) continue;
    QVector argmin;
    // max slack_j = b_j - min <u_j, y>
    const auto top = maximize_linear(p, -p[j].normal, &argmin);
    decided[j] = true;
    if (!top) continue;  // slack unbounded above
    if (p[j].offset + *top > 0) {
      rule_out_loose(argmin);
    } else {
      hull.implicit_equalities.insert(j);
    }
  }
  std::vector<QVector> normals;
  for (auto j : hull.implicit_equalities) normals.push_back(p[j].normal);
  hull.dim = static_cast<int>(p.dim() - rank_of(normals, p.dim()));
  return hull;
}

}  // namespace gaugeball
