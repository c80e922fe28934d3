#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "gaugeball/hpolytope.hpp"
#include "gaugeball/qlinalg.hpp"

namespace gaugeball {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  QVector row;
  Rational rhs;
  Sense sense = Sense::LessEqual;
};

struct VariableBounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

/// minimize <objective, x> subject to the constraints and bounds. An empty
/// `bounds` vector means every variable is free.
struct LinearProgram {
  QVector objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBounds> bounds;

  std::size_t num_vars() const { return objective.size(); }
  /// Throws InputError when row lengths or the bounds vector do not match.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Dual sign convention (Lagrangian form, minimization):
///
///   objective = sum_i duals[i] * row_i + sum_k (lower_duals[k] + upper_duals[k]) * e_k
///
/// with duals[i] <= 0 for `<=` rows, >= 0 for `>=` rows, free for `=` rows,
/// lower_duals >= 0 and upper_duals <= 0. At an optimum the dual objective
/// sum_i duals[i] * rhs_i + sum_k lower_duals[k] * l_k + upper_duals[k] * u_k
/// equals objective_value exactly.
///
/// When status is Infeasible the same three vectors hold a Farkas ray with
/// the same sign pattern: the combination of rows and bounds is the zero
/// vector while the combined right-hand side is strictly positive.
struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  QVector x;
  Rational objective_value;
  std::vector<Rational> duals;
  std::vector<Rational> lower_duals;
  std::vector<Rational> upper_duals;
  /// Indices of the basic variables of the internal standard form.
  std::vector<std::size_t> basis;
  std::size_t pivots = 0;
};

/// Exact two-phase primal simplex with Bland's rule.
LpSolution solve_lp(const LinearProgram& lp);

/// sum_i duals[i] * rhs_i + bound terms (see LpSolution).
Rational dual_objective(const LinearProgram& lp, const LpSolution& sol);

/// Any point of `p`, deterministic for a fixed constraint order.
std::optional<QVector> feasible_point(const HPolytope& p);

struct AffineHull {
  int dim = 0;
  /// Indices of constraints that hold with equality on all of p.
  std::set<std::size_t> implicit_equalities;
};

/// Dimension of a non-empty H-polytope and its implicit equalities.
/// Throws PreconditionError when p is empty.
AffineHull affine_hull_dim(const HPolytope& p);

/// max <u, y> over p, or nullopt when unbounded. Throws PreconditionError
/// when p is empty.
std::optional<Rational> maximize_linear(const HPolytope& p, const QVector& u, QVector* argmax = nullptr);

}  // namespace gaugeball
