#pragma once

#include <cstddef>
#include <vector>

#include "gaugeball/qlinalg.hpp"

namespace gaugeball {

/// One inequality <normal, y> <= offset.
struct Halfspace {
  QVector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// Solution set of finitely many halfspaces in R^n. May be empty, unbounded
/// or lower-dimensional; the operations that need more say so.
///
/// On construction every normal is scaled (by a positive factor) to a
/// primitive integer vector and exact duplicates are dropped, keeping the
/// first occurrence. Zero normals are rejected.
class HPolytope {
 public:
  HPolytope() = default;
  HPolytope(std::size_t dim, std::vector<Halfspace> constraints);

  /// {y : y = point}, written as n pairs of opposing inequalities.
  static HPolytope singleton(const QVector& point);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return constraints_.size(); }
  const std::vector<Halfspace>& constraints() const { return constraints_; }
  const Halfspace& operator[](std::size_t j) const { return constraints_[j]; }

  /// offset_j - <normal_j, y>
  Rational slack(std::size_t j, const QVector& y) const;
  bool contains(const QVector& y) const;
  /// Indices j with <normal_j, y> = offset_j.
  std::vector<std::size_t> tight_at(const QVector& y) const;

  /// {y - t : y in this}
  HPolytope translated(const QVector& t) const;
  /// {-y : y in this}
  HPolytope reflected() const;
  /// Intersection; constraints of `other` are appended.
  HPolytope intersect(const HPolytope& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> constraints_;
};

}  // namespace gaugeball
