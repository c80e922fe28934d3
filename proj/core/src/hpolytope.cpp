#include "gaugeball/hpolytope.hpp"

#include <algorithm>

#include "gaugeball/errors.hpp"

namespace gaugeball {

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> constraints) : dim_(dim) {
  constraints_.reserve(constraints.size());
  for (auto& h : constraints) {
    if (h.normal.size() != dim) throw InputError("constraint normal has wrong dimension");
    if (h.normal.is_zero()) throw InputError("constraint with zero normal");
    QVector scaled = primitive_integer(h.normal);
    // scaled = s * normal for some s > 0; recover s from any nonzero entry.
    std::size_t i = 0;
    while (h.normal[i] == 0) ++i;
    Rational factor = scaled[i] / h.normal[i];
    Halfspace normalized{std::move(scaled), h.offset * factor};
    if (std::find(constraints_.begin(), constraints_.end(), normalized) == constraints_.end()) {
      constraints_.push_back(std::move(normalized));
    }
  }
}

HPolytope HPolytope::singleton(const QVector& point) {
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < point.size(); ++i) {
    hs.push_back({QVector::unit(point.size(), i), point[i]});
    hs.push_back({-QVector::unit(point.size(), i), -point[i]});
  }
  return HPolytope(point.size(), std::move(hs));
}

Rational HPolytope::slack(std::size_t j, const QVector& y) const {
  return constraints_[j].offset - dot(constraints_[j].normal, y);
}

bool HPolytope::contains(const QVector& y) const {
  for (std::size_t j = 0; j < constraints_.size(); ++j) {
    if (slack(j, y) < 0) return false;
  }
  return true;
}

std::vector<std::size_t> HPolytope::tight_at(const QVector& y) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < constraints_.size(); ++j) {
    if (slack(j, y) == 0) out.push_back(j);
  }
  return out;
}

HPolytope HPolytope::translated(const QVector& t) const {
  std::vector<Halfspace> hs;
  hs.reserve(constraints_.size());
  for (const auto& h : constraints_) hs.push_back({h.normal, h.offset - dot(h.normal, t)});
  return HPolytope(dim_, std::move(hs));
}

HPolytope HPolytope::reflected() const {
  std::vector<Halfspace> hs;
  hs.reserve(constraints_.size());
  for (const auto& h : constraints_) hs.push_back({-h.normal, h.offset});
  return HPolytope(dim_, std::move(hs));
}

HPolytope HPolytope::intersect(const HPolytope& other) const {
  if (other.dim_ != dim_) throw InputError("intersect: dimension mismatch");
  std::vector<Halfspace> hs = constraints_;
  hs.insert(hs.end(), other.constraints_.begin(), other.constraints_.end());
  return HPolytope(dim_, std::move(hs));
}

}  // namespace gaugeball
