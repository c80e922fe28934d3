#pragma once

#include <cstdint>
#include <random>

#include "gaugeball/qlinalg.hpp"

namespace gaugeball {

/// Seeded generator whose streams are identical on every platform: only the
/// raw mt19937_64 output is used, never the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi] (modulo bias is irrelevant here).
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  /// p/q with p in [-num, num], q in [1, den].
  Rational rational(std::int64_t num = 100, std::int64_t den = 10) {
    Rational q(Integer(std::to_string(between(-num, num))), Integer(std::to_string(between(1, den))));
    q.canonicalize();
    return q;
  }
  QVector vector(std::size_t n, std::int64_t num = 100, std::int64_t den = 10) {
    QVector v(n);
    for (auto& x : v) x = rational(num, den);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gaugeball
