#pragma once

#include <string>
#include <vector>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/fixtures.hpp"
#include "gaugeball/random.hpp"

namespace gaugeball::testing {

inline Rational q(const char* s) { return parse_rational(s); }

/// p/q in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline QVector vec(std::initializer_list<const char*> xs) {
  QVector v(xs.size());
  std::size_t i = 0;
  for (const char* x : xs) v[i++] = parse_rational(x);
  return v;
}

/// Random point set of size 2..n+1 with the usual bounded-bit-length
/// coordinates; repeated points are allowed.
inline PointSet random_points(Rng& rng, std::size_t n) {
  const auto size = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(n) + 1));
  PointSet pts;
  for (std::size_t i = 0; i < size; ++i) pts.push_back(rng.vector(n));
  return pts;
}

/// Fixture family plus a few seeded random V-rep gauges.
inline std::vector<NamedGauge> gauge_zoo(std::uint64_t seed = 11, int random_count = 4) {
  auto zoo = fixture_family();
  Rng rng(seed);
  for (int i = 0; i < random_count; ++i) {
    const int n = 2 + i % 2;
    zoo.push_back({"random" + std::to_string(i), random_vrep_gauge(rng, n)});
  }
  return zoo;
}

}  // namespace gaugeball::testing
