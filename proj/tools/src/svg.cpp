#include "gaugeball_cli/svg.hpp"

#include <algorithm>
#include <sstream>

#include "gaugeball/errors.hpp"

namespace gaugeball::cli {

namespace {

// Counter-clockwise order around an interior point, exact.
std::vector<QVector> counter_clockwise(std::vector<QVector> verts) {
  if (verts.size() < 3) return verts;
  QVector mid(2);
  for (const auto& v : verts) mid += v;
  mid *= Rational(1, static_cast<long>(verts.size()));
  auto half = [](const QVector& d) { return d[1] > 0 || (d[1] == 0 && d[0] > 0) ? 0 : 1; };
  std::sort(verts.begin(), verts.end(), [&](const QVector& a, const QVector& b) {
    const QVector da = a - mid;
    const QVector db = b - mid;
    if (half(da) != half(db)) return half(da) < half(db);
    return da[0] * db[1] - da[1] * db[0] > 0;
  });
  return verts;
}

struct Bounds {
  Rational min_x, max_x, min_y, max_y;
  bool empty = true;

  void add(const QVector& p) {
    if (empty) {
      min_x = max_x = p[0];
      min_y = max_y = p[1];
      empty = false;
      return;
    }
    min_x = std::min(min_x, p[0]);
    max_x = std::max(max_x, p[0]);
    min_y = std::min(min_y, p[1]);
    max_y = std::max(max_y, p[1]);
  }
};

std::string point_list(const std::vector<QVector>& pts) {
  std::string s;
  for (const auto& p : pts) {
    if (!s.empty()) s += ' ';
    s += fixed_decimal(p[0]) + "," + fixed_decimal(-p[1]);
  }
  return s;
}

}  // namespace

std::string fixed_decimal(const Rational& q) {
  const Integer scale("1000000000000");
  const Rational shifted = q * scale + Rational(1, 2);
  Integer rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  const bool negative = rounded < 0;
  const Integer mag = abs(rounded);
  const Integer whole = mag / scale;
  std::string frac = Integer(mag % scale).get_str();
  frac.insert(0, 12 - frac.size(), '0');
  return std::string(negative ? "-" : "") + whole.get_str() + "." + frac;
}

std::string render_svg(const PointSet& points, const GaugeBody& c) {
  if (c.dim() != 2) throw UnsupportedDimension("render: only planar (n = 2) instances can be drawn");
  const CircumResult res = circumradius(points, c);
  const auto gauge = counter_clockwise(hrep_to_vrep(c.body()).vertices);
  const auto cheb = counter_clockwise(hrep_to_vrep(res.chebyshev).vertices);

  std::vector<QVector> centers = cheb;
  if (centers.size() > 8) centers.resize(8);

  Bounds box;
  for (const auto& v : gauge) box.add(v);
  for (const auto& p : points) box.add(p);
  std::vector<std::vector<QVector>> balls;
  for (const auto& x : centers) {
    std::vector<QVector> ball;
    for (const auto& v : gauge) ball.push_back(v * res.radius + x);
    for (const auto& p : ball) box.add(p);
    balls.push_back(std::move(ball));
  }
  const Rational extent = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  const Rational margin = extent / 20;
  const Rational marker = extent / 100;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\""
      << fixed_decimal(box.min_x - margin) << ' ' << fixed_decimal(-box.max_y - margin) << ' '
      << fixed_decimal(box.max_x - box.min_x + 2 * margin) << ' ' << fixed_decimal(box.max_y - box.min_y + 2 * margin)
      << "\">\n";
  svg << "  <polygon class=\"gauge\" points=\"" << point_list(gauge)
      << "\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  for (const auto& ball : balls) {
    svg << "  <polygon class=\"circumball\" points=\"" << point_list(ball)
        << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  if (cheb.size() == 1) {
    svg << "  <circle class=\"chebyshev\" cx=\"" << fixed_decimal(cheb[0][0]) << "\" cy=\"" << fixed_decimal(-cheb[0][1])
        << "\" r=\"" << fixed_decimal(marker) << "\" fill=\"#d62728\"/>\n";
  } else if (cheb.size() == 2) {
    svg << "  <line class=\"chebyshev\" x1=\"" << fixed_decimal(cheb[0][0]) << "\" y1=\"" << fixed_decimal(-cheb[0][1])
        << "\" x2=\"" << fixed_decimal(cheb[1][0]) << "\" y2=\"" << fixed_decimal(-cheb[1][1])
        << "\" stroke=\"#d62728\" stroke-width=\"3\" vector-effect=\"non-scaling-stroke\"/>\n";
  } else {
    svg << "  <polygon class=\"chebyshev\" points=\"" << point_list(cheb)
        << "\" fill=\"#d62728\" fill-opacity=\"0.4\" stroke=\"#d62728\"/>\n";
  }
  for (const auto& p : points) {
    svg << "  <circle class=\"point\" cx=\"" << fixed_decimal(p[0]) << "\" cy=\"" << fixed_decimal(-p[1]) << "\" r=\""
        << fixed_decimal(marker) << "\" fill=\"#000000\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace gaugeball::cli
