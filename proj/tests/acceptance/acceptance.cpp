// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/exactlp.hpp"
#include "gaugeball/fixtures.hpp"
#include "gaugeball/io.hpp"
#include "gaugeball/oracle.hpp"
#include "gaugeball_cli/commands.hpp"

namespace {

using namespace gaugeball;

const std::string kData = GAUGEBALL_TEST_DATA;
const std::string kGolden = GAUGEBALL_TEST_GOLDEN;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(why);
  }
};

unsigned threads() {
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GAUGEBALL_THREADS"); env != nullptr && *env != '\0') {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min(cores, static_cast<unsigned>(v));
  }
  return cores;
}

// The shared corpus of criteria 1-3: dims 2 and 3, gauges from the fixture
// family and random V-rep hulls, point sets of size 2..n+1 (some repeated).
struct Case {
  std::string gauge_name;
  GaugeBody gauge;
  PointSet points;
};

std::vector<Case> instance_corpus() {
  std::vector<NamedGauge> gauges = fixture_family();
  Rng gauge_rng(20240601);
  for (int i = 0; i < 8; ++i) {
    gauges.push_back({"vrep" + std::to_string(i), random_vrep_gauge(gauge_rng, 2 + i % 2)});
  }
  Rng rng(1);
  std::vector<Case> out;
  for (int t = 0; t < 200; ++t) {
    const NamedGauge& g = gauges[static_cast<std::size_t>(t) % gauges.size()];
    const std::size_t n = g.gauge.dim();
    const auto size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(n) + 1));
    PointSet pts;
    for (std::size_t i = 0; i < size; ++i) pts.push_back(rng.vector(n));
    if (t % 10 == 7) pts.push_back(pts.front());
    out.push_back({g.name, g.gauge, std::move(pts)});
  }
  return out;
}

std::string describe(const Case& c) {
  return c.gauge_name + " points=" + to_json(Instance{"", c.gauge, c.points})["points"].dump();
}

Verdict criterion1(const std::vector<Case>& corpus) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const Rational resolution(1, 64);
  for (const auto& c : corpus) {
    const Rational radius = circumradius(c.points, c.gauge).radius;
    const GridBracket b = grid_radius(c.points, c.gauge, resolution);
    if (!(b.lower <= radius && radius <= b.upper)) {
      v.fail(describe(c) + " radius " + to_string(radius) + " outside [" + to_string(b.lower) + ", " +
             to_string(b.upper) + "]");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 300) v.fail("runtime " + std::to_string(secs) + " s exceeds 300 s");
  std::ostringstream s;
  s << corpus.size() << " instances at resolution 1/64, " << (v.pass ? 0 : v.failures.size())
    << " outside the bracket, " << static_cast<int>(secs) << " s";
  v.detail = s.str();
  return v;
}

Verdict criterion2(const std::vector<Case>& corpus) {
  Verdict v;
  int checked = 0;
  for (const auto& c : corpus) {
    const auto res = circumradius(c.points, c.gauge);
    if (res.radius == 0) continue;
    ++checked;
    const Certificate cert = extract_certificate(c.points, c.gauge, res);
    const std::size_t n = c.gauge.dim();
    QVector sum(n);
    Rational total;
    bool ok = cert.terms.size() >= 2 && cert.terms.size() <= n + 1;
    for (const auto& t : cert.terms) {
      ok = ok && t.weight > 0 && gauge_eval(c.gauge, t.touch) == 1 &&
           t.touch * res.radius + res.center == c.points[t.point_index] &&
           cone_contains(normal_cone_generators(c.gauge, t.touch), t.normal);
      sum += t.normal * t.weight;
      total += t.weight;
    }
    ok = ok && sum.is_zero() && total == 1;
    if (!ok) v.fail(describe(c) + " certificate violates an invariant");
  }
  v.detail = std::to_string(checked) + " certificates checked with exact equality";
  return v;
}

Verdict criterion3(const std::vector<Case>& corpus) {
  Verdict v;
  for (const auto& c : corpus) {
    const auto res = circumradius(c.points, c.gauge);
    const int n = static_cast<int>(c.gauge.dim());
    if (res.dim_cc > n - 1) v.fail(describe(c) + " dim_cc " + std::to_string(res.dim_cc) + " > n-1");
    if (res.radius == 0) continue;
    std::vector<QVector> normals;
    for (const auto& t : extract_certificate(c.points, c.gauge, res).terms) normals.push_back(t.normal);
    const int bound = n - static_cast<int>(rank_of(normals, c.gauge.dim()));
    if (res.dim_cc > bound) v.fail(describe(c) + " dim_cc exceeds n - dim lin(normals)");
  }
  v.detail = std::to_string(corpus.size()) + " instances, dim_cc <= n-1 and <= n - dim lin{normals}";
  return v;
}

Verdict criterion4() {
  Verdict v;
  for (const auto& [name, body] : std::vector<NamedGauge>{{"square", square_gauge()}, {"cross2", cross_polytope_gauge(2)}}) {
    const auto w = symmetric_witness(body, 0);
    if (!w) {
      v.fail(name + ": no symmetric witness");
      continue;
    }
    if (w->points.size() != 2 || w->points[1] != -w->points[0]) v.fail(name + ": not a symmetric pair");
    const auto res = circumradius(w->points, body);
    if (res.radius != 1 || res.dim_cc != 1) v.fail(name + ": solver gives dim_cc " + std::to_string(res.dim_cc));
    if (!polytope_contains(res.chebyshev, w->flat_body.reflected())) v.fail(name + ": -A not inside cc");
    if (const auto err = verify_witness(body, *w)) v.fail(name + ": " + *err);
  }
  v.detail = "square and cross2: two-point sets with dim_cc = 1 and -A inside cc";
  return v;
}

Verdict criterion5() {
  Verdict v;
  Rng rng(5);
  for (int n = 2; n <= 3; ++n) {
    const GaugeBody c = simplex_gauge(n);
    for (int t = 0; t < 100; ++t) {
      const auto size = static_cast<std::size_t>(rng.between(1, n + 1));
      PointSet pts;
      for (std::size_t i = 0; i < size; ++i) pts.push_back(rng.vector(static_cast<std::size_t>(n)));
      if (circumradius(pts, c).dim_cc != 0) v.fail("simplex" + std::to_string(n) + " trial " + std::to_string(t));
    }
    for (int k = 0; k <= n - 2; ++k) {
      if (witness_search(c, k)) v.fail("simplex" + std::to_string(n) + " k=" + std::to_string(k) + " has a witness");
    }
  }
  v.detail = "2D and 3D simplex gauges, 100 point sets each, all dim_cc = 0, no witness for any k";
  return v;
}

Verdict criterion6() {
  Verdict v;
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 0}, {3, 0}, {3, 1}}) {
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
    const auto sc = minkowski_sum_simplex_cube(n, k);
    const auto w = witness_search(sc.gauge, k);
    if (!w) {
      v.fail(tag + ": no witness");
      continue;
    }
    if (static_cast<int>(w->points.size()) != n - k) v.fail(tag + ": wrong point count");
    if (w->validated_dim_cc <= k) v.fail(tag + ": validated_dim_cc <= k");
    if (const auto err = verify_witness(sc.gauge, *w)) v.fail(tag + ": " + *err);
  }
  QVector a(2);
  a[0] = 1;
  const auto res = circumradius({a, -a}, minkowski_sum_simplex_cube(2, 0).gauge);
  if (res.radius != 1 || res.dim_cc != 1) v.fail("(2,0): {(1,0),(-1,0)} does not give dim_cc = 1");
  v.detail = "(2,0), (3,0), (3,1) witnesses validated; {(1,0),(-1,0)} on the square gives dim_cc = 1";
  return v;
}

Verdict criterion7() {
  Verdict v;
  std::vector<NamedGauge> gauges = fixture_family();
  Rng rng(7);
  for (int i = 0; i < 20; ++i) gauges.push_back({"vrep" + std::to_string(i), random_vrep_gauge(rng, 2 + i % 2)});
  const HarnessOptions opt{100, 7, threads()};
  int runs = 0;
  std::size_t violations = 0;
  for (const auto& [name, c] : gauges) {
    for (int k = 0; k <= static_cast<int>(c.dim()) - 2; ++k) {
      ++runs;
      const CheckReport r = check_witness_equivalence(c, k, opt);
      violations += r.violations.size();
      if (!r.ok()) {
        const std::string path = "acceptance_counterexample_" + name + "_k" + std::to_string(k) + ".json";
        std::ofstream(path) << dump(to_json(r, c));
        v.fail(name + " k=" + std::to_string(k) + ": " + r.violations.front().kind + " (bundle: " + path + ")");
      }
    }
  }
  v.detail = std::to_string(gauges.size()) + " gauges, " + std::to_string(runs) + " (gauge, k) runs x 100 trials, " +
             std::to_string(violations) + " violations";
  return v;
}

Verdict criterion8() {
  Verdict v;
  Rng rng(8);
  int opposing = 0;
  for (int i = 0; i < 50; ++i) {
    const GaugeBody c = random_polygon(rng, i % 2 == 0);
    const bool decided = opposing_segments_2d(c);
    opposing += decided ? 1 : 0;
    if (decided != witness_search(c, 0).has_value()) v.fail("polygon " + std::to_string(i) + " disagrees");
  }
  v.detail = "50 random polygons (" + std::to_string(opposing) + " with opposing edges), exact agreement";
  return v;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Verdict criterion9() {
  Verdict v;
  struct Cmd {
    std::string command, input, golden, theorem;
    int k, trials;
  };
  const std::vector<Cmd> cmds = {
      {"radius", "square.json", "radius_square.json", "2", 0, 100},
      {"radius", "simplex.json", "radius_simplex.json", "2", 0, 100},
      {"radius", "singleton.json", "radius_singleton.json", "2", 0, 100},
      {"radius", "cube_instance.json", "radius_cube.json", "2", 0, 100},
      {"certify", "square.json", "certify_square.json", "2", 0, 100},
      {"certify", "simplex.json", "certify_simplex.json", "2", 0, 100},
      {"certify", "singleton.json", "certify_singleton.json", "2", 0, 100},
      {"witness", "square.json", "witness_square.json", "2", 0, 100},
      {"witness", "simplex_gauge.json", "witness_simplex.json", "2", 0, 100},
      {"witness", "prism_gauge.json", "witness_prism.json", "2", 0, 100},
      {"witness", "cube_gauge.json", "witness_cube_k1.json", "2", 1, 100},
      {"faces", "prism_gauge.json", "faces_prism.json", "2", 0, 100},
      {"check", "square.json", "check_square.json", "2", 0, 30},
      {"check", "simplex_gauge.json", "check_simplex.json", "2", 0, 30},
      {"check", "cross.json", "check_cross_symmetric.json", "1", 0, 30},
      {"check", "cube_gauge.json", "check_cube_symmetric_k1.json", "3", 1, 20},
      {"check", "hexagon_gauge.json", "check_hexagon_corollary.json", "corollary", 0, 30},
      {"render", "square.json", "render_square.svg", "2", 0, 100},
      {"render", "simplex.json", "render_simplex.svg", "2", 0, 100},
      {"render", "cross.json", "render_cross.svg", "2", 0, 100},
  };
  for (const auto& c : cmds) {
    cli::CommandOptions o;
    o.input = kData + "/" + c.input;
    o.k = c.k;
    o.theorem = c.theorem;
    o.trials = c.trials;
    o.seed = 1;
    std::string first;
    std::string second;
    std::ostringstream err;
    o.threads = 1;
    cli::run_command_to_string(c.command, o, first, err);
    o.threads = threads();
    cli::run_command_to_string(c.command, o, second, err);
    if (first != second) v.fail(c.golden + ": repeated run differs");
    if (first != slurp(kGolden + "/" + c.golden)) v.fail(c.golden + ": differs from the golden file");
  }
  v.detail = std::to_string(cmds.size()) + " commands run twice, byte-identical and equal to the golden files";
  return v;
}

QVector combination(const LinearProgram& lp, const LpSolution& s) {
  QVector r(lp.num_vars());
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) r += lp.constraints[i].row * s.duals[i];
  for (std::size_t k = 0; k < lp.num_vars(); ++k) {
    if (!s.lower_duals.empty()) r[k] += s.lower_duals[k];
    if (!s.upper_duals.empty()) r[k] += s.upper_duals[k];
  }
  return r;
}

Verdict criterion10() {
  Verdict v;
  Rng rng(10);
  int optimal = 0;
  int infeasible = 0;
  double slowest = 0;
  auto timed = [&](const LinearProgram& lp) {
    const auto start = std::chrono::steady_clock::now();
    LpSolution s = solve_lp(lp);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    return s;
  };
  auto check = [&](const LinearProgram& lp, const LpSolution& s, const std::string& tag) {
    if (s.status == LpStatus::Optimal) {
      ++optimal;
      if (dual_objective(lp, s) != s.objective_value || dot(lp.objective, s.x) != s.objective_value ||
          combination(lp, s) != lp.objective) {
        v.fail(tag + ": strong duality fails");
      }
    } else if (s.status == LpStatus::Infeasible) {
      ++infeasible;
      if (!combination(lp, s).is_zero() || dual_objective(lp, s) <= 0) v.fail(tag + ": Farkas ray is not exact");
    }
  };
  for (int t = 0; t < 1000; ++t) {
    const auto n = static_cast<std::size_t>(rng.between(1, 4));
    LinearProgram lp;
    lp.objective = rng.vector(n, 10, 3);
    const auto m = static_cast<std::size_t>(rng.between(1, 10));
    // Odd trials are feasible by construction around an anchor point.
    const bool anchored = t % 2 == 1;
    const QVector anchor = rng.vector(n, 5, 2);
    for (std::size_t i = 0; i < m; ++i) {
      QVector row = rng.vector(n, 5, 2);
      const auto sense = static_cast<Sense>(rng.between(0, 2));
      Rational rhs = rng.rational(10, 3);
      if (anchored) {
        const Rational slack(rng.between(0, 3));
        rhs = dot(row, anchor) + (sense == Sense::LessEqual ? slack : sense == Sense::GreaterEqual ? -slack : Rational(0));
      }
      lp.constraints.push_back({std::move(row), rhs, sense});
    }
    lp.bounds.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (rng.between(0, 2) > 0) lp.bounds[k].lower = anchored ? anchor[k] - rng.between(0, 2) : rng.rational(5, 2);
      if (rng.between(0, 2) > 0) lp.bounds[k].upper = anchored ? anchor[k] + rng.between(0, 2) : rng.rational(5, 2) + 3;
    }
    check(lp, timed(lp), "random LP " + std::to_string(t));
  }
  // Desk scale: n = 4, 500 constraints.
  for (int t = 0; t < 3; ++t) {
    LinearProgram lp;
    lp.objective = rng.vector(4, 10, 3);
    while (lp.constraints.size() < 500) {
      QVector u = rng.vector(4, 20, 1);
      if (!u.is_zero()) lp.constraints.push_back({u, Rational(rng.between(10, 30)), Sense::LessEqual});
    }
    check(lp, timed(lp), "desk LP " + std::to_string(t));
  }
  if (slowest > 10) v.fail("slowest solve took " + std::to_string(slowest) + " s");
  std::ostringstream s;
  s << optimal << " optimal solves with exact strong duality, " << infeasible
    << " exact Farkas certificates, slowest solve " << slowest << " s";
  v.detail = s.str();
  return v;
}

}  // namespace

int main() {
  const std::vector<Case> corpus = instance_corpus();
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"exactness vs grid oracle", [&] { return criterion1(corpus); }},
      {"optimality certificates", [&] { return criterion2(corpus); }},
      {"dimension bounds", [&] { return criterion3(corpus); }},
      {"symmetric support-set witnesses", criterion4},
      {"simplex uniqueness", criterion5},
      {"simplex+cube sharpness", criterion6},
      {"witness equivalence harness", criterion7},
      {"planar opposing edges", criterion8},
      {"determinism and golden files", criterion9},
      {"LP engine exactness", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << v.detail << ")\n";
    for (const auto& f : v.failures) std::cout << "      " << f << "\n";
    std::cout.flush();
    failed += v.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all 10 criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
