#include "gaugeball/io.hpp"

#include <fstream>
#include <sstream>

#include "gaugeball/errors.hpp"

namespace gaugeball {

namespace {

const Json& member(const Json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(field + "." + key + ": missing");
  return *it;
}

const Json& array_of(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": expected an array");
  return j;
}

std::size_t dimension_from_json(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(field + ": expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

PointSet points_from_json(const Json& j, const std::string& field, std::size_t dim) {
  PointSet pts;
  const Json& arr = array_of(j, field);
  for (std::size_t i = 0; i < arr.size(); ++i) pts.push_back(vector_from_json(arr[i], field + "[" + std::to_string(i) + "]", dim));
  return pts;
}

Json points_to_json(const PointSet& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

Json indices_to_json(const std::vector<std::size_t>& idx) {
  Json arr = Json::array();
  for (auto i : idx) arr.push_back(i);
  return arr;
}

}  // namespace

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_string()) return parse_rational(j.get<std::string>(), field);
  if (j.is_number_integer()) return parse_rational(j.dump(), field);
  throw InputError(field + ": expected a rational string \"p\" or \"p/q\"");
}

QVector vector_from_json(const Json& j, const std::string& field, std::optional<std::size_t> dim) {
  const Json& arr = array_of(j, field);
  if (dim && arr.size() != *dim) {
    throw InputError(field + ": expected " + std::to_string(*dim) + " coordinates, got " + std::to_string(arr.size()));
  }
  QVector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v[i] = rational_from_json(arr[i], field + "[" + std::to_string(i) + "]");
  return v;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_string(x));
  return arr;
}

Json to_json(const HPolytope& p) {
  Json cons = Json::array();
  for (const auto& h : p.constraints()) cons.push_back({{"b", to_json(h.offset)}, {"u", to_json(h.normal)}});
  return {{"constraints", cons}, {"n", p.dim()}};
}

HPolytope hpolytope_from_json(const Json& j, const std::string& field) {
  const std::size_t n = dimension_from_json(member(j, "n", field), field + ".n");
  const Json& cons = array_of(member(j, "constraints", field), field + ".constraints");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const std::string at = field + ".constraints[" + std::to_string(i) + "]";
    QVector u = vector_from_json(member(cons[i], "u", at), at + ".u", n);
    if (u.is_zero()) throw InputError(at + ".u: zero normal");
    hs.push_back({std::move(u), rational_from_json(member(cons[i], "b", at), at + ".b")});
  }
  return HPolytope(n, std::move(hs));
}

VPolytope vpolytope_from_json(const Json& j, const std::string& field) {
  const Json& arr = array_of(member(j, "vertices", field), field + ".vertices");
  if (arr.empty()) throw InputError(field + ".vertices: empty");
  const std::size_t n = array_of(arr[0], field + ".vertices[0]").size();
  if (n == 0) throw InputError(field + ".vertices[0]: empty vector");
  return VPolytope{points_from_json(arr, field + ".vertices", n)};
}

GaugeBody gauge_from_json(const Json& j, const std::string& field) {
  if (j.is_object() && j.contains("vertices")) {
    VPolytope v = vpolytope_from_json(j, field);
    try {
      return GaugeBody(vrep_to_hrep(VPolytope::from_points(std::move(v.vertices))));
    } catch (const std::exception& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  HPolytope h = hpolytope_from_json(j, field);
  const Json& cons = j.at("constraints");
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (rational_from_json(cons[i].at("b"), "") <= 0) {
      throw InputError(field + ".constraints[" + std::to_string(i) + "].b: must be > 0 (origin interior)");
    }
  }
  try {
    return GaugeBody(std::move(h));
  } catch (const InputError& e) {
    throw InputError(field + ": " + e.what());
  }
}

Instance instance_from_json(const Json& j) {
  const std::size_t n = dimension_from_json(member(j, "n", "instance"), "n");
  Instance inst{"", gauge_from_json(member(j, "gauge", "instance"), "gauge"), {}};
  if (inst.gauge.dim() != n) {
    throw InputError("gauge.n: gauge has dimension " + std::to_string(inst.gauge.dim()) + ", instance has n = " +
                     std::to_string(n));
  }
  inst.points = points_from_json(member(j, "points", "instance"), "points", n);
  if (inst.points.empty()) throw InputError("points: empty point set");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("name: expected a string");
    inst.name = j["name"].get<std::string>();
  }
  return inst;
}

Json gauge_to_json(const GaugeBody& c) { return to_json(c.body()); }

Json to_json(const Instance& inst) {
  Json j = {{"gauge", gauge_to_json(inst.gauge)}, {"n", inst.gauge.dim()}, {"points", points_to_json(inst.points)}};
  if (!inst.name.empty()) j["name"] = inst.name;
  return j;
}

Json to_json(const CircumResult& res) {
  return {{"center", to_json(res.center)},
          {"chebyshev", to_json(res.chebyshev)},
          {"dim_cc", res.dim_cc},
          {"radius", to_json(res.radius)}};
}

Json to_json(const Certificate& cert) {
  Json terms = Json::array();
  for (const auto& t : cert.terms) {
    terms.push_back({{"normal", to_json(t.normal)},
                     {"point_index", t.point_index},
                     {"touch", to_json(t.touch)},
                     {"weight", to_json(t.weight)}});
  }
  return {{"center", to_json(cert.center)}, {"radius", to_json(cert.radius)}, {"terms", terms}};
}

Json to_json(const Face& f) {
  return {{"active", indices_to_json(f.active)}, {"dim", f.dim}, {"relint", to_json(f.relint)}};
}

Json to_json(const WitnessK& w) {
  Json faces = Json::array();
  for (const auto& p : w.faces) {
    faces.push_back({{"inner", indices_to_json(p.inner.active)}, {"outer", indices_to_json(p.outer.active)}});
  }
  Json weights = Json::array();
  for (const auto& q : w.weights) weights.push_back(to_json(q));
  return {{"faces", faces},
          {"flat_body", to_json(w.flat_body)},
          {"flat_dim", w.flat_dim},
          {"k", w.k},
          {"normals", points_to_json(w.normals)},
          {"points", points_to_json(w.points)},
          {"validated_dim_cc", w.validated_dim_cc},
          {"validated_radius", to_json(w.validated_radius)},
          {"weights", weights}};
}

Json to_json(const CheckReport& report, const GaugeBody& c) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json item = {{"k", v.k}, {"kind", v.kind}, {"message", v.message}};
    if (!v.points.empty()) item["instance"] = to_json(Instance{"", c, v.points});
    violations.push_back(std::move(item));
  }
  return {{"check", report.check},
          {"k", report.k},
          {"ok", report.ok()},
          {"samples_above_k", report.samples_above_k},
          {"seed", report.seed},
          {"trials", report.trials},
          {"violations", violations},
          {"witness", report.witness ? to_json(*report.witness) : Json(nullptr)},
          {"witness_found", report.witness_found},
          {"witness_valid", report.witness_valid}};
}

Json face_counts_to_json(const std::map<int, std::size_t>& counts) {
  Json j = Json::object();
  for (const auto& [dim, count] : counts) j[std::to_string(dim)] = count;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": invalid JSON (" + e.what() + ")");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gaugeball
