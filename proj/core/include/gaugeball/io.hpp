#pragma once

#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/polytope.hpp"

namespace gaugeball {

/// std::map-backed, so object keys always serialize in alphabetical order.
using Json = nlohmann::json;

/// Rationals are strings "p" or "p/q"; JSON integers are accepted too.
/// Every parse error is an InputError whose message starts with the field path.
Rational rational_from_json(const Json& j, const std::string& field);
QVector vector_from_json(const Json& j, const std::string& field, std::optional<std::size_t> dim = std::nullopt);

Json to_json(const Rational& q);
Json to_json(const QVector& v);
Json to_json(const HPolytope& p);

/// {"n", "constraints": [{"u", "b"}]}
HPolytope hpolytope_from_json(const Json& j, const std::string& field);
/// {"vertices": [[...]]}
VPolytope vpolytope_from_json(const Json& j, const std::string& field);
/// Either form; a V-description goes through vrep_to_hrep.
GaugeBody gauge_from_json(const Json& j, const std::string& field);

struct Instance {
  std::string name;
  GaugeBody gauge;
  PointSet points;
};

/// {"n", "gauge", "points", optional "name"}
Instance instance_from_json(const Json& j);
Json to_json(const Instance& inst);
Json gauge_to_json(const GaugeBody& c);

Json to_json(const CircumResult& res);
Json to_json(const Certificate& cert);
Json to_json(const WitnessK& w);
Json to_json(const Face& f);
/// Violations carry the full instance (gauge plus points) so each one can be
/// re-run on its own.
Json to_json(const CheckReport& report, const GaugeBody& c);
Json face_counts_to_json(const std::map<int, std::size_t>& counts);

/// Throws InputError if the file is missing or not JSON.
Json read_json_file(const std::string& path);
/// Two-space indentation plus trailing newline.
std::string dump(const Json& j);

}  // namespace gaugeball
