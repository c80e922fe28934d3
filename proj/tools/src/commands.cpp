#include "gaugeball_cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "gaugeball/circumcenter.hpp"
#include "gaugeball/errors.hpp"
#include "gaugeball/io.hpp"
#include "gaugeball_cli/svg.hpp"

namespace gaugeball::cli {

namespace {

struct Outcome {
  int code = kOk;
  std::string payload;
};

Instance load_instance(const CommandOptions& o) {
  if (o.input.empty()) throw InputError("--input: missing");
  return instance_from_json(read_json_file(o.input));
}

// Gauge file, V-description file or a whole instance (its "gauge" member).
GaugeBody load_gauge(const CommandOptions& o) {
  if (o.input.empty()) throw InputError("--input: missing");
  const Json j = read_json_file(o.input);
  if (j.is_object() && j.contains("gauge")) return instance_from_json(j).gauge;
  return gauge_from_json(j, "gauge");
}

HarnessOptions harness(const CommandOptions& o) {
  if (o.trials < 0) throw InputError("--trials: must be >= 0");
  return {o.trials, o.seed, o.threads};
}

Outcome cmd_radius(const CommandOptions& o) {
  const Instance inst = load_instance(o);
  return {kOk, dump(to_json(circumradius(inst.points, inst.gauge)))};
}

Outcome cmd_certify(const CommandOptions& o) {
  const Instance inst = load_instance(o);
  const CircumResult res = circumradius(inst.points, inst.gauge);
  if (res.radius == 0) {
    return {kOk, dump(Json{{"center", to_json(res.center)},
                           {"radius", to_json(res.radius)},
                           {"status", "singleton, no certificate"},
                           {"terms", Json::array()}})};
  }
  const Certificate cert = extract_certificate(inst.points, inst.gauge, res);
  Json j = to_json(cert);
  const auto err = verify_certificate(inst.points, inst.gauge, cert);
  j["status"] = err ? "invalid: " + *err : std::string("verified");
  return {err ? kViolation : kOk, dump(j)};
}

Outcome cmd_witness(const CommandOptions& o) {
  const GaugeBody c = load_gauge(o);
  const auto w = witness_search(c, o.k);
  return {kOk, dump(Json{{"k", o.k}, {"witness", w ? to_json(*w) : Json("none")}})};
}

Outcome cmd_check(const CommandOptions& o) {
  const GaugeBody c = load_gauge(o);
  const HarnessOptions opt = harness(o);
  CheckReport report;
  if (o.theorem == "2") {
    report = check_witness_equivalence(c, o.k, opt);
  } else if (o.theorem == "1" || o.theorem == "3") {
    if (!c.symmetric()) throw InputError("--theorem " + o.theorem + ": gauge is not centrally symmetric");
    report = check_symmetric_dimension(c, o.theorem == "1" ? 0 : o.k, opt);
  } else if (o.theorem == "corollary") {
    if (c.dim() != 2) throw InputError("--theorem corollary: gauge must be planar");
    report = check_planar_uniqueness(c, opt);
  } else {
    throw InputError("--theorem: expected 1, 2, 3 or corollary, got '" + o.theorem + "'");
  }
  return {report.ok() ? kOk : kViolation, dump(to_json(report, c))};
}

Outcome cmd_render(const CommandOptions& o) {
  const Instance inst = load_instance(o);
  if (inst.gauge.dim() != 2) throw InputError("n: render needs n = 2, got " + std::to_string(inst.gauge.dim()));
  return {kOk, render_svg(inst.points, inst.gauge)};
}

Outcome cmd_faces(const CommandOptions& o) {
  const GaugeBody c = load_gauge(o);
  const auto faces = enumerate_faces(c, static_cast<int>(c.dim()));
  std::map<int, std::size_t> counts;
  Json list = Json::array();
  for (const auto& f : faces) {
    ++counts[f.dim];
    list.push_back(to_json(f));
  }
  return {kOk, dump(Json{{"counts", face_counts_to_json(counts)}, {"faces", list}, {"gauge", gauge_to_json(c)}})};
}

Outcome dispatch(const std::string& command, const CommandOptions& o) {
  if (command == "radius") return cmd_radius(o);
  if (command == "certify") return cmd_certify(o);
  if (command == "witness") return cmd_witness(o);
  if (command == "check") return cmd_check(o);
  if (command == "render") return cmd_render(o);
  if (command == "faces") return cmd_faces(o);
  throw InputError("unknown command '" + command + "'");
}

}  // namespace

int run_command_to_string(const std::string& command, const CommandOptions& options, std::string& payload,
                          std::ostream& err) {
  try {
    Outcome r = dispatch(command, options);
    payload = std::move(r.payload);
    return r.code;
  } catch (const InputError& e) {
    err << "gaugeball " << command << ": " << e.what() << "\n";
  } catch (const UnsupportedDimension& e) {
    err << "gaugeball " << command << ": " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    err << "gaugeball " << command << ": " << e.what() << "\n";
  }
  return kInputError;
}

int run_command(const std::string& command, const CommandOptions& options, std::ostream& out, std::ostream& err) {
  std::string payload;
  const int code = run_command_to_string(command, options, payload, err);
  if (code == kInputError) return code;
  if (options.out.empty()) {
    out << payload;
    return code;
  }
  std::ofstream file(options.out, std::ios::binary);
  if (!file || !(file << payload)) {
    err << "gaugeball " << command << ": --out: cannot write " << options.out << "\n";
    return kInputError;
  }
  return code;
}

}  // namespace gaugeball::cli
