#include "nfold/json_io.hpp"

#include <json.hpp>

#include "nfold/errors.hpp"

namespace nfold {

namespace {

using nlohmann::json;

// Lines and points are stored as raw coordinate arrays and reconstructed
// bit-for-bit; renormalizing on load would break round-trip equality.
json line_json(const Line& l) { return json::array({l.a, l.b, l.c}); }

const char* constraint_kind_name(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::point_on_line: return "point_on_line";
    case Constraint::Kind::point_maps_to_point: return "point_maps_to_point";
    case Constraint::Kind::line_maps_to_line: return "line_maps_to_line";
  }
  return "point_on_line";
}

Constraint::Kind constraint_kind_from(const std::string& s) {
  if (s == "point_on_line") return Constraint::Kind::point_on_line;
  if (s == "point_maps_to_point") return Constraint::Kind::point_maps_to_point;
  if (s == "line_maps_to_line") return Constraint::Kind::line_maps_to_line;
  throw schema_error("unknown constraint kind: " + s);
}

json trace_to_json(const FoldTrace& trace) {
  json j;
  j["version"] = 1;
  j["type"] = "trace";
  json inputs;
  inputs["points"] = json::array();
  for (const auto& [name, p] : trace.input_points)
    inputs["points"].push_back(json::array({name, p.x, p.y}));
  inputs["lines"] = json::array();
  for (const auto& [name, l] : trace.input_lines)
    inputs["lines"].push_back(json::array({name, l.a, l.b, l.c}));
  j["inputs"] = std::move(inputs);
  j["steps"] = json::array();
  for (const FoldStep& s : trace.steps) {
    json js;
    js["kind"] = to_string(s.kind);
    if (s.kind == StepKind::axiom) js["axiom"] = s.axiom_id;
    js["name"] = s.name;
    js["folds"] = json::array();
    for (const Line& f : s.folds) js["folds"].push_back(line_json(f));
    js["constraints"] = json::array();
    for (const Constraint& c : s.constraints) {
      json jc;
      jc["kind"] = constraint_kind_name(c.kind);
      jc["subject"] = c.subject;
      jc["object"] = c.object;
      if (c.kind != Constraint::Kind::point_on_line) jc["fold"] = c.fold_index;
      js["constraints"].push_back(std::move(jc));
    }
    js["derived_points"] = json::array();
    for (const auto& [name, p] : s.derived_points)
      js["derived_points"].push_back(json::array({name, p.x, p.y}));
    js["derived_lines"] = json::array();
    for (const auto& [name, l] : s.derived_lines)
      js["derived_lines"].push_back(json::array({name, l.a, l.b, l.c}));
    j["steps"].push_back(std::move(js));
  }
  return j;
}

}  // namespace

std::string emit_json(const FoldTrace& trace) { return trace_to_json(trace).dump(2); }

std::string emit_json(const ConstructionReport& report) {
  json j;
  j["version"] = 1;
  j["type"] = "report";
  j["kind"] = report.kind;
  j["values"] = json::array();
  for (const auto& [name, v] : report.values) j["values"].push_back(json::array({name, v}));
  j["fold_width_claimed"] = report.fold_width_claimed;
  j["fold_width_used"] = report.fold_width_used;
  j["verified"] = report.verified;
  j["max_residual"] = report.max_residual;
  return j.dump(2);
}

FoldTrace load_json(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("trace JSON parse error: ") + e.what());
  }
  if (!j.contains("version")) throw schema_error("trace JSON missing \"version\"");
  if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
    throw schema_error("unsupported trace JSON version");
  if (!j.contains("type") || j["type"] != "trace")
    throw schema_error("document is not a trace");

  try {
    FoldTrace trace;
    const json& inputs = j.at("inputs");
    for (const json& e : inputs.at("points"))
      trace.input_points.emplace_back(e.at(0).get<std::string>(),
                                      Point{e.at(1).get<double>(), e.at(2).get<double>()});
    for (const json& e : inputs.at("lines"))
      trace.input_lines.emplace_back(
          e.at(0).get<std::string>(),
          Line{e.at(1).get<double>(), e.at(2).get<double>(), e.at(3).get<double>()});
    for (const json& js : j.at("steps")) {
      FoldStep s;
      s.kind = step_kind_from_string(js.at("kind").get<std::string>());
      s.axiom_id = js.value("axiom", 0);
      s.name = js.at("name").get<std::string>();
      for (const json& f : js.at("folds"))
        s.folds.push_back(Line{f.at(0).get<double>(), f.at(1).get<double>(),
                               f.at(2).get<double>()});
      for (const json& jc : js.at("constraints")) {
        Constraint c;
        c.kind = constraint_kind_from(jc.at("kind").get<std::string>());
        c.subject = jc.at("subject").get<std::string>();
        c.object = jc.at("object").get<std::string>();
        c.fold_index = jc.value("fold", -1);
        s.constraints.push_back(std::move(c));
      }
      for (const json& e : js.at("derived_points"))
        s.derived_points.emplace_back(e.at(0).get<std::string>(),
                                      Point{e.at(1).get<double>(), e.at(2).get<double>()});
      for (const json& e : js.at("derived_lines"))
        s.derived_lines.emplace_back(
            e.at(0).get<std::string>(),
            Line{e.at(1).get<double>(), e.at(2).get<double>(), e.at(3).get<double>()});
      trace.steps.push_back(std::move(s));
    }
    return trace;
  } catch (const json::exception& e) {
    throw schema_error(std::string("malformed trace JSON: ") + e.what());
  }
}

}  // namespace nfold
