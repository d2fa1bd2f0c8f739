#include "nfold/trace.hpp"

#include <algorithm>

#include "nfold/errors.hpp"

namespace nfold {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::axiom: return "axiom";
    case StepKind::lill_bundle: return "lill_bundle";
    case StepKind::projection: return "projection";
    case StepKind::rotation: return "rotation";
    case StepKind::edge: return "edge";
  }
  return "axiom";
}

StepKind step_kind_from_string(const std::string& s) {
  if (s == "axiom") return StepKind::axiom;
  if (s == "lill_bundle") return StepKind::lill_bundle;
  if (s == "projection") return StepKind::projection;
  if (s == "rotation") return StepKind::rotation;
  if (s == "edge") return StepKind::edge;
  throw schema_error("unknown step kind: " + s);
}

std::string Constraint::describe() const {
  switch (kind) {
    case Kind::point_on_line:
      return subject + " on " + object;
    case Kind::point_maps_to_point:
      return subject + " -> " + object + " via fold " + std::to_string(fold_index);
    case Kind::line_maps_to_line:
      return subject + " => " + object + " via fold " + std::to_string(fold_index);
  }
  return {};
}

int FoldTrace::fold_width() const {
  int w = 0;
  for (const FoldStep& s : steps) w = std::max(w, static_cast<int>(s.folds.size()));
  return w;
}

std::string fold_ref(const std::string& step_name, int k) {
  return step_name + ".f" + std::to_string(k);
}

std::string TraceBuilder::uniquify(const std::string& base, std::vector<std::string>& taken) {
  std::string name = base;
  int suffix = 2;
  while (std::find(taken.begin(), taken.end(), name) != taken.end())
    name = base + "_" + std::to_string(suffix++);
  taken.push_back(name);
  return name;
}

std::string TraceBuilder::add_input_point(const std::string& name, Point p) {
  if (!p.finite()) throw invalid_input("input point not finite: " + name);
  const std::string actual = uniquify(name, point_names_);
  trace_.input_points.emplace_back(actual, p);
  return actual;
}

std::string TraceBuilder::add_input_line(const std::string& name, const Line& l) {
  const std::string actual = uniquify(name, line_names_);
  trace_.input_lines.emplace_back(actual, l);
  return actual;
}

std::string TraceBuilder::fresh_step_name(const std::string& base) {
  return uniquify(base, step_names_);
}

std::string TraceBuilder::fresh_point_name(const std::string& base) {
  return uniquify(base, point_names_);
}

std::string TraceBuilder::fresh_line_name(const std::string& base) {
  return uniquify(base, line_names_);
}

void TraceBuilder::add_step(FoldStep step) {
  if (step.folds.empty()) throw trace_error("fold step without folds: " + step.name);
  for (int k = 0; k < static_cast<int>(step.folds.size()); ++k)
    line_names_.push_back(fold_ref(step.name, k));
  trace_.steps.push_back(std::move(step));
}

}  // namespace nfold
