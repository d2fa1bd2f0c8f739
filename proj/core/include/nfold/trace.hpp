#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nfold/geometry.hpp"

namespace nfold {

enum class StepKind { axiom, lill_bundle, projection, rotation, edge };

const char* to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

/// One declared incidence, re-derived from scratch by the verifier.
///
///   point_on_line:       point `subject` lies on line `object`
///   point_maps_to_point: fold #`fold_index` maps point `subject` to `object`
///   line_maps_to_line:   fold #`fold_index` maps line `subject` to `object`
struct Constraint {
  enum class Kind { point_on_line, point_maps_to_point, line_maps_to_line };
  Kind kind = Kind::point_on_line;
  std::string subject;
  std::string object;
  int fold_index = -1;  // within the owning step; -1 for point_on_line

  friend bool operator==(const Constraint&, const Constraint&) = default;

  std::string describe() const;
};

/// One elementary operation of a construction: a bundle of simultaneous fold
/// lines plus the incidences they satisfy and the points/lines they define.
/// Fold k of a step named `name` is addressable as "<name>.f<k>".
struct FoldStep {
  StepKind kind = StepKind::axiom;
  int axiom_id = 0;  // Table row when kind == axiom, otherwise 0
  std::string name;
  std::vector<Line> folds;
  std::vector<Constraint> constraints;
  std::vector<std::pair<std::string, Point>> derived_points;
  std::vector<std::pair<std::string, Line>> derived_lines;

  friend bool operator==(const FoldStep&, const FoldStep&) = default;
};

struct FoldTrace {
  std::vector<std::pair<std::string, Point>> input_points;
  std::vector<std::pair<std::string, Line>> input_lines;
  std::vector<FoldStep> steps;

  /// Maximum number of simultaneous folds over all steps; 0 for an empty trace.
  int fold_width() const;

  friend bool operator==(const FoldTrace&, const FoldTrace&) = default;
};

/// Name of fold k within a step.
std::string fold_ref(const std::string& step_name, int k);

/// Incremental trace assembly with unique-name bookkeeping.  Producers
/// reserve a step name first so constraints can reference the step's own
/// folds, then commit the finished step.
class TraceBuilder {
 public:
  std::string add_input_point(const std::string& name, Point p);
  std::string add_input_line(const std::string& name, const Line& l);
  std::string fresh_step_name(const std::string& base);
  std::string fresh_point_name(const std::string& base);
  std::string fresh_line_name(const std::string& base);
  void add_step(FoldStep step);

  const FoldTrace& trace() const { return trace_; }
  FoldTrace take() { return std::move(trace_); }

 private:
  std::string uniquify(const std::string& base, std::vector<std::string>& taken);
  FoldTrace trace_;
  std::vector<std::string> point_names_;
  std::vector<std::string> line_names_;
  std::vector<std::string> step_names_;
};

/// Summary of one CLI-level construction: result values, the fold budget the
/// theory claims versus what the trace used, and the verification outcome.
struct ConstructionReport {
  std::string kind;
  std::vector<std::pair<std::string, double>> values;
  int fold_width_claimed = 0;
  int fold_width_used = 0;
  bool verified = false;
  double max_residual = 0.0;

  friend bool operator==(const ConstructionReport&, const ConstructionReport&) = default;
};

}  // namespace nfold
