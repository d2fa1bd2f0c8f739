#include "nfold/verify.hpp"

#include <cmath>
#include <map>

#include "nfold/errors.hpp"

namespace nfold {

namespace {

struct Registry {
  std::map<std::string, Point> points;
  std::map<std::string, Line> lines;

  void add_point(const std::string& name, Point p) {
    if (!points.emplace(name, p).second)
      throw trace_error("duplicate point name: " + name);
  }
  void add_line(const std::string& name, const Line& l) {
    if (!lines.emplace(name, l).second)
      throw trace_error("duplicate line name: " + name);
  }
  Point point(const std::string& name) const {
    auto it = points.find(name);
    if (it == points.end()) throw trace_error("dangling point name: " + name);
    return it->second;
  }
  Line line(const std::string& name) const {
    auto it = lines.find(name);
    if (it == lines.end()) throw trace_error("dangling line name: " + name);
    return it->second;
  }
};

}  // namespace

VerificationReport verify(const FoldTrace& trace, const Tolerance& tol) {
  Registry reg;
  for (const auto& [name, p] : trace.input_points) reg.add_point(name, p);
  for (const auto& [name, l] : trace.input_lines) reg.add_line(name, l);

  VerificationReport report;
  report.max_residual = 0.0;
  for (int si = 0; si < static_cast<int>(trace.steps.size()); ++si) {
    const FoldStep& step = trace.steps[si];
    if (step.folds.empty()) throw trace_error("step without folds: " + step.name);
    for (int k = 0; k < static_cast<int>(step.folds.size()); ++k)
      reg.add_line(fold_ref(step.name, k), step.folds[k]);
    for (const auto& [name, p] : step.derived_points) reg.add_point(name, p);
    for (const auto& [name, l] : step.derived_lines) reg.add_line(name, l);

    for (const Constraint& c : step.constraints) {
      // Residuals are relative to the coordinate scale of the entities
      // involved; for unit-scale constructions this is plain distance.  Far
      // pivots of high-degree Lill bundles would otherwise drown in their own
      // representation noise.
      double residual = 0.0;
      switch (c.kind) {
        case Constraint::Kind::point_on_line: {
          const Point p = reg.point(c.subject);
          residual = std::abs(reg.line(c.object).eval(p)) / std::max(1.0, p.norm());
          break;
        }
        case Constraint::Kind::point_maps_to_point: {
          if (c.fold_index < 0 || c.fold_index >= static_cast<int>(step.folds.size()))
            throw trace_error("fold index out of range in step " + step.name);
          const Point src = reg.point(c.subject);
          const Point dst = reg.point(c.object);
          const Point image = reflect_point(src, step.folds[c.fold_index]);
          residual = distance(image, dst) / std::max({1.0, src.norm(), dst.norm()});
          break;
        }
        case Constraint::Kind::line_maps_to_line: {
          if (c.fold_index < 0 || c.fold_index >= static_cast<int>(step.folds.size()))
            throw trace_error("fold index out of range in step " + step.name);
          const Line image = reflect_line(reg.line(c.subject), step.folds[c.fold_index]);
          const double scale =
              std::max(1.0, image.anchor().norm() + 1.0);
          residual = line_residual(image, reg.line(c.object)) / scale;
          break;
        }
      }
      if (residual > report.max_residual) report.max_residual = residual;
      if (residual > tol.eps_incidence)
        report.failures.push_back({si, c.describe(), residual});
    }
  }
  report.ok = report.max_residual <= tol.eps_incidence;
  return report;
}

}  // namespace nfold
