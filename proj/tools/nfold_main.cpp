// Command-line front end: constructibility checks, angle sections, polygon
// construction, polynomial root construction, and single-axiom solving, with
// verified traces exported as JSON and SVG.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nfold/axioms.hpp"
#include "nfold/json_io.hpp"
#include "nfold/lill.hpp"
#include "nfold/numtheory.hpp"
#include "nfold/polygon.hpp"
#include "nfold/section.hpp"
#include "nfold/svg.hpp"
#include "nfold/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPredicateFalse = 2;
constexpr int kExitNumericFailure = 3;

struct GlobalOptions {
  double tol_eps = 1e-9;
  std::string json_path;
  std::string svg_path;

  nfold::Tolerance tolerance() const { return nfold::Tolerance::scaled(tol_eps); }
};

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << bytes;
}

/// Composite result document: report plus trace plus op-specific values.
void write_artifacts(const GlobalOptions& g, const nfold::ConstructionReport& report,
                     const nfold::FoldTrace& trace, const nlohmann::json& extra) {
  if (!g.json_path.empty()) {
    nlohmann::json doc;
    doc["version"] = 1;
    doc["type"] = "result";
    doc["report"] = nlohmann::json::parse(nfold::emit_json(report));
    doc["trace"] = nlohmann::json::parse(nfold::emit_json(trace));
    for (auto it = extra.begin(); it != extra.end(); ++it) doc[it.key()] = it.value();
    write_file(g.json_path, doc.dump(2) + "\n");
  }
  if (!g.svg_path.empty()) write_file(g.svg_path, nfold::emit_svg(trace));
}

std::vector<double> parse_coeff_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size()) throw nfold::invalid_input("bad coefficient: " + item);
    out.push_back(v);
  }
  if (out.size() < 2) throw nfold::invalid_input("--coeffs needs at least two values");
  return out;
}

int run_check(std::int64_t m, std::optional<int> folds) {
  const nfold::TotientReport r = nfold::totient_report(m);
  std::printf("m = %lld: phi(m) = %lld, largest prime factor of phi = %lld\n",
              static_cast<long long>(m), static_cast<long long>(r.phi),
              static_cast<long long>(r.largest_prime));
  std::printf("required n = %d (regular %lld-gon needs at most %d simultaneous folds)\n",
              r.required_n, static_cast<long long>(m), r.required_n);
  if (folds) {
    const bool ok = nfold::check_polygon(m, *folds);
    std::printf("constructible with n = %d: %s\n", *folds, ok ? "yes" : "no");
    if (!ok) return kExitPredicateFalse;
  }
  return kExitOk;
}

int run_msect(const GlobalOptions& g, double angle_deg, std::int64_t parts) {
  const auto tol = g.tolerance();
  const double theta = angle_deg * M_PI / 180.0;
  const nfold::MSectResult r = nfold::m_sect(theta, parts, tol);
  const nfold::VerificationReport v = nfold::verify(r.trace, tol);

  nfold::ConstructionReport report;
  report.kind = "msect";
  report.values = {{"angle_in_deg", angle_deg},
                   {"parts", static_cast<double>(parts)},
                   {"angle_out_deg", r.angle * 180.0 / M_PI}};
  report.fold_width_claimed = r.plan.required_n;
  report.fold_width_used = r.trace.fold_width();
  report.verified = v.ok;
  report.max_residual = v.max_residual;

  std::printf("%g deg / %lld = %.12g deg (fold width %d, sufficient n = %d)\n", angle_deg,
              static_cast<long long>(parts), report.values[2].second,
              report.fold_width_used, r.plan.required_n);
  std::printf("verification: %s (max residual %.3g)\n", v.ok ? "ok" : "FAILED",
              v.max_residual);
  write_artifacts(g, report, r.trace, {});
  return v.ok ? kExitOk : kExitNumericFailure;
}

int run_polygon(const GlobalOptions& g, std::int64_t m, std::optional<int> folds) {
  const auto tol = g.tolerance();
  if (folds) {
    const auto [feasible, totient] = nfold::check_polygon_report(m, *folds);
    if (!feasible) {
      std::printf("regular %lld-gon is not guaranteed with n = %d (needs n = %d)\n",
                  static_cast<long long>(m), *folds, totient.required_n);
      return kExitPredicateFalse;
    }
  }
  const nfold::PolygonResult r = nfold::build_polygon(m, tol);
  const nfold::VerificationReport v = nfold::verify(r.trace, tol);

  nfold::ConstructionReport report;
  report.kind = "polygon";
  report.values = {{"m", static_cast<double>(m)},
                   {"vertex0_x", r.vertices[0].x},
                   {"vertex0_y", r.vertices[0].y}};
  report.fold_width_claimed = r.report.required_n;
  report.fold_width_used = r.fold_width;
  report.verified = v.ok;
  report.max_residual = v.max_residual;

  std::printf("regular %lld-gon: %zu vertices, fold width %d (sufficient n = %d)\n",
              static_cast<long long>(m), r.vertices.size(), r.fold_width,
              r.report.required_n);
  std::printf("verification: %s (max residual %.3g over %zu steps)\n",
              v.ok ? "ok" : "FAILED", v.max_residual, r.trace.steps.size());

  nlohmann::json extra;
  extra["vertices"] = nlohmann::json::array();
  for (const auto& p : r.vertices) extra["vertices"].push_back({p.x, p.y});
  write_artifacts(g, report, r.trace, extra);
  return v.ok ? kExitOk : kExitNumericFailure;
}

int run_solve(const GlobalOptions& g, const std::string& coeff_list) {
  const auto tol = g.tolerance();
  const nfold::Polynomial poly(parse_coeff_list(coeff_list));
  const auto solutions = nfold::solve_real_roots(poly, tol);
  const int budget = nfold::fold_budget(poly.degree());
  std::printf("degree %d, fold budget %d (%d simultaneous folds per root)\n", poly.degree(),
              budget, budget);
  if (solutions.empty()) {
    std::printf("no real roots in the searchable window\n");
    return kExitOk;
  }

  const nfold::LillPath path = nfold::build_lill_path(poly);
  nfold::TraceBuilder builder;
  bool all_ok = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const auto& s = solutions[i];
    std::printf("root %zu: % .17g (theta % .17g rad, residual %.3g, %zu folds)\n", i,
                s.root, s.theta, s.residual, s.fold_lines.size());
    nfold::append_lill_step(builder, path, s, "x" + std::to_string(i) + ".");
  }
  const nfold::FoldTrace trace = builder.trace();
  const nfold::VerificationReport v = nfold::verify(trace, tol);
  all_ok = v.ok;
  worst = v.max_residual;
  std::printf("verification: %s (max residual %.3g)\n", all_ok ? "ok" : "FAILED", worst);

  nfold::ConstructionReport report;
  report.kind = "solve";
  for (std::size_t i = 0; i < solutions.size(); ++i)
    report.values.emplace_back("root" + std::to_string(i), solutions[i].root);
  report.fold_width_claimed = budget;
  report.fold_width_used = trace.fold_width();
  report.verified = all_ok;
  report.max_residual = worst;
  write_artifacts(g, report, trace, {});
  return all_ok ? kExitOk : kExitNumericFailure;
}

nfold::AxiomInstance load_instance(int op_id, const std::string& instance_path,
                                   const std::vector<std::string>& point_args,
                                   const std::vector<std::string>& line_args) {
  nfold::AxiomInstance inst;
  inst.op_id = op_id;
  if (!instance_path.empty()) {
    std::ifstream in(instance_path);
    if (!in) throw nfold::invalid_input("cannot read instance file: " + instance_path);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded()) throw nfold::schema_error("instance file is not valid JSON");
    if (j.contains("op")) inst.op_id = j["op"].get<int>();
    for (const auto& p : j.value("points", nlohmann::json::array()))
      inst.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    for (const auto& l : j.value("lines", nlohmann::json::array()))
      inst.lines.push_back(nfold::make_line(l.at(0).get<double>(), l.at(1).get<double>(),
                                            l.at(2).get<double>()));
    return inst;
  }
  for (const auto& s : point_args) {
    double x, y;
    if (std::sscanf(s.c_str(), "%lf,%lf", &x, &y) != 2)
      throw nfold::invalid_input("bad --point, expected x,y: " + s);
    inst.points.push_back({x, y});
  }
  for (const auto& s : line_args) {
    double a, b, c;
    if (std::sscanf(s.c_str(), "%lf,%lf,%lf", &a, &b, &c) != 3)
      throw nfold::invalid_input("bad --line, expected a,b,c: " + s);
    inst.lines.push_back(nfold::make_line(a, b, c));
  }
  return inst;
}

int run_axiom(const GlobalOptions& g, const nfold::AxiomInstance& inst) {
  const auto tol = g.tolerance();
  const nfold::AxiomSolution sol = nfold::solve_axiom(inst, tol);
  switch (sol.multiplicity_class) {
    case nfold::Multiplicity::infinite:
      std::printf("op %d: infinite family of folds\n", inst.op_id);
      return kExitOk;
    case nfold::Multiplicity::empty:
      std::printf("op %d: no admissible fold\n", inst.op_id);
      return kExitOk;
    case nfold::Multiplicity::finite:
      break;
  }
  for (std::size_t i = 0; i < sol.folds.size(); ++i) {
    const auto& f = sol.folds[i];
    std::printf("fold %zu: %.17g*x + %.17g*y + %.17g = 0 (residual %.3g)\n", i, f.a, f.b,
                f.c, nfold::axiom_residual(inst, f));
  }
  const nfold::FoldTrace trace = nfold::axiom_solution_trace(inst, sol);
  const nfold::VerificationReport v = nfold::verify(trace, tol);
  std::printf("verification: %s (max residual %.3g)\n", v.ok ? "ok" : "FAILED",
              v.max_residual);

  nfold::ConstructionReport report;
  report.kind = "axiom";
  report.values = {{"op", static_cast<double>(inst.op_id)},
                   {"folds", static_cast<double>(sol.folds.size())}};
  report.fold_width_claimed = 1;
  report.fold_width_used = trace.fold_width();
  report.verified = v.ok;
  report.max_residual = v.max_residual;
  write_artifacts(g, report, trace, {});
  return v.ok ? kExitOk : kExitNumericFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"n-fold origami construction engine"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--tol", g.tol_eps, "incidence tolerance (eps_root and eps_report scale with it)")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", g.json_path, "write the result document (report + trace) to PATH");
  app.add_option("--svg", g.svg_path, "write an SVG diagram of the trace to PATH");

  auto* check = app.add_subcommand("check", "polygon constructibility predicate");
  std::int64_t check_m = 0;
  int check_folds = -1;
  check->add_option("M", check_m, "number of polygon sides")->required();
  check->add_option("--folds", check_folds, "simultaneous-fold budget n");

  auto* msect = app.add_subcommand("msect", "divide an angle into m equal parts");
  double msect_deg = 0.0;
  std::int64_t msect_parts = 0;
  msect->add_option("--angle-deg", msect_deg, "angle in degrees")->required();
  msect->add_option("--parts", msect_parts, "number of parts m >= 2")->required();

  auto* polygon = app.add_subcommand("polygon", "construct the regular m-gon");
  std::int64_t poly_m = 0;
  int poly_folds = -1;
  polygon->add_option("M", poly_m, "number of sides")->required();
  polygon->add_option("--folds", poly_folds, "refuse if the budget n is insufficient");

  auto* solve = app.add_subcommand("solve", "construct real polynomial roots");
  std::string solve_coeffs;
  solve->add_option("--coeffs", solve_coeffs, "a_m,...,a_0 highest degree first")->required();

  auto* axiom = app.add_subcommand("axiom", "solve one single-fold operation");
  int axiom_id = 0;
  std::string axiom_instance;
  std::vector<std::string> axiom_points, axiom_lines;
  axiom->add_option("ID", axiom_id, "operation number 1..8")->required();
  axiom->add_option("--instance", axiom_instance, "JSON instance file {op, points, lines}");
  axiom->add_option("--point", axiom_points, "point as x,y (repeatable, in operation order)");
  axiom->add_option("--line", axiom_lines, "line as a,b,c (repeatable, in operation order)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Normalize every usage problem to exit code 1; --help stays 0.
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed())
      return run_check(check_m,
                       check_folds >= 0 ? std::optional<int>(check_folds) : std::nullopt);
    if (msect->parsed()) return run_msect(g, msect_deg, msect_parts);
    if (polygon->parsed())
      return run_polygon(g, poly_m,
                         poly_folds >= 0 ? std::optional<int>(poly_folds) : std::nullopt);
    if (solve->parsed()) return run_solve(g, solve_coeffs);
    if (axiom->parsed())
      return run_axiom(g, load_instance(axiom_id, axiom_instance, axiom_points, axiom_lines));
  } catch (const nfold::numeric_failure& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return kExitNumericFailure;
  } catch (const nfold::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
