#include "nfold/section.hpp"

#include <algorithm>
#include <cmath>

#include "nfold/lill.hpp"
#include "nfold/numtheory.hpp"

namespace nfold {

namespace {

constexpr const char* kAxisName = "OQ";

using Frame = detail::FrameNames;

Frame frame_of(TraceBuilder& builder) { return detail::ensure_frame(builder); }

Constraint pol(const std::string& pt, const std::string& ln) {
  return {Constraint::Kind::point_on_line, pt, ln, -1};
}
Constraint maps_pt(const std::string& src, int fold, const std::string& img) {
  return {Constraint::Kind::point_maps_to_point, src, img, fold};
}
Constraint maps_ln(const std::string& src, int fold, const std::string& img) {
  return {Constraint::Kind::line_maps_to_line, src, img, fold};
}

/// Cosine projection of the ray at `theta` (0 < theta <= pi) onto the x-axis:
/// chi_1 aligns the ray with the axis, chi_2 drops the perpendicular through
/// the image of Q.  Returns the name of the constructed point (cos theta, 0).
std::string project_into(TraceBuilder& builder, const std::string& prefix, double theta,
                         const Tolerance& tol) {
  (void)tol;
  const Frame fr = frame_of(builder);
  const Line ell = line_at_angle(theta, {0.0, 0.0});
  const std::string ell_name = builder.add_input_line(prefix + "ell", ell);

  const Line chi1 = line_at_angle(theta / 2.0, {0.0, 0.0});
  const std::string s1 = builder.fresh_step_name(prefix + "proj_align");
  const std::string qp = builder.fresh_point_name(prefix + "Q_img");
  FoldStep step1{StepKind::projection, 0, s1, {chi1}, {}, {}, {}};
  step1.derived_points.emplace_back(qp, reflect_point({1.0, 0.0}, chi1));
  step1.constraints = {maps_ln(ell_name, 0, fr.axis), maps_pt(fr.q, 0, qp)};
  builder.add_step(std::move(step1));

  const Point q_img = reflect_point({1.0, 0.0}, chi1);
  const Line chi2 = perpendicular_through(make_line(0.0, 1.0, 0.0), q_img);
  const std::string s2 = builder.fresh_step_name(prefix + "proj_drop");
  const std::string p_name = builder.fresh_point_name(prefix + "P");
  FoldStep step2{StepKind::projection, 0, s2, {chi2}, {}, {}, {}};
  step2.derived_points.emplace_back(p_name, Point{q_img.x, 0.0});
  step2.constraints = {pol(qp, fold_ref(s2, 0)), maps_ln(fr.axis, 0, fr.axis),
                       pol(p_name, fold_ref(s2, 0)), pol(p_name, fr.axis)};
  builder.add_step(std::move(step2));
  return p_name;
}

}  // namespace

namespace detail {

FrameNames ensure_frame(TraceBuilder& builder) {
  for (const auto& [name, l] : builder.trace().input_lines)
    if (name == kAxisName) return {"O", "Q", kAxisName};
  FrameNames f;
  f.o = builder.add_input_point("O", {0.0, 0.0});
  f.q = builder.add_input_point("Q", {1.0, 0.0});
  f.axis = builder.add_input_line(kAxisName, make_line(0.0, 1.0, 0.0));
  return f;
}

SectionStep unproject_into(TraceBuilder& builder, const std::string& prefix, double x,
                           const Tolerance& tol) {
  if (std::abs(x) > 1.0 + tol.eps_incidence)
    throw invalid_input("unproject_cos: argument outside [-1, 1]");
  x = std::clamp(x, -1.0, 1.0);
  const Frame fr = frame_of(builder);
  const std::string x_name = builder.add_input_point(prefix + "X", {x, 0.0});

  // Perpendicular to the axis through (x, 0).
  const Line vline = make_line(1.0, 0.0, -x);
  const std::string s1 = builder.fresh_step_name(prefix + "unproj_raise");
  FoldStep step1{StepKind::projection, 0, s1, {vline}, {}, {}, {}};
  step1.constraints = {pol(x_name, fold_ref(s1, 0)), maps_ln(fr.axis, 0, fr.axis)};
  builder.add_step(std::move(step1));

  // Fold through O placing Q onto the raised line; positive-y image.
  const double y = std::sqrt(std::max(0.0, 1.0 - x * x));
  const Point q_img{x, y};
  Line fold;
  if (distance(q_img, {1.0, 0.0}) <= tol.eps_incidence) {
    fold = make_line(0.0, 1.0, 0.0);  // Q already on the line; fold along the axis
  } else {
    const Point mid = 0.5 * (q_img + Point{1.0, 0.0});
    fold = make_line(q_img.x - 1.0, q_img.y, -((q_img.x - 1.0) * mid.x + q_img.y * mid.y));
  }
  const std::string s2 = builder.fresh_step_name(prefix + "unproj_fold");
  const std::string qp = builder.fresh_point_name(prefix + "Q_raised");
  const std::string ell_name = builder.fresh_line_name(prefix + "ell_out");
  const Line ell_out = reflect_line(make_line(0.0, 1.0, 0.0), fold);
  FoldStep step2{StepKind::projection, 0, s2, {fold}, {}, {}, {}};
  step2.derived_points.emplace_back(qp, reflect_point({1.0, 0.0}, fold));
  step2.derived_lines.emplace_back(ell_name, ell_out);
  step2.constraints = {pol(fr.o, fold_ref(s2, 0)), maps_pt(fr.q, 0, qp),
                       pol(qp, fold_ref(s1, 0)), maps_ln(fr.axis, 0, ell_name)};
  builder.add_step(std::move(step2));

  return {std::atan2(y, x), ell_out, fold};
}

SectionStep p_sect_into(TraceBuilder& builder, const std::string& prefix, double theta,
                        std::int64_t p, const Tolerance& tol) {
  if (!is_prime(p)) throw invalid_input("p_sect: p must be prime");
  if (!(theta > 0.0 && theta <= M_PI + 1e-12))
    throw invalid_input("p_sect: theta must lie in (0, pi]");
  theta = std::min(theta, M_PI);

  project_into(builder, prefix, theta, tol);

  // T_p(x) = cos(theta) on x = cos(theta/p).
  const Polynomial tp = chebyshev(static_cast<int>(p));
  std::vector<double> coeffs = tp.coeffs();
  coeffs.back() -= std::cos(theta);
  const Polynomial equation(std::move(coeffs));

  LillOptions opts;
  opts.grid_samples = 8192;
  const auto sols = solve_real_roots(equation, tol, opts);
  const LillSolution* best = nullptr;
  for (const auto& s : sols) {
    if (s.root < -1.0 - tol.eps_incidence || s.root > 1.0 + tol.eps_incidence) continue;
    if (!best || s.root > best->root) best = &s;
  }
  if (!best) throw numeric_failure("p_sect: no Chebyshev root found in [-1, 1]");

  append_lill_step(builder, build_lill_path(equation), *best, prefix);

  const double root = std::clamp(best->root, -1.0, 1.0);
  return unproject_into(builder, prefix, root, tol);
}

}  // namespace detail

Polynomial chebyshev(int p) {
  if (p < 0) throw invalid_input("chebyshev: order must be >= 0");
  if (p == 0) return Polynomial({1.0});
  std::vector<double> prev{1.0};        // T_0
  std::vector<double> cur{1.0, 0.0};    // T_1
  for (int k = 1; k < p; ++k) {
    std::vector<double> next(cur.size() + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i)
      next[next.size() - prev.size() + i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return Polynomial(std::move(cur));
}

AngleValue AngleValue::from_radians(double theta) {
  const double t = normalize_angle(theta);
  if (t <= 0.0) throw invalid_input("AngleValue: angle must not be a multiple of 2*pi");
  AngleValue v;
  v.theta = t;
  v.as_line = line_at_angle(t, {0.0, 0.0});
  v.as_cos_point = {std::cos(t), 0.0};
  return v;
}

std::pair<Point, FoldTrace> project_cos(const Line& ell, const Tolerance& tol) {
  if (std::abs(ell.eval({0.0, 0.0})) > tol.eps_incidence)
    throw invalid_input("project_cos: line must pass through the origin");
  const double theta = angle_of(ell);
  if (theta <= tol.eps_incidence || M_PI - theta <= tol.eps_incidence)
    return {{1.0, 0.0}, FoldTrace{}};
  TraceBuilder builder;
  project_into(builder, "", theta, tol);
  // The projected point is the last derived point of the drop step.
  const Point p = builder.trace().steps.back().derived_points.back().second;
  return {p, builder.take()};
}

std::pair<Line, FoldTrace> unproject_cos(double x, const Tolerance& tol) {
  TraceBuilder builder;
  const detail::SectionStep r = detail::unproject_into(builder, "", x, tol);
  return {r.line, builder.take()};
}

SectionResult p_sect(double theta, std::int64_t p, const Tolerance& tol) {
  TraceBuilder builder;
  const detail::SectionStep r = detail::p_sect_into(builder, "", theta, p, tol);
  return {r.angle, builder.take()};
}

MSectResult m_sect(double theta, std::int64_t m, const Tolerance& tol) {
  if (m < 2) throw invalid_input("m_sect: m must be >= 2");
  const double tnorm = normalize_angle(theta);
  if (tnorm <= 1e-15) throw invalid_input("m_sect: cannot section the zero angle");
  const bool reflex = tnorm > M_PI;
  const double work = reflex ? 2.0 * M_PI - tnorm : tnorm;

  SectionPlan plan;
  plan.m = m;
  plan.prime_chain = prime_chain(m);
  plan.required_n = 1;
  for (std::int64_t p : plan.prime_chain) {
    const int budget = static_cast<int>(std::max<std::int64_t>(1, p - 2));
    plan.per_step_budgets.push_back(budget);
    plan.required_n = std::max(plan.required_n, budget);
  }

  TraceBuilder builder;
  double angle = work;
  Line current_line = line_at_angle(work, {0.0, 0.0});
  for (std::size_t i = 0; i < plan.prime_chain.size(); ++i) {
    const std::string prefix = "s" + std::to_string(i + 1) + ".";
    const detail::SectionStep r =
        detail::p_sect_into(builder, prefix, angle, plan.prime_chain[i], tol);
    angle = r.angle;
    current_line = r.line;
  }

  if (reflex) {
    // Mirror the result back across the axis (fold along OQ).
    const Frame fr = frame_of(builder);
    const Line axis = make_line(0.0, 1.0, 0.0);
    const std::string sname = builder.fresh_step_name("mirror");
    const std::string mirrored = builder.fresh_line_name("result_mirrored");
    FoldStep step{StepKind::axiom, 3, sname, {axis}, {}, {}, {}};
    // Locate the name of the final section line: it is the last derived line.
    std::string last_line_name;
    for (const auto& st : builder.trace().steps)
      for (const auto& [n, l] : st.derived_lines) last_line_name = n;
    step.derived_lines.emplace_back(mirrored, reflect_line(current_line, axis));
    step.constraints = {maps_ln(last_line_name.empty() ? fr.axis : last_line_name, 0, mirrored)};
    builder.add_step(std::move(step));
    angle = 2.0 * M_PI - angle;
  }

  return {angle, builder.take(), plan};
}

}  // namespace nfold
