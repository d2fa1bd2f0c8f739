#include "nfold/polygon.hpp"

#include <algorithm>
#include <cmath>

#include "nfold/lill.hpp"
#include "nfold/periods.hpp"
#include "nfold/section.hpp"

namespace nfold {

namespace {

Constraint pol(const std::string& pt, const std::string& ln) {
  return {Constraint::Kind::point_on_line, pt, ln, -1};
}
Constraint maps_pt(const std::string& src, int fold, const std::string& img) {
  return {Constraint::Kind::point_maps_to_point, src, img, fold};
}
Constraint maps_ln(const std::string& src, int fold, const std::string& img) {
  return {Constraint::Kind::line_maps_to_line, src, img, fold};
}

struct Component {
  std::int64_t modulus = 1;  // p^a (or 2^a)
  double angle = 0.0;        // 2*pi/modulus
  Line line;                 // through O at that angle
  Line half_line;            // through O at angle/2
};

/// Tower walk for one odd prime; returns cos(2*pi/p).
double cos_prime_into(TraceBuilder& builder, const std::string& prefix, std::int64_t p,
                      const Tolerance& tol) {
  const detail::FrameNames fr = detail::ensure_frame(builder);
  const PeriodTower tower = build_period_tower(p, tol);
  double value = -1.0;  // level-0 period: the full sum

  if (tower.level_degrees.empty()) {
    // p = 3: anchor the single period -1 with the linear Lill step x + 1.
    const Polynomial anchor = step_polynomial(tower, 0, 0);
    const auto sols = solve_real_roots(anchor, tol);
    if (sols.empty()) throw numeric_failure("period anchor step found no root");
    append_lill_step(builder, build_lill_path(anchor), sols.front(), prefix + "t0.");
    value = sols.front().root;
  } else {
    for (int level = 0; level + 1 < tower.num_levels(); ++level) {
      const Polynomial step = step_polynomial(tower, level, 0);
      const double target =
          static_cast<double>(tower.levels[static_cast<std::size_t>(level) + 1][0]);
      LillOptions opts;
      opts.grid_samples = 32768;
      const auto sols = solve_real_roots(step, tol, opts);
      const LillSolution* best = nullptr;
      for (const auto& s : sols)
        if (!best || std::abs(s.root - target) < std::abs(best->root - target)) best = &s;
      if (!best ||
          std::abs(best->root - target) > tol.eps_report * std::max(1.0, std::abs(target)))
        throw numeric_failure("period tower step missed its target at level " +
                              std::to_string(level) + " for p = " + std::to_string(p));
      append_lill_step(builder, build_lill_path(step), *best,
                       prefix + "t" + std::to_string(level) + ".");
      value = best->root;
    }
  }

  // Halve the period 2*cos(2*pi/p) by folding O onto it.
  const Point twocos{value, 0.0};
  const std::string twocos_name = builder.add_input_point(prefix + "period", twocos);
  const std::string sname = builder.fresh_step_name(prefix + "halve");
  const std::string cos_name = builder.fresh_point_name(prefix + "cosP");
  const Line fold = make_line(1.0, 0.0, -value / 2.0);
  FoldStep step{StepKind::axiom, 1, sname, {fold}, {}, {}, {}};
  step.derived_points.emplace_back(cos_name, Point{value / 2.0, 0.0});
  step.constraints = {maps_pt(fr.o, 0, twocos_name), pol(cos_name, fold_ref(sname, 0)),
                      pol(cos_name, fr.axis)};
  builder.add_step(std::move(step));
  return value / 2.0;
}

/// One reflection (half of a rotation) recorded as a rotation step.
Point reflect_into(TraceBuilder& builder, const std::string& step_base,
                   const std::string& src_name, Point src, const Line& fold,
                   const std::string& img_base, std::string* img_name_out) {
  const std::string sname = builder.fresh_step_name(step_base);
  const std::string img_name = builder.fresh_point_name(img_base);
  const Point img = reflect_point(src, fold);
  FoldStep step{StepKind::rotation, 0, sname, {fold}, {}, {}, {}};
  step.derived_points.emplace_back(img_name, img);
  step.constraints = {pol("O", fold_ref(sname, 0)), maps_pt(src_name, 0, img_name)};
  builder.add_step(std::move(step));
  if (img_name_out) *img_name_out = img_name;
  return img;
}

/// Rotation by +/- the component angle: two reflections, axis first for the
/// positive sense, half-line first for the negative.
Point rotate_into(TraceBuilder& builder, const std::string& prefix,
                  std::string& cur_name, Point cur, const Line& axis,
                  const Line& half_line, int sign, const std::string& final_base) {
  const Line& first = sign > 0 ? axis : half_line;
  const Line& second = sign > 0 ? half_line : axis;
  std::string mid_name;
  const Point mid = reflect_into(builder, prefix + "a", cur_name, cur, first,
                                 prefix + "mid", &mid_name);
  std::string img_name;
  const Point img =
      reflect_into(builder, prefix + "b", mid_name, mid, second, final_base, &img_name);
  cur_name = img_name;
  return img;
}

Component component_for_two(TraceBuilder& builder, int exponent, const Tolerance& tol) {
  const detail::FrameNames fr = detail::ensure_frame(builder);
  const Line axis = make_line(0.0, 1.0, 0.0);
  const Line yaxis = make_line(1.0, 0.0, 0.0);
  // Half line of the angle pi: the perpendicular through O.
  const std::string sname = builder.fresh_step_name("two.halfline");
  FoldStep step{StepKind::axiom, 5, sname, {yaxis}, {}, {}, {}};
  step.constraints = {pol(fr.o, fold_ref(sname, 0)), maps_ln(fr.axis, 0, fr.axis)};
  builder.add_step(std::move(step));

  detail::SectionStep s{M_PI, axis, yaxis};
  std::int64_t modulus = 2;
  for (int k = 2; k <= exponent; ++k) {
    s = detail::p_sect_into(builder, "two.pow" + std::to_string(k) + ".", s.angle, 2, tol);
    modulus *= 2;
  }
  return {modulus, s.angle, s.line, s.half_line};
}

Component component_for_odd(TraceBuilder& builder, std::int64_t p, int exponent,
                            const Tolerance& tol) {
  const std::string prefix = "p" + std::to_string(p) + ".";
  const double cosv = cos_prime_into(builder, prefix, p, tol);
  detail::SectionStep s = detail::unproject_into(builder, prefix, cosv, tol);
  std::int64_t modulus = p;
  for (int k = 2; k <= exponent; ++k) {
    s = detail::p_sect_into(builder, prefix + "pow" + std::to_string(k) + ".", s.angle, p,
                            tol);
    modulus *= p;
  }
  return {modulus, s.angle, s.line, s.half_line};
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
  if (b == 0) {
    u = 1;
    v = 0;
    return a;
  }
  std::int64_t u1, v1;
  const std::int64_t g = ext_gcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

Component combine(TraceBuilder& builder, const Component& c1, const Component& c2,
                  const Tolerance& tol) {
  const detail::FrameNames fr = detail::ensure_frame(builder);
  std::int64_t u = 0, v = 0;
  const std::int64_t g = ext_gcd(c1.modulus, c2.modulus, u, v);
  if (g != 1) throw invalid_input("combine: components must be coprime");
  // u*m1 + v*m2 = 1, so 2*pi/(m1*m2) = v*(2*pi/m1) + u*(2*pi/m2).
  const std::int64_t m12 = c1.modulus * c2.modulus;
  const std::string prefix = "c" + std::to_string(m12) + ".";

  std::string cur_name = fr.q;
  Point cur{1.0, 0.0};
  int counter = 0;
  const auto apply = [&](const Component& c, std::int64_t times) {
    const int sign = times >= 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::llabs(times); ++i) {
      const std::string rp = prefix + "r" + std::to_string(++counter) + ".";
      cur = rotate_into(builder, rp, cur_name, cur, make_line(0.0, 1.0, 0.0), c.half_line,
                        sign, rp + "img");
    }
  };
  apply(c1, v);
  apply(c2, u);

  // Crease the combined direction and its bisector with the axis.
  const Line comb_line = line_through({0.0, 0.0}, cur, tol);
  const std::string s1 = builder.fresh_step_name(prefix + "dir");
  const std::string comb_name = builder.fresh_line_name(prefix + "line");
  FoldStep dir_step{StepKind::axiom, 4, s1, {comb_line}, {}, {}, {}};
  dir_step.derived_lines.emplace_back(comb_name, comb_line);
  dir_step.constraints = {pol(fr.o, fold_ref(s1, 0)), pol(cur_name, fold_ref(s1, 0))};
  builder.add_step(std::move(dir_step));

  const double gamma = std::atan2(cur.y, cur.x);
  const Line half = line_at_angle(gamma / 2.0, {0.0, 0.0});
  const std::string s2 = builder.fresh_step_name(prefix + "half");
  FoldStep half_step{StepKind::axiom, 2, s2, {half}, {}, {}, {}};
  half_step.constraints = {pol(fr.o, fold_ref(s2, 0)), maps_ln(fr.axis, 0, comb_name)};
  builder.add_step(std::move(half_step));

  return {m12, gamma, comb_line, half};
}

}  // namespace

std::pair<double, FoldTrace> construct_cos_prime(std::int64_t p, const Tolerance& tol) {
  if (!is_prime(p) || p < 3)
    throw invalid_input("construct_cos_prime: p must be an odd prime");
  TraceBuilder builder;
  const double c = cos_prime_into(builder, "", p, tol);
  return {c, builder.take()};
}

std::pair<Point, FoldStep> rotate_by_fold(Point pt, Point theta_point, const Tolerance& tol) {
  if (std::abs(theta_point.norm() - 1.0) > tol.eps_incidence)
    throw invalid_input("rotate_by_fold: theta_point must lie on the unit circle");
  const Line fold = line_through({0.0, 0.0}, theta_point, tol);
  const Point img = reflect_point(pt, fold);
  FoldStep step{StepKind::rotation, 0, "rotate", {fold}, {}, {}, {}};
  step.derived_points.emplace_back("P_img", img);
  step.constraints = {pol("O", fold_ref("rotate", 0)), maps_pt("P", 0, "P_img")};
  return {img, std::move(step)};
}

PolygonResult build_polygon(std::int64_t m, const Tolerance& tol) {
  if (m < 3) throw invalid_input("build_polygon: m must be >= 3");
  PolygonResult result;
  result.m = m;
  result.report = totient_report(m);

  TraceBuilder builder;
  const detail::FrameNames fr = detail::ensure_frame(builder);

  std::vector<Component> components;
  for (const auto& [p, e] : factorize(m).factors) {
    if (p == 2)
      components.push_back(component_for_two(builder, e, tol));
    else
      components.push_back(component_for_odd(builder, p, e, tol));
  }
  Component full = components.front();
  for (std::size_t i = 1; i < components.size(); ++i)
    full = combine(builder, full, components[i], tol);

  // All m roots of unity by repeated rotation of Q, then the edge creases.
  const Line axis = make_line(0.0, 1.0, 0.0);
  const std::string v0 = builder.add_input_point("vertex0", {1.0, 0.0});
  std::vector<std::string> vertex_names{v0};
  result.vertices = {{1.0, 0.0}};
  std::string cur_name = v0;
  Point cur{1.0, 0.0};
  for (std::int64_t k = 1; k < m; ++k) {
    const std::string rp = "rot" + std::to_string(k) + ".";
    cur = rotate_into(builder, rp, cur_name, cur, axis, full.half_line, 1,
                      "vertex" + std::to_string(k));
    vertex_names.push_back(cur_name);
    result.vertices.push_back(cur);
  }
  for (std::int64_t k = 0; k < m; ++k) {
    const std::size_t a = static_cast<std::size_t>(k);
    const std::size_t b = static_cast<std::size_t>((k + 1) % m);
    const std::string sname = builder.fresh_step_name("edge" + std::to_string(k));
    FoldStep step{StepKind::edge, 0, sname,
                  {line_through(result.vertices[a], result.vertices[b], tol)}, {}, {}, {}};
    step.constraints = {pol(vertex_names[a], fold_ref(sname, 0)),
                        pol(vertex_names[b], fold_ref(sname, 0))};
    builder.add_step(std::move(step));
  }

  result.trace = builder.take();
  result.fold_width = result.trace.fold_width();
  return result;
}

}  // namespace nfold
