#include "nfold/axioms.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nfold {

namespace {

Line perpendicular_bisector(Point p, Point q) {
  const Point mid = 0.5 * (p + q);
  const double a = q.x - p.x;
  const double b = q.y - p.y;
  return make_line(a, b, -(a * mid.x + b * mid.y));
}

bool lines_equal(const Line& l, const Line& m, double eps) {
  const double same = std::abs(l.a - m.a) + std::abs(l.b - m.b) + std::abs(l.c - m.c);
  const double flip = std::abs(l.a + m.a) + std::abs(l.b + m.b) + std::abs(l.c + m.c);
  return std::min(same, flip) <= eps * (1.0 + std::abs(l.c));
}

void check_arity(const AxiomInstance& inst) {
  static constexpr std::array<std::pair<int, int>, 9> arity = {{
      {0, 0}, {2, 0}, {0, 2}, {0, 1}, {2, 0}, {1, 1}, {2, 1}, {2, 2}, {1, 2},
  }};
  if (inst.op_id < 1 || inst.op_id > 8)
    throw invalid_input("axiom op_id must be in 1..8");
  const auto [np, nl] = arity[static_cast<std::size_t>(inst.op_id)];
  if (static_cast<int>(inst.points.size()) != np ||
      static_cast<int>(inst.lines.size()) != nl)
    throw invalid_input("axiom instance arity mismatch for op " +
                        std::to_string(inst.op_id));
  for (const Point& p : inst.points)
    if (!p.finite()) throw invalid_input("axiom instance point not finite");
}

AxiomSolution finalize(std::vector<Line> folds, const Tolerance& tol) {
  std::vector<Line> unique;
  for (const Line& f : folds) {
    bool dup = false;
    for (const Line& g : unique)
      if (lines_equal(f, g, tol.eps_incidence)) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(f);
  }
  std::sort(unique.begin(), unique.end(), [](const Line& l, const Line& m) {
    const double al = angle_of(l), am = angle_of(m);
    if (al != am) return al < am;
    return l.c < m.c;
  });
  if (unique.empty()) return {{}, Multiplicity::empty};
  return {std::move(unique), Multiplicity::finite};
}

AxiomSolution solve_op1(const AxiomInstance& inst, const Tolerance& tol) {
  const Point p = inst.points[0], q = inst.points[1];
  if (distance(p, q) <= tol.eps_incidence)
    throw invalid_input("op 1 requires two distinct points");
  return finalize({perpendicular_bisector(p, q)}, tol);
}

AxiomSolution solve_op2(const AxiomInstance& inst, const Tolerance& tol) {
  const Line& r = inst.lines[0];
  const Line& s = inst.lines[1];
  const LineIntersection x = intersect(r, s, tol);
  if (x.kind == LineIntersection::Kind::coincident)
    return {{}, Multiplicity::infinite};
  if (x.kind == LineIntersection::Kind::parallel_distinct) {
    // Midline; align orientations before averaging the offsets.
    double a2 = s.a, b2 = s.b, c2 = s.c;
    if (r.a * a2 + r.b * b2 < 0.0) {
      a2 = -a2;
      b2 = -b2;
      c2 = -c2;
    }
    return finalize({make_line(r.a + a2, r.b + b2, r.c + c2)}, tol);
  }
  const Point dr = r.direction(), ds = s.direction();
  const Point d1 = dr + ds;
  const Point d2 = dr - ds;
  return finalize({line_point_direction(x.p, d1.x, d1.y),
                   line_point_direction(x.p, d2.x, d2.y)},
                  tol);
}

AxiomSolution solve_op4(const AxiomInstance& inst, const Tolerance& tol) {
  const Point p = inst.points[0], q = inst.points[1];
  if (distance(p, q) <= tol.eps_incidence)
    throw invalid_input("op 4 requires two distinct points");
  return finalize({line_through(p, q, tol)}, tol);
}

AxiomSolution solve_op6(const AxiomInstance& inst, const Tolerance& tol) {
  const Point p = inst.points[0];
  const Point q = inst.points[1];
  const Line& r = inst.lines[0];
  const double radius = distance(q, p);
  if (radius <= tol.eps_incidence) {
    // P == Q: the image of P under any fold through Q is P itself.
    if (std::abs(r.eval(p)) <= tol.eps_incidence)
      return {{}, Multiplicity::infinite};
    return {{}, Multiplicity::empty};
  }
  // Images of P under folds through Q trace the circle (Q, |QP|); intersect
  // it with r.
  const double h = r.eval(q);
  const Point foot = q - h * r.normal();
  const double disc = radius * radius - h * h;
  // Tie-break: a discriminant within eps_incidence (relative to |QP|^2) of
  // zero counts as tangency and yields the single fold through the foot.
  const double tie = tol.eps_incidence * std::max(1.0, radius * radius);
  std::vector<Point> images;
  if (disc < -tie) return {{}, Multiplicity::empty};
  if (disc <= tie) {
    images = {foot};
  } else {
    const double t = std::sqrt(disc);
    images = {foot + t * r.direction(), foot - t * r.direction()};
  }
  std::vector<Line> folds;
  for (const Point& x : images) {
    if (distance(x, p) <= tol.eps_incidence)
      folds.push_back(line_through(p, q, tol));  // P fixed on the fold
    else
      folds.push_back(perpendicular_bisector(p, x));
  }
  return finalize(std::move(folds), tol);
}

AxiomSolution solve_op8(const AxiomInstance& inst, const Tolerance& tol) {
  const Point p = inst.points[0];
  const Line& r = inst.lines[0];
  const Line& s = inst.lines[1];
  // Folds perpendicular to s slide P along the line through P parallel to s.
  const Point ds = s.direction();
  const Line locus = line_point_direction(p, ds.x, ds.y);
  const LineIntersection x = intersect(locus, r, tol);
  if (x.kind == LineIntersection::Kind::coincident)
    return {{}, Multiplicity::infinite};
  if (x.kind == LineIntersection::Kind::parallel_distinct)
    return {{}, Multiplicity::empty};
  if (distance(x.p, p) <= tol.eps_incidence)
    return finalize({perpendicular_through(s, p)}, tol);
  return finalize({perpendicular_bisector(p, x.p)}, tol);
}

// Low-order-first convolution for the op-7 elimination.
std::vector<double> poly_mul(const std::vector<double>& u, const std::vector<double>& v) {
  std::vector<double> out(u.size() + v.size() - 1, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += u[i] * v[j];
  return out;
}

void poly_axpy(std::vector<double>& acc, double k, const std::vector<double>& v) {
  if (acc.size() < v.size()) acc.resize(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) acc[i] += k * v[i];
}

/// Distinct real roots of c3 u^3 + c2 u^2 + c1 u + c0, with graceful
/// degeneration to quadratic/linear when leading terms vanish.
std::vector<double> cubic_real_roots(double c3, double c2, double c1, double c0) {
  const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (!(scale > 0.0)) return {};
  const double lead_eps = 1e-12 * scale;
  std::vector<double> roots;
  if (std::abs(c3) <= lead_eps) {
    if (std::abs(c2) <= lead_eps) {
      if (std::abs(c1) <= lead_eps) return {};
      return {-c0 / c1};
    }
    const double disc = c1 * c1 - 4.0 * c2 * c0;
    if (disc < -1e-14 * scale * scale) return {};
    if (disc <= 1e-14 * scale * scale) return {-c1 / (2.0 * c2)};
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (c1 + (c1 >= 0.0 ? sq : -sq));
    roots = {qq / c2};
    if (std::abs(qq) > 0.0) roots.push_back(c0 / qq);
    return roots;
  }
  // Depressed cubic t^3 + pt + q with u = t - c2/(3 c3).
  const double b = c2 / c3, c = c1 / c3, d = c0 / c3;
  const double p = c - b * b / 3.0;
  const double q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  const double shift = -b / 3.0;
  const double disc = -4.0 * p * p * p - 27.0 * q * q;
  const double disc_eps = 1e-13 * std::pow(std::max({1.0, std::abs(p), std::abs(q)}), 3);
  if (disc > disc_eps) {
    // Three distinct real roots (trigonometric form).
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(shift + m * std::cos(phi - 2.0 * M_PI * k / 3.0));
  } else if (disc < -disc_eps) {
    // One real root (Cardano).
    const double half_q = q / 2.0;
    const double rad = std::sqrt(half_q * half_q + p * p * p / 27.0);
    const double w = std::cbrt(-half_q + (half_q >= 0.0 ? -rad : rad));
    double t = 0.0;
    if (std::abs(w) > 0.0)
      t = w - p / (3.0 * w);
    roots.push_back(shift + t);
  } else {
    // Multiple roots: q ~ 0 gives a triple at 0, otherwise a double and a simple.
    if (std::abs(q) <= 1e-13 * std::max(1.0, std::abs(p))) {
      roots.push_back(shift);
      if (p < 0.0) {
        roots.push_back(shift + std::sqrt(-p));
        roots.push_back(shift - std::sqrt(-p));
      }
    } else {
      roots.push_back(shift + 3.0 * q / p);
      roots.push_back(shift - 3.0 * q / (2.0 * p));
    }
  }
  // Newton polish against the original coefficients.
  for (double& u : roots) {
    for (int it = 0; it < 3; ++it) {
      const double f = ((c3 * u + c2) * u + c1) * u + c0;
      const double df = (3.0 * c3 * u + 2.0 * c2) * u + c1;
      if (std::abs(df) < 1e-300) break;
      u -= f / df;
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double u : roots)
    if (unique.empty() || std::abs(u - unique.back()) > 1e-9 * std::max(1.0, std::abs(u)))
      unique.push_back(u);
  return unique;
}

AxiomSolution solve_op7(const AxiomInstance& inst, const Tolerance& tol) {
  const Point p = inst.points[0];
  const Point q = inst.points[1];
  const Line& r = inst.lines[0];
  const Line& s = inst.lines[1];
  if (line_residual(r, s) <= tol.eps_incidence && distance(p, q) <= tol.eps_incidence)
    throw invalid_input("op 7 requires distinct lines or distinct points");

  const auto cubic = op7_slope_cubic(inst);
  std::vector<Line> folds;
  const double dp = r.eval(p);
  const double dq = s.eval(q);
  for (double u : cubic_real_roots(cubic[0], cubic[1], cubic[2], cubic[3])) {
    // Recover the intercept from whichever constraint is better conditioned.
    const double den_r = r.b - r.a * u;
    const double den_s = s.b - s.a * u;
    double v;
    if (std::abs(den_r) >= std::abs(den_s)) {
      if (std::abs(den_r) < 1e-12) continue;
      v = -dp * (1.0 + u * u) / (2.0 * den_r) - (u * p.x - p.y);
    } else {
      if (std::abs(den_s) < 1e-12) continue;
      v = -dq * (1.0 + u * u) / (2.0 * den_s) - (u * q.x - q.y);
    }
    if (!std::isfinite(v)) continue;
    const Line fold = make_line(u, -1.0, v);
    if (axiom_residual(inst, fold) <= tol.eps_incidence) folds.push_back(fold);
  }

  // Vertical folds x = k are outside the slope parameterization.
  const bool k_from_r = std::abs(r.a) > tol.eps_incidence;
  const bool k_from_s = std::abs(s.a) > tol.eps_incidence;
  const double kr = k_from_r ? (r.a * p.x - r.b * p.y - r.c) / (2.0 * r.a) : 0.0;
  const double ks = k_from_s ? (s.a * q.x - s.b * q.y - s.c) / (2.0 * s.a) : 0.0;
  if (k_from_r && k_from_s) {
    if (std::abs(kr - ks) <= tol.eps_incidence * std::max(1.0, std::abs(kr))) {
      const Line fold = make_line(1.0, 0.0, -0.5 * (kr + ks));
      if (axiom_residual(inst, fold) <= tol.eps_incidence) folds.push_back(fold);
    }
  } else if (k_from_r || k_from_s) {
    // One constraint fixes k; the other must hold identically.
    const double k = k_from_r ? kr : ks;
    const Line fold = make_line(1.0, 0.0, -k);
    if (axiom_residual(inst, fold) <= tol.eps_incidence) folds.push_back(fold);
  } else {
    // Both lines horizontal: either no vertical fold or every vertical fold.
    const Line probe = make_line(1.0, 0.0, 0.0);
    if (axiom_residual(inst, probe) <= tol.eps_incidence)
      return {{}, Multiplicity::infinite};
  }
  return finalize(std::move(folds), tol);
}

}  // namespace

std::vector<double> op7_slope_cubic(const AxiomInstance& inst) {
  check_arity(inst);
  if (inst.op_id != 7) throw invalid_input("op7_slope_cubic requires op 7");
  const Point p = inst.points[0];
  const Point q = inst.points[1];
  const Line& r = inst.lines[0];
  const Line& s = inst.lines[1];
  const double dp = r.eval(p);
  const double dq = s.eval(q);
  const std::vector<double> one_u2 = {1.0, 0.0, 1.0};
  const std::vector<double> fr = {r.b, -r.a};  // b1 - a1 u
  const std::vector<double> fs = {s.b, -s.a};  // b2 - a2 u
  const std::vector<double> lp = {-p.y, p.x};  // u px - py
  const std::vector<double> lq = {-q.y, q.x};

  std::vector<double> acc(4, 0.0);
  poly_axpy(acc, dq, poly_mul(one_u2, fr));
  poly_axpy(acc, 2.0, poly_mul(lq, poly_mul(fs, fr)));
  poly_axpy(acc, -dp, poly_mul(one_u2, fs));
  poly_axpy(acc, -2.0, poly_mul(lp, poly_mul(fr, fs)));
  acc.resize(4, 0.0);
  return {acc[3], acc[2], acc[1], acc[0]};  // highest-degree-first
}

double axiom_residual(const AxiomInstance& inst, const Line& fold) {
  switch (inst.op_id) {
    case 1:
      return distance(reflect_point(inst.points[0], fold), inst.points[1]);
    case 2:
      return line_residual(reflect_line(inst.lines[0], fold), inst.lines[1]);
    case 3:
      return line_residual(fold, inst.lines[0]);
    case 4:
      return std::max(std::abs(fold.eval(inst.points[0])),
                      std::abs(fold.eval(inst.points[1])));
    case 5:
      return std::max(std::abs(fold.eval(inst.points[0])),
                      line_residual(reflect_line(inst.lines[0], fold), inst.lines[0]));
    case 6:
      return std::max(std::abs(fold.eval(inst.points[1])),
                      std::abs(inst.lines[0].eval(reflect_point(inst.points[0], fold))));
    case 7:
      return std::max(
          std::abs(inst.lines[0].eval(reflect_point(inst.points[0], fold))),
          std::abs(inst.lines[1].eval(reflect_point(inst.points[1], fold))));
    case 8:
      return std::max(
          std::abs(inst.lines[0].eval(reflect_point(inst.points[0], fold))),
          line_residual(reflect_line(inst.lines[1], fold), inst.lines[1]));
    default:
      throw invalid_input("axiom op_id must be in 1..8");
  }
}

AxiomSolution solve_axiom(const AxiomInstance& inst, const Tolerance& tol) {
  check_arity(inst);
  switch (inst.op_id) {
    case 1:
      return solve_op1(inst, tol);
    case 2:
      return solve_op2(inst, tol);
    case 3:
      return finalize({inst.lines[0]}, tol);
    case 4:
      return solve_op4(inst, tol);
    case 5:
      return finalize({perpendicular_through(inst.lines[0], inst.points[0])}, tol);
    case 6:
      return solve_op6(inst, tol);
    case 7:
      return solve_op7(inst, tol);
    case 8:
      return solve_op8(inst, tol);
    default:
      throw invalid_input("axiom op_id must be in 1..8");
  }
}

SolutionCount count_solutions(const AxiomInstance& inst, const Tolerance& tol) {
  const AxiomSolution sol = solve_axiom(inst, tol);
  return {sol.multiplicity_class, static_cast<int>(sol.folds.size())};
}

FoldTrace axiom_solution_trace(const AxiomInstance& inst, const AxiomSolution& sol) {
  check_arity(inst);
  TraceBuilder builder;
  std::vector<std::string> pts, lns;
  static constexpr const char* kPointNames[2] = {"P", "Q"};
  static constexpr const char* kLineNames[2] = {"r", "s"};
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    pts.push_back(builder.add_input_point(kPointNames[i], inst.points[i]));
  for (std::size_t i = 0; i < inst.lines.size(); ++i)
    lns.push_back(builder.add_input_line(kLineNames[i], inst.lines[i]));

  const auto pol = [](const std::string& pt, const std::string& ln) {
    return Constraint{Constraint::Kind::point_on_line, pt, ln, -1};
  };
  const auto maps_pt = [](const std::string& src, const std::string& img) {
    return Constraint{Constraint::Kind::point_maps_to_point, src, img, 0};
  };
  const auto maps_ln = [](const std::string& src, const std::string& img) {
    return Constraint{Constraint::Kind::line_maps_to_line, src, img, 0};
  };

  int index = 0;
  for (const Line& fold : sol.folds) {
    const std::string sname = builder.fresh_step_name("op" + std::to_string(inst.op_id) +
                                                      "_" + std::to_string(index++));
    FoldStep step{StepKind::axiom, inst.op_id, sname, {fold}, {}, {}, {}};
    const std::string f0 = fold_ref(sname, 0);
    switch (inst.op_id) {
      case 1:
        step.constraints = {maps_pt(pts[0], pts[1])};
        break;
      case 2:
        step.constraints = {maps_ln(lns[0], lns[1])};
        break;
      case 3: {
        // Two probe points of r pin the fold onto r itself.
        const Point x0 = inst.lines[0].anchor();
        const Point x1 = x0 + inst.lines[0].direction();
        const std::string n0 = builder.fresh_point_name(sname + ".R0");
        const std::string n1 = builder.fresh_point_name(sname + ".R1");
        step.derived_points = {{n0, x0}, {n1, x1}};
        step.constraints = {pol(n0, lns[0]), pol(n0, f0), pol(n1, lns[0]), pol(n1, f0)};
        break;
      }
      case 4:
        step.constraints = {pol(pts[0], f0), pol(pts[1], f0)};
        break;
      case 5:
        step.constraints = {pol(pts[0], f0), maps_ln(lns[0], lns[0])};
        break;
      case 6: {
        const std::string img = builder.fresh_point_name(sname + ".P_img");
        step.derived_points = {{img, reflect_point(inst.points[0], fold)}};
        step.constraints = {pol(pts[1], f0), maps_pt(pts[0], img), pol(img, lns[0])};
        break;
      }
      case 7: {
        const std::string pi = builder.fresh_point_name(sname + ".P_img");
        const std::string qi = builder.fresh_point_name(sname + ".Q_img");
        step.derived_points = {{pi, reflect_point(inst.points[0], fold)},
                               {qi, reflect_point(inst.points[1], fold)}};
        step.constraints = {maps_pt(pts[0], pi), pol(pi, lns[0]), maps_pt(pts[1], qi),
                            pol(qi, lns[1])};
        break;
      }
      case 8: {
        const std::string img = builder.fresh_point_name(sname + ".P_img");
        step.derived_points = {{img, reflect_point(inst.points[0], fold)}};
        step.constraints = {maps_pt(pts[0], img), pol(img, lns[0]), maps_ln(lns[1], lns[1])};
        break;
      }
      default:
        break;
    }
    builder.add_step(std::move(step));
  }
  return builder.take();
}

}  // namespace nfold
