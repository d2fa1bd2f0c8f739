#include "nfold/lill.hpp"

#include <algorithm>
#include <cmath>

namespace nfold {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

Point dir(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Point rot90(Point v) { return {-v.y, v.x}; }

/// beta_0 = 0, beta_{k+1} = (a_{m-k} - beta_k) * t.  The final entry gives
/// miss = beta_m - a_0; the interior ones place the shot pivots on the
/// direction lines.  Evaluated in long double: the period step polynomials
/// of large primes need the extra mantissa.
std::vector<long double> shot_betas(const std::vector<double>& coeffs, long double t) {
  const std::size_t m = coeffs.size() - 1;
  std::vector<long double> beta(m + 1, 0.0L);
  for (std::size_t k = 0; k < m; ++k)
    beta[k + 1] = (static_cast<long double>(coeffs[k]) - beta[k]) * t;
  return beta;
}

long double miss_ld(const std::vector<double>& coeffs, long double theta) {
  const long double t = std::tan(theta);
  const auto beta = shot_betas(coeffs, t);
  return beta.back() - static_cast<long double>(coeffs.back());
}

struct Scan {
  const std::vector<double>* coeffs;
  const Polynomial* deriv;
  double tol_root;
  std::vector<long double> root_thetas;

  long double miss(long double th) const { return miss_ld(*coeffs, th); }

  void bisect_bracket(long double lo, long double hi, long double mlo) {
    for (int it = 0; it < 120 && hi - lo > 1e-18L; ++it) {
      const long double mid = 0.5L * (lo + hi);
      const long double mm = miss(mid);
      if (mm == 0.0L) {
        lo = hi = mid;
        break;
      }
      if ((mm > 0.0L) == (mlo > 0.0L))
        lo = mid;
      else
        hi = mid;
    }
    root_thetas.push_back(0.5L * (lo + hi));
  }

  /// Tangential zero: bracket the critical point of the miss function via the
  /// derivative polynomial and accept it as a (double) root only when the
  /// relative residual clears eps_root.
  void tangency_attempt(long double lo, long double hi) {
    const auto dval = [&](long double th) {
      return deriv->eval_ld(-std::tan(th));
    };
    const long double glo = dval(lo);
    const long double ghi = dval(hi);
    if (glo != 0.0L && ghi != 0.0L && (glo > 0.0L) == (ghi > 0.0L)) return;
    for (int it = 0; it < 120 && hi - lo > 1e-18L; ++it) {
      const long double mid = 0.5L * (lo + hi);
      const long double g = dval(mid);
      if (g == 0.0L) {
        lo = hi = mid;
        break;
      }
      if ((g > 0.0L) == (glo > 0.0L))
        lo = mid;
      else
        hi = mid;
    }
    const long double th = 0.5L * (lo + hi);
    const double x = static_cast<double>(-std::tan(th));
    Polynomial p(*coeffs);
    const double rel = std::abs(static_cast<double>(p.eval_ld(-std::tan(th)))) / p.magnitude_at(x);
    if (rel <= tol_root) root_thetas.push_back(th);
  }

  /// An exact zero of the evaluated miss: accept directly when the relative
  /// polynomial residual clears eps_root (it does at genuine roots; the miss
  /// recurrence can round to zero only there).
  void zero_candidate(long double th) {
    const Polynomial p(*coeffs);
    const double x = static_cast<double>(-std::tan(th));
    const double rel = std::abs(static_cast<double>(p.eval_ld(-std::tan(th)))) / p.magnitude_at(x);
    if (rel <= tol_root) root_thetas.push_back(th);
  }

  void scan_range(long double lo, long double hi, int cells, int depth) {
    std::vector<long double> th(cells + 1), ms(cells + 1);
    for (int j = 0; j <= cells; ++j) {
      th[j] = lo + (hi - lo) * j / cells;
      ms[j] = miss(th[j]);
    }
    for (int j = 0; j <= cells; ++j)
      if (ms[j] == 0.0L) zero_candidate(th[j]);
    for (int j = 0; j < cells; ++j)
      if (ms[j] != 0.0L && ms[j + 1] != 0.0L && (ms[j] < 0.0L) != (ms[j + 1] < 0.0L))
        bisect_bracket(th[j], th[j + 1], ms[j]);
    for (int j = 1; j < cells; ++j) {
      const long double a = std::abs(ms[j - 1]), b = std::abs(ms[j]), c = std::abs(ms[j + 1]);
      const bool sign_change = (ms[j - 1] > 0.0L) != (ms[j] > 0.0L) ||
                               (ms[j] > 0.0L) != (ms[j + 1] > 0.0L);
      if (sign_change || !(b <= a && b <= c) || b == 0.0L) continue;
      if (depth > 0)
        scan_range(th[j - 1], th[j + 1], 32, depth - 1);
      else
        tangency_attempt(th[j - 1], th[j + 1]);
    }
  }
};

}  // namespace

LillPath build_lill_path(const Polynomial& p) {
  if (p.degree() < 1) throw invalid_input("lill path needs degree >= 1");
  LillPath path{p, {}, {}};
  const auto& a = p.coeffs();
  Point v{0.0, 0.0};
  path.vertices.push_back(v);
  for (std::size_t k = 0; k < a.size(); ++k) {
    v = v + a[k] * dir(static_cast<int>(k));
    path.vertices.push_back(v);
    path.segment_signs.push_back(a[k] > 0.0 ? 1 : (a[k] < 0.0 ? -1 : 0));
  }
  return path;
}

double miss_function(const LillPath& path, double theta) {
  if (!(std::abs(theta) < kHalfPi - 1e-12))
    throw invalid_input("miss_function: theta out of domain (-pi/2, pi/2)");
  return static_cast<double>(miss_ld(path.poly.coeffs(), theta));
}

int fold_budget(int degree) {
  if (degree < 1) throw invalid_input("fold_budget needs degree >= 1");
  return std::max(1, degree - 2);
}

namespace {

LillSolution make_solution(const LillPath& path, long double theta) {
  const int m = path.poly.degree();
  const long double t = std::tan(theta);
  const auto beta = shot_betas(path.poly.coeffs(), t);

  LillSolution sol;
  sol.theta = static_cast<double>(theta);
  sol.root = static_cast<double>(-t);
  for (int k = 1; k <= std::max(1, m - 1); ++k) {
    const Point vk = path.vertices[static_cast<std::size_t>(k)];
    const Point d = dir(k);
    sol.pivot_points.push_back(vk + static_cast<double>(beta[static_cast<std::size_t>(k)]) * d);
  }
  const Point shot0{static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
  if (m >= 3) {
    Point sd = shot0;
    for (int i = 1; i <= m - 2; ++i) {
      sd = rot90(sd);
      sol.fold_lines.push_back(
          line_point_direction(sol.pivot_points[static_cast<std::size_t>(i - 1)], sd.x, sd.y));
    }
  } else if (m == 2) {
    const Point sd = rot90(shot0);
    sol.fold_lines.push_back(line_point_direction(sol.pivot_points[0], sd.x, sd.y));
  } else {
    sol.fold_lines.push_back(line_point_direction(path.origin(), shot0.x, shot0.y));
  }
  const long double pv = path.poly.eval_ld(-t);
  sol.residual = std::abs(static_cast<double>(pv)) / path.poly.magnitude_at(sol.root);
  return sol;
}

}  // namespace

std::vector<LillSolution> solve_real_roots(const Polynomial& p, const Tolerance& tol,
                                           const LillOptions& opts) {
  if (p.degree() < 1) throw invalid_input("solve_real_roots needs degree >= 1");
  const LillPath path = build_lill_path(p);
  const Polynomial deriv = p.derivative();
  const int n = std::max(16, opts.grid_samples);

  Scan scan{&p.coeffs(), &deriv, tol.eps_root, {}};
  // Sample cell centers; the half-step margin keeps tan finite.
  const long double lo = -static_cast<long double>(kHalfPi) + static_cast<long double>(M_PI) / (2.0L * n);
  const long double hi = -lo;
  scan.scan_range(lo, hi, n - 1, 2);

  std::vector<LillSolution> sols;
  for (long double th : scan.root_thetas) sols.push_back(make_solution(path, th));
  std::sort(sols.begin(), sols.end(),
            [](const LillSolution& a, const LillSolution& b) { return a.root < b.root; });
  std::vector<LillSolution> unique;
  for (LillSolution& s : sols) {
    if (!unique.empty() && std::abs(s.root - unique.back().root) <= 10.0 * tol.eps_root) {
      if (s.residual < unique.back().residual) unique.back() = std::move(s);
      continue;
    }
    unique.push_back(std::move(s));
  }
  return unique;
}

std::string append_lill_step(TraceBuilder& builder, const LillPath& path,
                             const LillSolution& sol, const std::string& prefix) {
  const int m = path.poly.degree();
  const auto& a = path.poly.coeffs();
  const std::string o_name = builder.add_input_point(prefix + "O", path.origin());
  const std::string t_name = builder.add_input_point(prefix + "T", path.terminus());
  const std::string step_name = builder.fresh_step_name(prefix + "lill");

  FoldStep step;
  step.kind = StepKind::lill_bundle;
  step.name = step_name;
  step.folds = sol.fold_lines;

  const auto pol = [](const std::string& pt, const std::string& ln) {
    return Constraint{Constraint::Kind::point_on_line, pt, ln, -1};
  };
  const auto maps_pt = [](const std::string& src, int fold, const std::string& img) {
    return Constraint{Constraint::Kind::point_maps_to_point, src, img, fold};
  };
  if (m == 1) {
    step.constraints = {pol(o_name, fold_ref(step_name, 0)),
                        pol(t_name, fold_ref(step_name, 0))};
    builder.add_step(std::move(step));
    return step_name;
  }

  // Offset line p: images of O across point reflections through L_1.
  const Line p_line = make_line(1.0, 0.0, -2.0 * a[0]);
  const std::string p_name = builder.add_input_line(prefix + "p", p_line);
  const std::string o_img = builder.fresh_point_name(prefix + "O_img");
  step.derived_points.emplace_back(o_img, reflect_point(path.origin(), sol.fold_lines[0]));
  step.constraints.push_back(maps_pt(o_name, 0, o_img));
  step.constraints.push_back(pol(o_img, p_name));

  // Direction line of segment 1 pins the first pivot.
  const Point v1 = path.vertices[1];
  const Point d1 = dir(1);
  const std::string l1_name =
      builder.add_input_line(prefix + "L1", line_point_direction(v1, d1.x, d1.y));
  const std::string a1_name = builder.fresh_point_name(prefix + "A1");
  step.derived_points.emplace_back(a1_name, sol.pivot_points[0]);
  step.constraints.push_back(pol(a1_name, l1_name));
  step.constraints.push_back(pol(a1_name, fold_ref(step_name, 0)));

  if (m == 2) {
    step.constraints.push_back(pol(t_name, fold_ref(step_name, 0)));
    builder.add_step(std::move(step));
    return step_name;
  }

  std::string prev_pivot_name = a1_name;
  for (int i = 2; i <= m - 1; ++i) {
    const Point vi = path.vertices[static_cast<std::size_t>(i)];
    const Point di = dir(i);
    const std::string li_name = builder.add_input_line(
        prefix + "L" + std::to_string(i), line_point_direction(vi, di.x, di.y));
    const std::string ai_name = builder.fresh_point_name(prefix + "A" + std::to_string(i));
    step.derived_points.emplace_back(ai_name, sol.pivot_points[static_cast<std::size_t>(i - 1)]);
    if (i <= m - 2) {
      // chi_i is perpendicular to chi_{i-1} and passes through their pivot.
      // Perpendicularity is pinned through the previous pivot: its image
      // under chi_i must land back on chi_{i-1}.
      const std::string back_name = builder.fresh_point_name(prefix + "A" + std::to_string(i - 1) + "_back");
      step.derived_points.emplace_back(
          back_name, reflect_point(sol.pivot_points[static_cast<std::size_t>(i - 2)],
                                   sol.fold_lines[static_cast<std::size_t>(i - 1)]));
      step.constraints.push_back(maps_pt(prev_pivot_name, i - 1, back_name));
      step.constraints.push_back(pol(back_name, fold_ref(step_name, i - 2)));
      step.constraints.push_back(pol(ai_name, fold_ref(step_name, i - 1)));
    }
    step.constraints.push_back(pol(ai_name, fold_ref(step_name, i - 2)));
    step.constraints.push_back(pol(ai_name, li_name));
    prev_pivot_name = ai_name;
  }

  // Offset line q closes the path: the last fold must carry T onto it.
  const Point dm = dir(m);
  const Point vm1 = path.vertices[static_cast<std::size_t>(m - 1)];
  const Line q_line = make_line(dm.x, dm.y, -(dm.dot(vm1) - a.back()));
  const std::string q_name = builder.add_input_line(prefix + "q", q_line);
  const std::string t_img = builder.fresh_point_name(prefix + "T_img");
  step.derived_points.emplace_back(t_img, reflect_point(path.terminus(), sol.fold_lines.back()));
  step.constraints.push_back(maps_pt(t_name, m - 3, t_img));
  step.constraints.push_back(pol(t_img, q_name));

  builder.add_step(std::move(step));
  return step_name;
}

}  // namespace nfold
