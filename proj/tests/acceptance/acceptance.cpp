// Acceptance suite: every criterion runs at its stated tolerance and prints
// one PASS/FAIL line.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nfold/axioms.hpp"
#include "nfold/json_io.hpp"
#include "nfold/lill.hpp"
#include "nfold/numtheory.hpp"
#include "nfold/periods.hpp"
#include "nfold/polygon.hpp"
#include "nfold/section.hpp"
#include "nfold/svg.hpp"
#include "nfold/verify.hpp"
#include "support/root_oracle.hpp"
#include "support/sweep_oracle.hpp"

using namespace nfold;

namespace {

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<bool(std::string&)> run;
};

std::mt19937_64 rng;  // reseeded per criterion for reproducibility

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool fail(std::string& msg, const std::string& detail) {
  msg = detail;
  return false;
}

// --- 1: constructibility predicates reproduce the worked examples -----------

bool criterion_predicates(std::string& msg) {
  if (!check_section(11, 9)) return fail(msg, "check_section(11, 9) != true");
  if (section_required_n(11) != 9) return fail(msg, "required n for 11-section != 9");
  if (euler_phi(199) != 198) return fail(msg, "euler_phi(199) != 198");
  const Factorization f = factorize(198);
  const std::vector<std::pair<std::int64_t, int>> expect{{2, 1}, {3, 2}, {11, 1}};
  if (f.factors != expect) return fail(msg, "factorize(198) != 2 * 3^2 * 11");
  if (!check_polygon(199, 9)) return fail(msg, "check_polygon(199, 9) != true");
  if (check_polygon(199, 8)) return fail(msg, "check_polygon(199, 8) != false");
  return true;
}

// --- 2: Lill solver equals the independent root oracle ----------------------

bool criterion_lill_oracle(std::string& msg) {
  rng.seed(1001);
  const Tolerance tol;
  LillOptions opts;
  opts.grid_samples = 16384;
  int done = 0;
  while (done < 1000) {
    const int deg = 2 + static_cast<int>(rng() % 8);
    std::vector<double> coeffs(static_cast<std::size_t>(deg) + 1);
    for (double& c : coeffs) c = uniform(-10.0, 10.0);
    // Test-set construction: keep every root well inside the tan-range of the
    // scan window (the solver cannot see |root| beyond tan of the outermost
    // grid sample; tiny leading coefficients push roots there).
    if (std::abs(coeffs.front()) < 0.5) continue;
    const auto oracle = nfold::testing::real_roots_oracle(coeffs, -100.0, 100.0);
    if (std::any_of(oracle.begin(), oracle.end(),
                    [](double r) { return std::abs(r) > 50.0; }))
      continue;
    ++done;

    const Polynomial p(coeffs);
    const auto sols = solve_real_roots(p, tol, opts);
    if (sols.size() != oracle.size())
      return fail(msg, "root count mismatch at trial " + std::to_string(done) + ": got " +
                           std::to_string(sols.size()) + ", oracle " +
                           std::to_string(oracle.size()));
    for (std::size_t i = 0; i < sols.size(); ++i) {
      if (std::abs(sols[i].root - oracle[i]) > 1e-8)
        return fail(msg, "root value off by " + std::to_string(sols[i].root - oracle[i]));
      if (sols[i].fold_lines.size() != static_cast<std::size_t>(std::max(1, deg - 2)))
        return fail(msg, "fold count != max(1, degree - 2)");
    }
  }
  return true;
}

// --- 3: fifth roots with exactly three simultaneous folds -------------------

bool criterion_fifth_root(std::string& msg) {
  rng.seed(1002);
  const Tolerance tol;
  int done = 0;
  while (done < 100) {
    const double a = uniform(0.0, 100.0);
    if (a == 0.0) continue;
    ++done;
    const Polynomial p({1.0, 0.0, 0.0, 0.0, 0.0, -a});
    const auto sols = solve_real_roots(p, tol);
    if (sols.size() != 1) return fail(msg, "x^5 - a must have one real root");
    if (std::abs(sols[0].root - std::pow(a, 0.2)) > 1e-9)
      return fail(msg, "fifth root off at a = " + std::to_string(a));
    if (sols[0].fold_lines.size() != 3)
      return fail(msg, "fifth-root trace must use exactly 3 simultaneous folds");
    TraceBuilder builder;
    append_lill_step(builder, build_lill_path(p), sols[0], "");
    if (builder.trace().fold_width() != 3)
      return fail(msg, "trace fold width != 3");
    if (!verify(builder.trace(), tol).ok) return fail(msg, "fifth-root trace failed verify");
  }
  return true;
}

// --- 4: angle-section identity ----------------------------------------------

bool criterion_section_identity(std::string& msg) {
  rng.seed(1003);
  const Tolerance tol;
  // Pinned example first: trisection of 60 degrees against the arccos oracle.
  const MSectResult tri = m_sect(M_PI / 3.0, 3, tol);
  if (std::abs(tri.angle - M_PI / 9.0) > 1e-8) return fail(msg, "60/3 != 20 deg");
  if (std::abs(std::cos(tri.angle) - std::cos(M_PI / 9.0)) > 1e-10)
    return fail(msg, "cos(20 deg) mismatch");

  int done = 0;
  while (done < 200) {
    const double theta = uniform(0.0, M_PI);
    if (theta == 0.0 || theta == M_PI) continue;
    ++done;
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 19);
    const MSectResult r = m_sect(theta, m, tol);
    if (std::abs(static_cast<double>(m) * r.angle - theta) > static_cast<double>(m) * 1e-8)
      return fail(msg, "identity failed at theta = " + std::to_string(theta) +
                           ", m = " + std::to_string(m));
    std::int64_t pmax = 1;
    for (std::int64_t p : r.plan.prime_chain) pmax = std::max(pmax, p);
    const int want = static_cast<int>(std::max<std::int64_t>(1, pmax - 2));
    if (r.trace.fold_width() != want)
      return fail(msg, "fold width != max(1, p_max - 2) for m = " + std::to_string(m));
  }
  return true;
}

// --- 5: Chebyshev multiple-angle identity ------------------------------------

bool criterion_chebyshev(std::string& msg) {
  rng.seed(1004);
  for (int p = 0; p <= 13; ++p) {
    const Polynomial tp = chebyshev(p);
    for (int i = 0; i < 100; ++i) {
      const double alpha = uniform(0.0, 2.0 * M_PI);
      if (std::abs(tp.eval(std::cos(alpha)) - std::cos(p * alpha)) > 1e-10)
        return fail(msg, "identity broke at p = " + std::to_string(p));
    }
  }
  return true;
}

// --- 6: polygon vertex accuracy ----------------------------------------------

bool criterion_polygon_vertices(std::string& msg) {
  const Tolerance tol;
  for (std::int64_t m = 3; m <= 60; ++m) {
    const PolygonResult r = build_polygon(m, tol);
    for (std::int64_t k = 0; k < m; ++k) {
      const double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m);
      if (distance(r.vertices[static_cast<std::size_t>(k)],
                   {std::cos(ang), std::sin(ang)}) > 1e-8)
        return fail(msg, "vertex error > 1e-8 for m = " + std::to_string(m));
    }
    if (r.fold_width > r.report.required_n)
      return fail(msg, "fold width exceeded the sufficient budget for m = " +
                           std::to_string(m));
  }
  const PolygonResult big = build_polygon(199, tol);
  if (big.fold_width > 9) return fail(msg, "199-gon fold width > 9");
  for (std::int64_t k = 0; k < 199; ++k) {
    const double ang = 2.0 * M_PI * static_cast<double>(k) / 199.0;
    if (distance(big.vertices[static_cast<std::size_t>(k)],
                 {std::cos(ang), std::sin(ang)}) > 1e-6)
      return fail(msg, "199-gon vertex error > 1e-6");
  }
  return true;
}

// --- 7: period-tower integrity ------------------------------------------------

bool criterion_towers(std::string& msg) {
  for (std::int64_t p = 3; p <= 199; p += 2) {
    if (!is_prime(p)) continue;
    const PeriodTower t = build_period_tower(p);
    if (std::abs(static_cast<double>(t.levels[0][0]) + 1.0) > 1e-9)
      return fail(msg, "top sum != -1 for p = " + std::to_string(p));
    for (int level = 0; level + 1 < t.num_levels(); ++level) {
      const auto& parents = t.levels[static_cast<std::size_t>(level)];
      for (int c = 0; c < static_cast<int>(parents.size()); ++c) {
        real50 sum = 0;
        for (const real50& child : step_children(t, level, c)) sum += child;
        if (static_cast<double>(abs(sum - parents[static_cast<std::size_t>(c)])) > 1e-9)
          return fail(msg, "telescoping broke at p = " + std::to_string(p));
      }
    }
  }
  const Polynomial q17 = step_polynomial(build_period_tower(17), 0, 0);
  const std::vector<double> expect{1.0, 1.0, -4.0};
  for (std::size_t i = 0; i < expect.size(); ++i)
    if (std::abs(std::round(q17.coeffs()[i]) - expect[i]) > 0.0 ||
        std::abs(q17.coeffs()[i] - expect[i]) > 1e-9)
      return fail(msg, "p = 17 first step polynomial != x^2 + x - 4");
  return true;
}

// --- 8: axiom solver completeness ---------------------------------------------

AxiomInstance random_axiom_instance(int op) {
  const auto rp = [] { return Point{uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; };
  const auto rl = [] {
    const double phi = uniform(-M_PI / 2, M_PI / 2);
    return make_line(std::cos(phi), std::sin(phi), uniform(-2.0, 2.0));
  };
  while (true) {
    AxiomInstance inst;
    inst.op_id = op;
    switch (op) {
      case 1:
      case 4:
        inst.points = {rp(), rp()};
        if (distance(inst.points[0], inst.points[1]) < 0.1) continue;
        break;
      case 2:
        inst.lines = {rl(), rl()};
        if (line_residual(inst.lines[0], inst.lines[1]) < 0.1) continue;
        break;
      case 3:
        inst.lines = {rl()};
        break;
      case 5:
        inst.points = {rp()};
        inst.lines = {rl()};
        break;
      case 6:
        inst.points = {rp(), rp()};
        inst.lines = {rl()};
        if (std::abs(inst.lines[0].eval(inst.points[0])) < 0.1) continue;
        if (distance(inst.points[0], inst.points[1]) < 0.1) continue;
        break;
      case 7:
        inst.points = {rp(), rp()};
        inst.lines = {rl(), rl()};
        if (std::abs(inst.lines[0].eval(inst.points[0])) < 0.1) continue;
        if (std::abs(inst.lines[1].eval(inst.points[1])) < 0.1) continue;
        break;
      case 8:
        inst.points = {rp()};
        inst.lines = {rl(), rl()};
        if (std::abs(inst.lines[0].eval(inst.points[0])) < 0.1) continue;
        if (std::abs(inst.lines[0].a * inst.lines[1].b - inst.lines[1].a * inst.lines[0].b) <
            0.05)
          continue;
        break;
      default:
        break;
    }
    return inst;
  }
}

bool criterion_axioms(std::string& msg) {
  rng.seed(1005);
  const Tolerance tol;
  for (int op = 1; op <= 8; ++op) {
    for (int i = 0; i < 500; ++i) {
      const AxiomInstance inst = random_axiom_instance(op);
      const AxiomSolution sol = solve_axiom(inst, tol);
      for (const Line& f : sol.folds)
        if (axiom_residual(inst, f) > 1e-9)
          return fail(msg, "returned fold violates constraints for op " + std::to_string(op));
      if (op == 7) {
        if (sol.folds.size() > 3) return fail(msg, "op 7 returned more than 3 folds");
        const auto roots = nfold::testing::real_roots_oracle(op7_slope_cubic(inst), -1e4, 1e4);
        if (sol.folds.size() != roots.size())
          return fail(msg, "op 7 fold count != cubic real-root count");
      }
      if (sol.multiplicity_class == Multiplicity::finite) {
        for (const Line& found : nfold::testing::sweep_folds(inst)) {
          double best = 1e9;
          for (const Line& f : sol.folds)
            best = std::min(best, nfold::testing::fold_distance(found, f));
          if (best > 1e-8)
            return fail(msg, "sweep found a fold missed by op " + std::to_string(op));
        }
      }
    }
  }
  return true;
}

// --- 9: Gleason cross-check -----------------------------------------------------

bool criterion_gleason(std::string& msg) {
  for (std::int64_t m = 3; m <= 2000; ++m)
    for (int n = 1; n <= 12; ++n)
      if (!gleason_consistency(m, n))
        return fail(msg, "counterexample at m = " + std::to_string(m) +
                             ", n = " + std::to_string(n));
  return true;
}

// --- 10: trace and format determinism --------------------------------------------

bool criterion_formats(std::string& msg) {
  const Tolerance tol;
  const MSectResult tri = m_sect(M_PI / 3.0, 3, tol);
  const std::string bytes = emit_json(tri.trace);
  if (load_json(bytes) != tri.trace) return fail(msg, "JSON round trip not lossless");

  const PolygonResult penta = build_polygon(5, tol);
  if (load_json(emit_json(penta.trace)) != penta.trace)
    return fail(msg, "polygon JSON round trip not lossless");

  for (int i = 0; i < 3; ++i)
    if (emit_svg(tri.trace) != emit_svg(tri.trace))
      return fail(msg, "SVG emission not byte-identical");

  rng.seed(1006);
  for (int i = 0; i < 50; ++i) {
    FoldTrace bad = tri.trace;
    const std::size_t si = rng() % bad.steps.size();
    const std::size_t fi = rng() % bad.steps[si].folds.size();
    Line& f = bad.steps[si].folds[fi];
    const double bump = (rng() % 2 ? 1.0 : -1.0) * 1e-3;
    f = make_line(f.a, f.b, f.c + bump);
    if (verify(bad, tol).ok) return fail(msg, "1e-3 fold perturbation not caught");
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "constructibility predicates (11-section, 199-gon)", 1.0, criterion_predicates},
      {2, "Lill solver vs independent root oracle (1000 polynomials)", 30.0,
       criterion_lill_oracle},
      {3, "fifth roots with exactly 3 simultaneous folds", 5.0, criterion_fifth_root},
      {4, "m-section identity over 200 random angles", 60.0, criterion_section_identity},
      {5, "Chebyshev multiple-angle identity (p <= 13)", 1.0, criterion_chebyshev},
      {6, "polygon vertices for m = 3..60 and m = 199", 60.0, criterion_polygon_vertices},
      {7, "period-tower integrity for all odd primes <= 199", 30.0, criterion_towers},
      {8, "axiom solver completeness (500 instances per op)", 120.0, criterion_axioms},
      {9, "Gleason cross-check for m <= 2000, n <= 12", 10.0, criterion_gleason},
      {10, "trace/format determinism and fault detection", 5.0, criterion_formats},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.time_limit_s) {
      ok = false;
      detail = "exceeded time limit of " + std::to_string(c.time_limit_s) + " s";
    }
    std::printf("%s criterion %2d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title,
                secs, detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failed;
  }
  return failed;
}
