#pragma once

#include <vector>

#include "nfold/geometry.hpp"
#include "nfold/polynomial.hpp"
#include "nfold/trace.hpp"

namespace nfold {

/// Right-angle coefficient path of a degree-m polynomial: m+1 segments from
/// the origin O to a terminus T.  Segment k runs along direction i^k (a fixed
/// left turn at every vertex) with signed length a_{m-k}; zero coefficients
/// leave a zero-length vertex but still turn.
struct LillPath {
  Polynomial poly;
  std::vector<Point> vertices;    // V_0 = O .. V_{m+1} = T
  std::vector<int> segment_signs; // sign(a_{m-k}), in {-1, 0, +1}

  Point origin() const { return vertices.front(); }
  Point terminus() const { return vertices.back(); }
};

LillPath build_lill_path(const Polynomial& p);

/// Signed distance by which the reflected shooting path through `path`,
/// launched from O at angle theta against the first segment direction,
/// misses the terminus along the last direction line.  Equals -p(-tan theta).
/// Throws invalid_input when |theta| >= pi/2 (pivot at infinity).
double miss_function(const LillPath& path, double theta);

/// One real root realized geometrically: the launch angle, the simultaneous
/// fold lines chi_1..chi_{max(1,m-2)}, and the pivot points A, B, C, ... of
/// the shot path.  residual is |p(root)| relative to the Horner magnitude of
/// the evaluation.
struct LillSolution {
  double root = 0.0;
  double theta = 0.0;
  std::vector<Line> fold_lines;
  std::vector<Point> pivot_points;
  double residual = 0.0;
};

struct LillOptions {
  int grid_samples = 4096;  // theta scan density over (-pi/2, pi/2)
};

/// Scan-and-bisect root construction.  Returns one solution per distinct real
/// root reachable in the scan window (roots beyond tan of the outermost grid
/// sample are out of range; rescale the polynomial to bring them in).  Double
/// roots appear once, located through the tangential zero of the miss
/// function.  Deterministic for a fixed grid.
std::vector<LillSolution> solve_real_roots(const Polynomial& p, const Tolerance& tol = {},
                                           const LillOptions& opts = {});

/// max(1, degree - 2) simultaneous folds per Lill construction.
int fold_budget(int degree);

/// Append the fold bundle of one solution to a trace: registers O, T, the
/// direction lines, the offset lines p and q, the pivot points, and the
/// incidence constraints tying them together.  Returns the step name.
std::string append_lill_step(TraceBuilder& builder, const LillPath& path,
                             const LillSolution& sol, const std::string& prefix);

}  // namespace nfold
