#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nfold/geometry.hpp"
#include "nfold/polynomial.hpp"
#include "nfold/trace.hpp"

namespace nfold {

/// How an m-section decomposes into prime steps and what fold budget the
/// decomposition needs.
struct SectionPlan {
  std::int64_t m = 2;
  std::vector<std::int64_t> prime_chain;  // ascending, with multiplicity
  int required_n = 1;                     // max over chain of max(1, p - 2)
  std::vector<int> per_step_budgets;
};

/// An angle in its three interchangeable guises.
struct AngleValue {
  double theta = 0.0;    // radians in (0, 2*pi)
  Line as_line;          // through the origin at angle theta mod pi
  Point as_cos_point;    // (cos theta, 0)

  static AngleValue from_radians(double theta);
};

/// Chebyshev polynomial of the first kind via the three-term recurrence;
/// exact integer coefficients.
Polynomial chebyshev(int p);

/// Fold construction of P = (cos theta, 0) from a line through the origin:
/// align the line onto the x-axis, then drop a perpendicular through the
/// image of Q = (1, 0).  A line coincident with the x-axis projects to
/// (1, 0) with an empty fold list.
std::pair<Point, FoldTrace> project_cos(const Line& ell, const Tolerance& tol = {});

/// Reverse construction: raise x in [-1, 1] to the line through the origin at
/// angle arccos(x), via a perpendicular through (x, 0) and the fold through O
/// placing Q = (1, 0) onto it (positive-y solution).
std::pair<Line, FoldTrace> unproject_cos(double x, const Tolerance& tol = {});

struct SectionResult {
  double angle = 0.0;
  FoldTrace trace;
};

/// Divide theta (radians in (0, pi]) into p equal parts, p prime, through the
/// degree-p Chebyshev equation solved by the Lill construction.  The trace
/// carries the cosine projection, the simultaneous Lill folds, and the
/// unprojection.
SectionResult p_sect(double theta, std::int64_t p, const Tolerance& tol = {});

struct MSectResult {
  double angle = 0.0;
  FoldTrace trace;
  SectionPlan plan;
};

/// General m-section: one p_sect per prime factor, ascending.  Angles in
/// (pi, 2*pi) are sectioned as their mirror image and reflected back, so the
/// result satisfies m * angle == theta (mod 2*pi).
MSectResult m_sect(double theta, std::int64_t m, const Tolerance& tol = {});

namespace detail {
struct FrameNames {
  std::string o, q, axis;
};
/// Register (or look up) the shared O, Q=(1,0), x-axis givens of a trace.
FrameNames ensure_frame(TraceBuilder& builder);

struct SectionStep {
  double angle;     // constructed angle
  Line line;        // through O at that angle
  Line half_line;   // through O at half that angle (the aligning fold)
};
/// Builder-level p-section used by the polygon constructor; appends all steps
/// under the given prefix and returns the constructed angle artifacts.
SectionStep p_sect_into(TraceBuilder& builder, const std::string& prefix, double theta,
                        std::int64_t p, const Tolerance& tol);
SectionStep unproject_into(TraceBuilder& builder, const std::string& prefix, double x,
                           const Tolerance& tol);
}  // namespace detail

}  // namespace nfold
