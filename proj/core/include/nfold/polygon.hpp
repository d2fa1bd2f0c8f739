#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nfold/geometry.hpp"
#include "nfold/numtheory.hpp"
#include "nfold/trace.hpp"

namespace nfold {

struct PolygonResult {
  std::int64_t m = 3;
  std::vector<Point> vertices;  // unit circle, ascending angle, vertices[0] = (1, 0)
  FoldTrace trace;
  int fold_width = 1;
  TotientReport report;
};

/// Construct cos(2*pi/p) for an odd prime p by walking its Gaussian-period
/// tower root-first: one simultaneous-fold Lill solve per level, root selected
/// by proximity to the extended-precision target period, then a single fold
/// halving the final period 2*cos(2*pi/p).
std::pair<double, FoldTrace> construct_cos_prime(std::int64_t p, const Tolerance& tol = {});

/// Single-fold rotation primitive: the fold through O and theta_point sends a
/// point at angle v to angle 2*theta - v; composing it with the fold along the
/// x-axis rotates by 2*theta.  theta_point must sit on the unit circle.  The
/// returned step uses the literal names "O", "P", "P_img"; trace integrators
/// rename them.
std::pair<Point, FoldStep> rotate_by_fold(Point pt, Point theta_point,
                                          const Tolerance& tol = {});

/// Full regular-m-gon construction: period towers for the odd primes, repeated
/// p-section for prime powers, coprime composition through integer (Bezout)
/// rotation counts, vertex generation by fold rotations, and single-fold edge
/// creases.
PolygonResult build_polygon(std::int64_t m, const Tolerance& tol = {});

}  // namespace nfold
