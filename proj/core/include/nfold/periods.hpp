#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <vector>

#include "nfold/geometry.hpp"
#include "nfold/numtheory.hpp"
#include "nfold/polynomial.hpp"

namespace nfold {

/// 50-decimal-digit binary float for the period arithmetic.
using real50 = boost::multiprecision::cpp_bin_float_50;

/// Real Gaussian-period tower of the half-residue classes mod an odd prime.
///
/// The (p-1)/2 base values are 2*cos(2*pi*g^j / p), ordered by powers of the
/// smallest primitive root g.  level_degrees is the ascending prime
/// factorization of (p-1)/2; level j holds d_1*...*d_j period sums indexed by
/// the residue of j mod that product, level 0 being the single full sum (-1)
/// and the last level the individual 2-cosine values.
struct PeriodTower {
  std::int64_t p = 3;
  std::int64_t generator = 2;
  std::vector<std::int64_t> level_degrees;
  std::vector<std::vector<real50>> levels;

  int num_levels() const { return static_cast<int>(levels.size()); }
  /// Levels rounded to working precision.
  std::vector<std::vector<double>> levels_d() const;
};

PeriodTower build_period_tower(std::int64_t p, const Tolerance& tol = {});

/// Monic polynomial (working precision) whose roots are the children of the
/// given parent period, coefficients formed as elementary symmetric functions
/// of the extended-precision children.  For the trivial tower (p = 3) this is
/// the linear anchor x + 1.
Polynomial step_polynomial(const PeriodTower& tower, int level, int parent_index);

/// Extended-precision child values for one tower position (root-selection
/// targets during construction).
std::vector<real50> step_children(const PeriodTower& tower, int level, int parent_index);

}  // namespace nfold
