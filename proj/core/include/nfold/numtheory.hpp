#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nfold/errors.hpp"

namespace nfold {

/// Trial-division bound for factorize / euler_phi.
inline constexpr std::int64_t kFactorBound = 1'000'000'000;

struct Factorization {
  std::int64_t m = 1;
  std::vector<std::pair<std::int64_t, int>> factors;  // ascending primes

  std::int64_t largest_prime() const {
    return factors.empty() ? 1 : factors.back().first;
  }
};

Factorization factorize(std::int64_t m);
std::int64_t euler_phi(std::int64_t m);
bool is_prime(std::int64_t p);

/// Prime factors of m in ascending order with multiplicity.
std::vector<std::int64_t> prime_chain(std::int64_t m);

struct TotientReport {
  std::int64_t m = 0;
  std::int64_t phi = 0;
  Factorization phi_factors;
  std::int64_t largest_prime = 1;
  int required_n = 1;  // max(1, largest_prime - 2)
};

TotientReport totient_report(std::int64_t m);

/// Simultaneous folds sufficient to m-sect an angle: max(1, p_max(m) - 2).
int section_required_n(std::int64_t m);

/// Angle m-section feasible with n simultaneous folds: p_max(m) <= n + 2.
bool check_section(std::int64_t m, int n);

/// Regular m-gon feasible with n simultaneous folds: p_max(phi(m)) <= n + 2.
bool check_polygon(std::int64_t m, int n);
std::pair<bool, TotientReport> check_polygon_report(std::int64_t m, int n);

/// Sectionability of every prime factor of phi(m) must imply polygon
/// constructibility; evaluates that implication for one (m, n).
bool gleason_consistency(std::int64_t m, int n);

/// Smallest generator of the multiplicative group mod p (p odd prime),
/// certified by checking g^((p-1)/q) != 1 for every prime q | p-1.
std::int64_t primitive_root_mod(std::int64_t p);

}  // namespace nfold
