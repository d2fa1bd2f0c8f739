#include "nfold/numtheory.hpp"

namespace nfold {

namespace {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % mod);
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

Factorization factorize(std::int64_t m) {
  if (m < 1 || m > kFactorBound)
    throw unsupported_input("factorize: m outside [1, 10^9]");
  Factorization f;
  f.m = m;
  std::int64_t n = m;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.factors.emplace_back(d, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::int64_t euler_phi(std::int64_t m) {
  const Factorization f = factorize(m);
  std::int64_t phi = 1;
  for (const auto& [p, e] : f.factors) {
    std::int64_t pe = 1;
    for (int i = 1; i < e; ++i) pe *= p;
    phi *= pe * (p - 1);
  }
  return phi;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  const Factorization f = factorize(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

std::vector<std::int64_t> prime_chain(std::int64_t m) {
  std::vector<std::int64_t> chain;
  for (const auto& [p, e] : factorize(m).factors)
    for (int i = 0; i < e; ++i) chain.push_back(p);
  return chain;
}

TotientReport totient_report(std::int64_t m) {
  if (m < 1) throw invalid_input("totient_report: m must be >= 1");
  TotientReport r;
  r.m = m;
  r.phi = euler_phi(m);
  r.phi_factors = factorize(r.phi);
  r.largest_prime = r.phi_factors.largest_prime();
  r.required_n = static_cast<int>(std::max<std::int64_t>(1, r.largest_prime - 2));
  return r;
}

int section_required_n(std::int64_t m) {
  if (m < 2) throw invalid_input("section_required_n: m must be >= 2");
  return static_cast<int>(std::max<std::int64_t>(1, factorize(m).largest_prime() - 2));
}

bool check_section(std::int64_t m, int n) {
  if (m < 2) throw invalid_input("check_section: m must be >= 2");
  if (n < 1) throw invalid_input("check_section: n must be >= 1");
  return factorize(m).largest_prime() <= static_cast<std::int64_t>(n) + 2;
}

bool check_polygon(std::int64_t m, int n) {
  return check_polygon_report(m, n).first;
}

std::pair<bool, TotientReport> check_polygon_report(std::int64_t m, int n) {
  if (m < 3) throw invalid_input("check_polygon: m must be >= 3");
  if (n < 1) throw invalid_input("check_polygon: n must be >= 1");
  TotientReport r = totient_report(m);
  return {r.largest_prime <= static_cast<std::int64_t>(n) + 2, r};
}

bool gleason_consistency(std::int64_t m, int n) {
  if (m < 3) throw invalid_input("gleason_consistency: m must be >= 3");
  const TotientReport r = totient_report(m);
  bool all_sectionable = true;
  for (const auto& [q, e] : r.phi_factors.factors) {
    (void)e;
    if (!check_section(q, n)) {
      all_sectionable = false;
      break;
    }
  }
  return !all_sectionable || check_polygon(m, n);
}

std::int64_t primitive_root_mod(std::int64_t p) {
  if (!is_prime(p) || p < 3)
    throw invalid_input("primitive_root_mod: p must be an odd prime");
  const Factorization f = factorize(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (const auto& [q, e] : f.factors) {
      (void)e;
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw numeric_failure("primitive_root_mod: no generator found");
}

}  // namespace nfold
