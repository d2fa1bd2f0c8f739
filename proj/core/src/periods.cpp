#include "nfold/periods.hpp"

namespace nfold {

namespace {

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t acc = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) acc = static_cast<std::int64_t>(static_cast<__int128>(acc) * base % mod);
    base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % mod);
    exp >>= 1;
  }
  return acc;
}

}  // namespace

std::vector<std::vector<double>> PeriodTower::levels_d() const {
  std::vector<std::vector<double>> out;
  out.reserve(levels.size());
  for (const auto& level : levels) {
    std::vector<double> row;
    row.reserve(level.size());
    for (const real50& v : level) row.push_back(static_cast<double>(v));
    out.push_back(std::move(row));
  }
  return out;
}

PeriodTower build_period_tower(std::int64_t p, const Tolerance& tol) {
  (void)tol;
  if (!is_prime(p) || p < 3)
    throw invalid_input("build_period_tower: p must be an odd prime");
  PeriodTower tower;
  tower.p = p;
  tower.generator = primitive_root_mod(p);
  const std::int64_t h = (p - 1) / 2;
  tower.level_degrees = prime_chain(h);  // ascending

  // Base values in generator-power order; g^j and g^(j+h) = -g^j share a
  // cosine, so j runs over 0..h-1.
  const real50 two_pi = 2 * acos(real50(-1));
  std::vector<real50> base(static_cast<std::size_t>(h));
  for (std::int64_t j = 0; j < h; ++j) {
    const std::int64_t k = powmod(tower.generator, j, p);
    base[static_cast<std::size_t>(j)] = 2 * cos(two_pi * k / p);
  }

  // Level j groups indices of equal residue mod D_j = d_1*...*d_j.
  std::int64_t d_level = 1;
  tower.levels.push_back({});
  {
    real50 total = 0;
    for (const real50& v : base) total += v;
    tower.levels[0].push_back(total);
  }
  for (std::int64_t deg : tower.level_degrees) {
    d_level *= deg;
    std::vector<real50> level(static_cast<std::size_t>(d_level), real50(0));
    for (std::int64_t j = 0; j < h; ++j)
      level[static_cast<std::size_t>(j % d_level)] += base[static_cast<std::size_t>(j)];
    tower.levels.push_back(std::move(level));
  }
  return tower;
}

std::vector<real50> step_children(const PeriodTower& tower, int level, int parent_index) {
  if (tower.level_degrees.empty()) {
    if (level != 0 || parent_index != 0)
      throw invalid_input("step_children: trivial tower has a single position");
    return {tower.levels[0][0]};
  }
  if (level < 0 || level + 1 >= tower.num_levels())
    throw invalid_input("step_children: level out of range");
  const std::int64_t d_parent = static_cast<std::int64_t>(tower.levels[static_cast<std::size_t>(level)].size());
  if (parent_index < 0 || parent_index >= d_parent)
    throw invalid_input("step_children: parent index out of range");
  const std::int64_t deg = tower.level_degrees[static_cast<std::size_t>(level)];
  const auto& next = tower.levels[static_cast<std::size_t>(level + 1)];
  std::vector<real50> children;
  children.reserve(static_cast<std::size_t>(deg));
  for (std::int64_t i = 0; i < deg; ++i)
    children.push_back(next[static_cast<std::size_t>(parent_index + i * d_parent)]);
  return children;
}

Polynomial step_polynomial(const PeriodTower& tower, int level, int parent_index) {
  const std::vector<real50> children = step_children(tower, level, parent_index);
  // Monic expansion of prod (x - child) in extended precision.
  std::vector<real50> coeffs{real50(1)};
  for (const real50& r : children) {
    std::vector<real50> next(coeffs.size() + 1, real50(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i] += coeffs[i];
      next[i + 1] -= coeffs[i] * r;
    }
    coeffs = std::move(next);
  }
  std::vector<double> rounded;
  rounded.reserve(coeffs.size());
  for (const real50& c : coeffs) rounded.push_back(static_cast<double>(c));
  return Polynomial(std::move(rounded));
}

}  // namespace nfold
