#include <doctest.h>

#include <cmath>
#include <random>

#include "nfold/section.hpp"
#include "nfold/verify.hpp"
#include "support/root_oracle.hpp"

using namespace nfold;

namespace {
std::mt19937_64 rng(0x5ec7104);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
}  // namespace

TEST_CASE("chebyshev polynomials of the first kind") {
  CHECK(chebyshev(0) == Polynomial({1.0}));
  CHECK(chebyshev(1) == Polynomial({1.0, 0.0}));
  CHECK(chebyshev(2) == Polynomial({2.0, 0.0, -1.0}));
  CHECK(chebyshev(3) == Polynomial({4.0, 0.0, -3.0, 0.0}));
  CHECK_THROWS_AS(chebyshev(-1), invalid_input);
}

TEST_CASE("multiple-angle identity T_p(cos a) = cos(p a)") {
  for (int p = 0; p <= 13; ++p) {
    const Polynomial tp = chebyshev(p);
    for (int i = 0; i < 100; ++i) {
      const double alpha = uniform(0.0, M_PI);
      CHECK(std::abs(tp.eval(std::cos(alpha)) - std::cos(p * alpha)) <= 1e-10);
    }
  }
}

TEST_CASE("angle value representations agree") {
  for (int i = 0; i < 100; ++i) {
    const double theta = uniform(1e-6, 2 * M_PI - 1e-6);
    const AngleValue v = AngleValue::from_radians(theta);
    CHECK(v.theta == doctest::Approx(theta));
    const double line_angle = angle_of(v.as_line);
    const double expect = std::fmod(theta, M_PI);
    CHECK(std::abs(std::remainder(line_angle - expect, M_PI)) < 1e-9);
    CHECK(v.as_cos_point.x == doctest::Approx(std::cos(theta)));
    CHECK(v.as_cos_point.y == 0.0);
  }
  CHECK_THROWS_AS(AngleValue::from_radians(0.0), invalid_input);
}

TEST_CASE("project_cos drops the cosine foot") {
  const Tolerance tol;
  const auto [p45, t45] = project_cos(line_at_angle(M_PI / 4, {0.0, 0.0}), tol);
  CHECK(p45.x == doctest::Approx(std::sqrt(0.5)));
  CHECK(p45.y == 0.0);
  CHECK(verify(t45, tol).ok);
  CHECK(t45.fold_width() == 1);

  const auto [p90, t90] = project_cos(make_line(1.0, 0.0, 0.0), tol);
  CHECK(p90.x == doctest::Approx(0.0));

  const auto [p60, t60] = project_cos(line_at_angle(M_PI / 3, {0.0, 0.0}), tol);
  CHECK(p60.x == doctest::Approx(0.5));

  // Coincident with the x-axis: theta = 0, no folds.
  const auto [p0, t0] = project_cos(make_line(0.0, 1.0, 0.0), tol);
  CHECK(p0.x == doctest::Approx(1.0));
  CHECK(t0.steps.empty());

  CHECK_THROWS_AS(project_cos(make_line(0.0, 1.0, -1.0), tol), invalid_input);
}

TEST_CASE("unproject_cos raises the angle") {
  const Tolerance tol;
  const auto [l60, t60] = unproject_cos(0.5, tol);
  CHECK(angle_of(l60) == doctest::Approx(M_PI / 3));
  CHECK(verify(t60, tol).ok);

  const auto [l0, t0] = unproject_cos(1.0, tol);
  CHECK(line_residual(l0, make_line(0.0, 1.0, 0.0)) < 1e-12);

  const auto [l20, t20] = unproject_cos(std::cos(M_PI / 9), tol);
  CHECK(angle_of(l20) == doctest::Approx(M_PI / 9));

  CHECK_THROWS_AS(unproject_cos(1.5, tol), invalid_input);
}

TEST_CASE("p_sect trisects 60 degrees through the Chebyshev cubic") {
  const Tolerance tol;
  const SectionResult r = p_sect(M_PI / 3, 3, tol);
  CHECK(r.angle == doctest::Approx(M_PI / 9).epsilon(1e-10));
  // Root of 4x^3 - 3x = 1/2 selected as cos(20 deg): cross-check by bisection.
  const auto roots = nfold::testing::real_roots_oracle({4.0, 0.0, -3.0, -0.5}, -1.0, 1.0);
  REQUIRE(!roots.empty());
  CHECK(std::cos(r.angle) == doctest::Approx(roots.back()).epsilon(1e-10));
  CHECK(std::abs(roots.back() - 0.9396926207859084) < 1e-12);
  CHECK(verify(r.trace, tol).ok);
  CHECK(r.trace.fold_width() == 1);
}

TEST_CASE("p_sect bisects the right angle") {
  const SectionResult r = p_sect(M_PI / 2, 2);
  CHECK(r.angle == doctest::Approx(M_PI / 4));
  CHECK(r.trace.fold_width() == 1);
}

TEST_CASE("p_sect handles the straight angle (double Chebyshev root)") {
  const SectionResult r = p_sect(M_PI, 2);
  CHECK(r.angle == doctest::Approx(M_PI / 2));
}

TEST_CASE("p_sect eleven-section needs nine simultaneous folds") {
  const Tolerance tol;
  const SectionResult r = p_sect(1.0, 11, tol);
  CHECK(r.angle == doctest::Approx(1.0 / 11).epsilon(1e-9));
  CHECK(r.trace.fold_width() == 9);
  CHECK(verify(r.trace, tol).ok);
}

TEST_CASE("p_sect validates input") {
  CHECK_THROWS_AS(p_sect(1.0, 4), invalid_input);    // not prime
  CHECK_THROWS_AS(p_sect(-1.0, 3), invalid_input);   // out of range
  CHECK_THROWS_AS(p_sect(3.5, 3), invalid_input);    // beyond pi
}

TEST_CASE("m_sect plan and quarters") {
  const MSectResult r = m_sect(M_PI / 3, 4);
  CHECK(r.angle == doctest::Approx(M_PI / 12));
  CHECK(r.plan.prime_chain == std::vector<std::int64_t>{2, 2});
  CHECK(r.plan.required_n == 1);

  const MSectResult r11 = m_sect(1.0, 11);
  CHECK(r11.plan.required_n == 9);
  CHECK(r11.trace.fold_width() == 9);

  const MSectResult r5 = m_sect(1.0, 5);
  CHECK(r5.plan.required_n == 3);

  CHECK_THROWS_AS(m_sect(1.0, 1), invalid_input);
  CHECK_THROWS_AS(m_sect(0.0, 3), invalid_input);
}

TEST_CASE("m_sect section identity (randomized)") {
  const Tolerance tol;
  for (int i = 0; i < 60; ++i) {
    const double theta = uniform(1e-3, M_PI - 1e-3);
    const std::int64_t m = 2 + static_cast<std::int64_t>(rng() % 19);
    const MSectResult r = m_sect(theta, m, tol);
    CHECK(std::abs(static_cast<double>(m) * r.angle - theta) <
          static_cast<double>(m) * tol.eps_report);
    CHECK(verify(r.trace, tol).ok);
    int expect_width = 1;
    for (std::int64_t p : r.plan.prime_chain)
      expect_width = std::max(expect_width, static_cast<int>(std::max<std::int64_t>(1, p - 2)));
    CHECK(r.trace.fold_width() == expect_width);
  }
}

TEST_CASE("p_sect root selection stays in (0, pi/p)") {
  const Tolerance tol;
  for (int i = 0; i < 40; ++i) {
    const double theta = uniform(1e-3, M_PI);
    for (std::int64_t p : {2, 3, 5, 7, 11}) {
      const SectionResult r = p_sect(theta, p, tol);
      CHECK(r.angle > 0.0);
      CHECK(r.angle <= M_PI / static_cast<double>(p) + 1e-12);
      // The selected Chebyshev root is the largest in [-1, 1].
      CHECK(std::cos(r.angle) >= std::cos(theta / static_cast<double>(p)) - 1e-9);
    }
  }
}

TEST_CASE("unproject_cos lower edge") {
  const auto [l, t] = unproject_cos(-1.0);
  CHECK(angle_of(l) == doctest::Approx(0.0).epsilon(1e-12));  // line at angle pi == x-axis
  CHECK(verify(t).ok);
}

TEST_CASE("m_sect reflex angles section the mirror image") {
  const double theta = 4.0;  // > pi
  const MSectResult r = m_sect(theta, 3);
  const double expected = 2.0 * M_PI - (2.0 * M_PI - theta) / 3.0;
  CHECK(r.angle == doctest::Approx(expected));
  // m * angle == theta (mod 2 pi)
  const double wrapped = std::fmod(3.0 * r.angle, 2.0 * M_PI);
  CHECK(wrapped == doctest::Approx(theta).epsilon(1e-9));
  CHECK(verify(r.trace).ok);
}
