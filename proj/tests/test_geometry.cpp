#include <doctest.h>

#include <cmath>
#include <random>

#include "nfold/geometry.hpp"

using namespace nfold;

namespace {
std::mt19937_64 rng(20260811);
double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
Point random_point() { return {uniform(-5.0, 5.0), uniform(-5.0, 5.0)}; }
Line random_line() {
  const double phi = uniform(-M_PI / 2, M_PI / 2);
  return make_line(std::cos(phi), std::sin(phi), uniform(-4.0, 4.0));
}
}  // namespace

TEST_CASE("tolerance ordering is enforced") {
  CHECK_NOTHROW(Tolerance(1e-9, 1e-11, 1e-8));
  CHECK_THROWS_AS(Tolerance(1e-9, 1e-8, 1e-7), invalid_input);   // root > incidence
  CHECK_THROWS_AS(Tolerance(1e-7, 1e-9, 1e-8), invalid_input);   // incidence > report
  CHECK_THROWS_AS(Tolerance(0.0, 1e-11, 1e-8), invalid_input);
}

TEST_CASE("line normalization and canonical sign") {
  const Line l = make_line(3.0, 4.0, 10.0);
  CHECK(l.a == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(l.b == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(l.c == doctest::Approx(2.0).epsilon(1e-15));

  const Line flipped = make_line(-3.0, -4.0, -10.0);
  CHECK(flipped == l);

  // Vertical canonical: a = 0 forces b > 0.
  const Line horiz = make_line(0.0, -2.0, 4.0);
  CHECK(horiz.a == 0.0);
  CHECK(horiz.b == 1.0);
  CHECK(horiz.c == -2.0);

  CHECK_THROWS_AS(make_line(0.0, 0.0, 1.0), invalid_input);
}

TEST_CASE("canonicalization is idempotent") {
  for (int i = 0; i < 200; ++i) {
    const Line l = random_line();
    const Line again = make_line(l.a, l.b, l.c);
    CHECK(again.a == l.a);
    CHECK(again.b == l.b);
    CHECK(again.c == l.c);
  }
}

TEST_CASE("reflect_point basics") {
  const Line x1 = make_line(1.0, 0.0, -1.0);  // x = 1
  const Point img = reflect_point({0.0, 0.0}, x1);
  CHECK(img.x == doctest::Approx(2.0));
  CHECK(img.y == doctest::Approx(0.0));

  // Fixed point on the fold.
  const Point on = reflect_point({1.0, 7.0}, x1);
  CHECK(on.x == doctest::Approx(1.0));
  CHECK(on.y == doctest::Approx(7.0));

  // Diagonal through the origin swaps the axes.
  const Line diag = line_at_angle(M_PI / 4, {0.0, 0.0});
  const Point swapped = reflect_point({1.0, 0.0}, diag);
  CHECK(swapped.x == doctest::Approx(0.0));
  CHECK(swapped.y == doctest::Approx(1.0));
}

TEST_CASE("reflect_line basics") {
  const Line xaxis = make_line(0.0, 1.0, 0.0);
  const Line yaxis = make_line(1.0, 0.0, 0.0);
  CHECK(line_residual(reflect_line(xaxis, xaxis), xaxis) == doctest::Approx(0.0));
  CHECK(line_residual(reflect_line(xaxis, yaxis), xaxis) == doctest::Approx(0.0));
  const Line diag = line_at_angle(M_PI / 4, {0.0, 0.0});
  CHECK(line_residual(reflect_line(xaxis, diag), yaxis) == doctest::Approx(0.0));
}

TEST_CASE("intersection outcomes") {
  const Line xaxis = make_line(0.0, 1.0, 0.0);
  const Line yaxis = make_line(1.0, 0.0, 0.0);
  const auto hit = intersect(xaxis, yaxis);
  REQUIRE(hit.is_point());
  CHECK(hit.p.x == doctest::Approx(0.0));
  CHECK(hit.p.y == doctest::Approx(0.0));

  const Line y1 = make_line(0.0, 1.0, -1.0);
  CHECK(intersect(xaxis, y1).kind == LineIntersection::Kind::parallel_distinct);
  CHECK(intersect(xaxis, make_line(0.0, 2.0, 0.0)).kind == LineIntersection::Kind::coincident);
}

TEST_CASE("constructors and angles") {
  const Line l = line_through({0.0, 0.0}, {1.0, 0.0});
  CHECK(line_residual(l, make_line(0.0, 1.0, 0.0)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(line_through({1.0, 1.0}, {1.0, 1.0}), invalid_input);

  const Line perp = perpendicular_through(make_line(0.0, 1.0, 0.0), {3.0, 5.0});
  CHECK(perp.a == doctest::Approx(1.0));
  CHECK(perp.c == doctest::Approx(-3.0));

  CHECK(angle_of(make_line(1.0, -1.0, 0.0)) == doctest::Approx(M_PI / 4));
  for (int i = 0; i < 200; ++i) {
    const double theta = uniform(0.0, M_PI - 1e-9);
    const double got = angle_of(line_at_angle(theta, random_point()));
    CHECK(std::abs(got - theta) < 1e-11);
  }
}

TEST_CASE("reflection involution and isometry (randomized)") {
  const Tolerance tol;
  for (int i = 0; i < 500; ++i) {
    const Line f = random_line();
    const Point p = random_point();
    const Point q = random_point();
    const Point pp = reflect_point(reflect_point(p, f), f);
    CHECK(distance(pp, p) < tol.eps_root);
    CHECK(std::abs(distance(reflect_point(p, f), reflect_point(q, f)) - distance(p, q)) <
          tol.eps_root);
  }
}

TEST_CASE("reflect_line commutes with pointwise reflection") {
  const Tolerance tol;
  for (int i = 0; i < 200; ++i) {
    const Line s = random_line();
    const Line f = random_line();
    const Line image = reflect_line(s, f);
    for (int k = -2; k <= 2; ++k) {
      const Point on_s = s.anchor() + static_cast<double>(k) * s.direction();
      CHECK(std::abs(image.eval(reflect_point(on_s, f))) < tol.eps_incidence);
    }
  }
}
