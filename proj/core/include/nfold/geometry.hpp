#pragma once

#include <cmath>

#include "nfold/errors.hpp"

namespace nfold {

/// Tolerance knobs threaded through every module.
///
/// eps_root <= eps_incidence <= eps_report must hold; the constructor
/// enforces it.
struct Tolerance {
  double eps_incidence = 1e-9;  // incidence / constraint residuals
  double eps_root = 1e-11;      // root refinement target
  double eps_report = 1e-8;     // end-to-end reported accuracy

  constexpr Tolerance() = default;
  Tolerance(double incidence, double root, double report)
      : eps_incidence(incidence), eps_root(root), eps_report(report) {
    validate();
  }

  void validate() const {
    if (!(eps_root > 0.0 && eps_incidence > 0.0 && eps_report > 0.0))
      throw invalid_input("tolerances must be strictly positive");
    if (!(eps_root <= eps_incidence && eps_incidence <= eps_report))
      throw invalid_input("tolerance ordering violated: need eps_root <= eps_incidence <= eps_report");
  }

  /// Uniform rescale keeping the default ratios (CLI --tol).
  static Tolerance scaled(double eps_incidence_value) {
    return Tolerance(eps_incidence_value, eps_incidence_value * 1e-2,
                     eps_incidence_value * 10.0);
  }
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

  constexpr double dot(Point o) const { return x * o.x + y * o.y; }
  constexpr double cross(Point o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(Point a, Point b) { return (a - b).norm(); }

/// Oriented line a*x + b*y + c = 0 kept in canonical normalized form:
/// a^2 + b^2 = 1 and (a > 0, or a == 0 and b > 0).
struct Line {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;

  friend constexpr bool operator==(const Line& l, const Line& r) {
    return l.a == r.a && l.b == r.b && l.c == r.c;
  }

  /// Signed distance of a point from the line.
  constexpr double eval(Point p) const { return a * p.x + b * p.y + c; }

  /// Unit direction vector (-b, a).
  constexpr Point direction() const { return {-b, a}; }
  /// Unit normal vector (a, b).
  constexpr Point normal() const { return {a, b}; }

  /// Foot of the perpendicular from the origin; a concrete point on the line.
  constexpr Point anchor() const { return {-c * a, -c * b}; }
};

/// Normalize (a, b, c) into canonical form.  Throws on a degenerate
/// direction (a and b both ~0).
Line make_line(double a, double b, double c);

/// Line through two distinct points (distance must exceed tol.eps_incidence).
Line line_through(Point p, Point q, const Tolerance& tol = {});

/// Line through p with direction (dx, dy).
Line line_point_direction(Point p, double dx, double dy);

/// Perpendicular to l passing through p.
Line perpendicular_through(const Line& l, Point p);

/// Line through p whose direction makes angle theta with the +x axis.
Line line_at_angle(double theta, Point p);

/// Direction angle of a line, in [0, pi).
double angle_of(const Line& l);

/// Mirror image of a point across a fold line.
Point reflect_point(Point p, const Line& fold);

/// Image of a whole line under reflection across a fold line, renormalized.
Line reflect_line(const Line& s, const Line& fold);

struct LineIntersection {
  enum class Kind { point, parallel_distinct, coincident };
  Kind kind = Kind::point;
  Point p{};  // valid only when kind == point

  bool is_point() const { return kind == Kind::point; }
};

/// Intersection of two lines; parallel-distinct and coincident are
/// distinguished outcomes, not failures.
LineIntersection intersect(const Line& l1, const Line& l2, const Tolerance& tol = {});

/// Residual between two lines measured geometrically: max distance from two
/// probe points of `l` (anchor and anchor + direction) to `m`.  Zero iff the
/// lines coincide; insensitive to the canonical sign.
double line_residual(const Line& l, const Line& m);

/// Wrap an angle into [0, 2*pi).
double normalize_angle(double theta);

}  // namespace nfold
