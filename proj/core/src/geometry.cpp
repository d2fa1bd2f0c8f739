#include "nfold/geometry.hpp"

#include <cmath>

namespace nfold {

namespace {
constexpr double kDegenerateNorm = 1e-14;
}

Line make_line(double a, double b, double c) {
  const double n = std::hypot(a, b);
  if (!(n > kDegenerateNorm) || !std::isfinite(n) || !std::isfinite(c))
    throw invalid_input("degenerate line coefficients");
  a /= n;
  b /= n;
  c /= n;
  if (a < 0.0 || (a == 0.0 && b < 0.0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  // -0.0 would break canonical-form comparisons.
  if (a == 0.0) a = 0.0;
  if (b == 0.0) b = 0.0;
  if (c == 0.0) c = 0.0;
  return Line{a, b, c};
}

Line line_through(Point p, Point q, const Tolerance& tol) {
  if (distance(p, q) <= tol.eps_incidence)
    throw invalid_input("line_through: coincident points");
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  // Normal (-dy, dx); c chosen so p is on the line.
  return make_line(-dy, dx, dy * p.x - dx * p.y);
}

Line line_point_direction(Point p, double dx, double dy) {
  return make_line(-dy, dx, dy * p.x - dx * p.y);
}

Line perpendicular_through(const Line& l, Point p) {
  // Direction of the perpendicular is the normal of l.
  return line_point_direction(p, l.a, l.b);
}

Line line_at_angle(double theta, Point p) {
  return line_point_direction(p, std::cos(theta), std::sin(theta));
}

double angle_of(const Line& l) {
  const Point d = l.direction();
  double theta = std::atan2(d.y, d.x);
  if (theta < 0.0) theta += M_PI;
  if (theta >= M_PI) theta -= M_PI;
  return theta;
}

Point reflect_point(Point p, const Line& fold) {
  const double d = fold.eval(p);
  return {p.x - 2.0 * d * fold.a, p.y - 2.0 * d * fold.b};
}

Line reflect_line(const Line& s, const Line& fold) {
  const Point x0 = reflect_point(s.anchor(), fold);
  const Point x1 = reflect_point(s.anchor() + s.direction(), fold);
  return line_point_direction(x0, x1.x - x0.x, x1.y - x0.y);
}

LineIntersection intersect(const Line& l1, const Line& l2, const Tolerance& tol) {
  const double det = l1.a * l2.b - l2.a * l1.b;
  if (std::abs(det) > tol.eps_incidence) {
    const double x = (l1.b * l2.c - l2.b * l1.c) / det;
    const double y = (l2.a * l1.c - l1.a * l2.c) / det;
    return {LineIntersection::Kind::point, {x, y}};
  }
  // Parallel within tolerance: coincident iff anchors of one lie on the other.
  const double off = std::abs(l2.eval(l1.anchor()));
  if (off <= tol.eps_incidence)
    return {LineIntersection::Kind::coincident, {}};
  return {LineIntersection::Kind::parallel_distinct, {}};
}

double line_residual(const Line& l, const Line& m) {
  const Point x0 = l.anchor();
  const Point x1 = x0 + l.direction();
  return std::max(std::abs(m.eval(x0)), std::abs(m.eval(x1)));
}

double normalize_angle(double theta) {
  const double two_pi = 2.0 * M_PI;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return t;
}

}  // namespace nfold
