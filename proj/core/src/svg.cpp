#include "nfold/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "nfold/errors.hpp"

namespace nfold {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct Box {
  double minx = 0.0, miny = 0.0, maxx = 0.0, maxy = 0.0;
  void include(Point p) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
};

/// Clip an infinite line to the box; false when it misses entirely.
bool clip_line(const Line& l, const Box& b, Point& p0, Point& p1) {
  const Point a = l.anchor();
  const Point d = l.direction();
  double t0 = -1e18, t1 = 1e18;
  const auto slab = [&](double av, double dv, double lo, double hi) {
    if (std::abs(dv) < 1e-15) return av >= lo - 1e-12 && av <= hi + 1e-12;
    double u0 = (lo - av) / dv, u1 = (hi - av) / dv;
    if (u0 > u1) std::swap(u0, u1);
    t0 = std::max(t0, u0);
    t1 = std::min(t1, u1);
    return true;
  };
  if (!slab(a.x, d.x, b.minx, b.maxx)) return false;
  if (!slab(a.y, d.y, b.miny, b.maxy)) return false;
  if (t0 > t1) return false;
  p0 = a + t0 * d;
  p1 = a + t1 * d;
  return true;
}

void emit_line(std::string& out, const Line& l, const Box& box, const std::string& cls) {
  Point p0, p1;
  if (!clip_line(l, box, p0, p1)) return;
  out += "<line class=\"" + cls + "\" x1=\"" + num(p0.x) + "\" y1=\"" + num(-p0.y) +
         "\" x2=\"" + num(p1.x) + "\" y2=\"" + num(-p1.y) + "\"/>\n";
}

void emit_point(std::string& out, const std::string& name, Point p, double r) {
  const bool vertex = name.rfind("vertex", 0) == 0;
  const std::string cls = vertex ? "point vertex" : "point";
  out += "<circle class=\"" + cls + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) +
         "\" r=\"" + num(r) + "\"/>\n";
  out += "<text class=\"label\" x=\"" + num(p.x + 1.5 * r) + "\" y=\"" + num(-p.y - 1.5 * r) +
         "\">" + name + "</text>\n";
}

}  // namespace

std::string emit_svg(const FoldTrace& trace, double viewport_px) {
  if (trace.steps.empty()) throw invalid_input("emit_svg: empty trace");

  Box box;
  bool any = false;
  const auto seed = [&](Point p) {
    if (!any) {
      box = Box{p.x, p.y, p.x, p.y};
      any = true;
    } else {
      box.include(p);
    }
  };
  for (const auto& [name, p] : trace.input_points) seed(p);
  for (const auto& s : trace.steps)
    for (const auto& [name, p] : s.derived_points) seed(p);
  if (!any) box = Box{-1.0, -1.0, 1.0, 1.0};
  const double extent = std::max({box.maxx - box.minx, box.maxy - box.miny, 1.0});
  const double margin = 0.05 * extent;
  box.minx -= margin;
  box.maxx += margin;
  box.miny -= margin;
  box.maxy += margin;

  const double w = box.maxx - box.minx;
  const double h = box.maxy - box.miny;
  const double stroke = std::max(w, h) / viewport_px * 1.5;
  const double marker = stroke * 2.5;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(viewport_px) + "\" height=\"" + num(viewport_px * h / w) + "\" viewBox=\"" +
         num(box.minx) + " " + num(-box.maxy) + " " + num(w) + " " + num(h) + "\">\n";
  out += "<style>\n";
  out += "line{stroke-width:" + num(stroke) + "}\n";
  out += ".given{stroke:#9aa0a6;stroke-dasharray:" + num(4 * stroke) + " " +
         num(3 * stroke) + "}\n";
  out += ".derived{stroke:#b58900;stroke-dasharray:" + num(2 * stroke) + " " +
         num(2 * stroke) + "}\n";
  out += ".fold{stroke:#d62728}\n";
  out += ".fold.lill_bundle{stroke:#1f77b4}\n";
  out += ".fold.projection{stroke:#2ca02c}\n";
  out += ".fold.rotation{stroke:#9467bd}\n";
  out += ".fold.edge{stroke:#111111}\n";
  out += ".point{fill:#000000}\n";
  out += ".point.vertex{fill:#d62728}\n";
  out += ".label{font-family:monospace;font-size:" + num(8 * stroke) + "px;fill:#444444}\n";
  out += "</style>\n";

  for (const auto& [name, l] : trace.input_lines) emit_line(out, l, box, "given");
  for (const auto& s : trace.steps) {
    const std::string cls = std::string("fold ") + to_string(s.kind);
    for (const Line& f : s.folds) emit_line(out, f, box, cls);
    for (const auto& [name, l] : s.derived_lines) emit_line(out, l, box, "derived");
  }
  for (const auto& [name, p] : trace.input_points) emit_point(out, name, p, marker);
  for (const auto& s : trace.steps)
    for (const auto& [name, p] : s.derived_points) emit_point(out, name, p, marker);

  out += "</svg>\n";
  return out;
}

}  // namespace nfold
