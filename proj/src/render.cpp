#include "colorcode/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace colorcode {

namespace {

constexpr double kUnitX = 24.0;
constexpr double kUnitY = 36.0;
constexpr double kMargin = 30.0;

const char* fill_of(Color c) {
  switch (c) {
    case Color::Red:
      return "#e06666";
    case Color::Green:
      return "#6aa84f";
    case Color::Blue:
      return "#6d9eeb";
  }
  return "#000000";
}

const char* stroke_of(Color c) {
  switch (c) {
    case Color::Red:
      return "#990000";
    case Color::Green:
      return "#274e13";
    case Color::Blue:
      return "#1c4587";
  }
  return "#000000";
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

class Canvas {
 public:
  explicit Canvas(const ColoredLattice& lattice) : lattice_(lattice) {
    for (const Vertex& v : lattice.vertices()) {
      max_x_ = std::max(max_x_, v.x);
      max_y_ = std::max(max_y_, v.y);
    }
    if (lattice.is_torus()) {
      period_x_ = 2 * lattice.geometry().bricks_x;
      period_y_ = lattice.geometry().rows;
    }
  }

  // Vertex position unwrapped to lie next to (near_x, near_y).
  std::array<double, 2> near(int v, double near_x, double near_y) const {
    double x = lattice_.vertex(v).x;
    double y = lattice_.vertex(v).y;
    if (period_x_ > 0) {
      x += period_x_ * std::round((near_x - x) / period_x_);
      y += period_y_ * std::round((near_y - y) / period_y_);
    }
    return {x, y};
  }

  std::string point(std::array<double, 2> p) const {
    return fmt(kMargin + p[0] * kUnitX) + "," + fmt(kMargin + (height_units() - p[1]) * kUnitY);
  }

  double width_units() const { return period_x_ > 0 ? period_x_ + 2 : max_x_; }
  double height_units() const { return period_y_ > 0 ? period_y_ + 1 : max_y_; }

 private:
  const ColoredLattice& lattice_;
  int max_x_ = 0;
  int max_y_ = 0;
  int period_x_ = 0;
  int period_y_ = 0;
};

}  // namespace

std::string render_svg(const ColoredLattice& lattice, const RenderOverlay& overlay) {
  const Canvas canvas(lattice);
  std::ostringstream out;
  const double width = 2 * kMargin + canvas.width_units() * kUnitX;
  const double height = 2 * kMargin + canvas.height_units() * kUnitY;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
      << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
  out << "<g id=\"faces\">\n";

  auto face_points = [&](int f) {
    const auto center = lattice.face_center(f);
    std::string pts;
    for (int v : lattice.face(f).vertices) {
      if (!pts.empty()) pts += ' ';
      pts += canvas.point(canvas.near(v, center[0], center[1]));
    }
    return pts;
  };

  for (int f = 0; f < lattice.num_faces(); ++f) {
    out << "<polygon class=\"face\" data-face=\"" << f << "\" points=\"" << face_points(f) << "\" fill=\""
        << fill_of(lattice.face(f).color) << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  out << "</g>\n<g id=\"strings\">\n";
  for (const ColorString& s : overlay.strings) {
    std::string pts;
    double px = 0;
    double py = 0;
    if (!s.vertices.empty()) {
      px = lattice.vertex(s.vertices.front()).x;
      py = lattice.vertex(s.vertices.front()).y;
    }
    for (int v : s.vertices) {
      const auto p = canvas.near(v, px, py);
      px = p[0];
      py = p[1];
      if (!pts.empty()) pts += ' ';
      pts += canvas.point(p);
    }
    out << "<polyline class=\"string\" points=\"" << pts << "\" fill=\"none\" stroke=\"" << stroke_of(s.color)
        << "\" stroke-width=\"5\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
  }
  out << "</g>\n<g id=\"syndrome\">\n";
  for (const FaceSyndrome& s : overlay.syndrome) {
    const char* kind = s.violates_k && s.violates_j ? "kj" : (s.violates_k ? "k" : "j");
    out << "<polygon class=\"violation\" data-face=\"" << s.face << "\" data-kind=\"" << kind << "\" points=\""
        << face_points(s.face) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"4\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace colorcode
