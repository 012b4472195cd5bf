#include "divide_forge/render.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace dforge {

std::string emit_dot(const DualGraph& graph) {
  std::string out = "graph dual {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < graph.vertex_count; ++i) {
    out += "  c" + std::to_string(i) + ";\n";
  }
  for (std::size_t j = 0; j < graph.edges.size(); ++j) {
    const auto [a, b] = graph.edges[j];
    out += "  c" + std::to_string(a) + " -- c" + std::to_string(b) + " [label=\"p" +
           std::to_string(j) + "\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                               "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                               "#bcbd22", "#17becf"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct Point {
  double x = 0, y = 0;
};

std::string ring(const Point& c, double outer, double inner, const char* cls,
                 const std::string& extra) {
  // Two concentric circles filled even-odd.
  auto circle = [&c](double r) {
    return "M " + fmt(c.x - r) + " " + fmt(c.y) + " a " + fmt(r) + " " + fmt(r) + " 0 1 0 " +
           fmt(2 * r) + " 0 a " + fmt(r) + " " + fmt(r) + " 0 1 0 " + fmt(-2 * r) + " 0 Z";
  };
  return "  <path class=\"" + std::string(cls) + "\"" + extra + " d=\"" + circle(outer) + " " +
         circle(inner) + "\" fill=\"#dddddd\" fill-rule=\"evenodd\" stroke=\"#333333\"/>\n";
}

}  // namespace

std::string emit_svg(const FiberComplex& fiber) {
  constexpr double kRadius = 18.0;
  constexpr double kHole = 8.0;
  const std::size_t n = fiber.roundabouts.size();
  const double layout = n <= 1 ? 0.0 : 40.0 + 12.0 * static_cast<double>(n);
  const double size = 2 * (layout + 3 * kRadius);
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(size) +
         "\" height=\"" + fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
  const Point centre{size / 2, size / 2};

  if (fiber.is_annulus()) {
    out += ring(centre, 3 * kRadius, kRadius, "annulus", "");
    out += "</svg>\n";
    return out;
  }

  // Roundabouts on a circle; the node of divide dart d sits on the ring of
  // its double point at the angle of d's rotation slot.
  std::vector<Point> centres(n);
  std::vector<Point> port(fiber.ribbon.dart_count() / 3);
  std::vector<Point> outward(port.size());
  for (std::size_t v = 0; v < n; ++v) {
    const double a = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(n);
    centres[v] = {centre.x + layout * std::cos(a), centre.y + layout * std::sin(a)};
    for (std::size_t slot = 0; slot < 4; ++slot) {
      const Dart d = (fiber.roundabouts[v][slot] - 1) / 3;
      const double b = a + std::numbers::pi / 2 * static_cast<double>(slot) + std::numbers::pi / 4;
      outward[d] = {std::cos(b), std::sin(b)};
      port[d] = {centres[v].x + kRadius * outward[d].x, centres[v].y + kRadius * outward[d].y};
    }
  }

  for (std::size_t e = 0; e < fiber.bands.size(); ++e) {
    const auto [first, second] = fiber.bands[e];
    const Dart a = first / 3;
    const Dart b = second / 3;
    const Point& p = port[a];
    const Point& q = port[b];
    const double reach = 3 * kRadius;
    const Point c1{p.x + reach * outward[a].x, p.y + reach * outward[a].y};
    const Point c2{q.x + reach * outward[b].x, q.y + reach * outward[b].y};
    const std::uint32_t boundary = fiber.boundary_of[first];
    out += "  <path class=\"band\" data-edge=\"" + std::to_string(e) + "\" data-boundary=\"" +
           std::to_string(boundary) + "\" d=\"M " + fmt(p.x) + " " + fmt(p.y) + " C " +
           fmt(c1.x) + " " + fmt(c1.y) + " " + fmt(c2.x) + " " + fmt(c2.y) + " " + fmt(q.x) +
           " " + fmt(q.y) + "\" fill=\"none\" stroke=\"" + kPalette[boundary % kPalette.size()] +
           "\" stroke-width=\"3\"/>\n";
  }
  for (std::size_t v = 0; v < n; ++v) {
    out += ring(centres[v], kRadius, kHole, "roundabout",
                " data-double-point=\"" + std::to_string(v) + "\"");
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dforge
