#include "domino3d/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace domino3d {

namespace {

constexpr int kCell = 32;
constexpr int kPad = 16;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

const char* kDefs =
    "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"7\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
    "orient=\"auto-start-reverse\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e9c\"/></marker></defs>\n";

void polyline(std::ostringstream& out, const std::vector<std::pair<double, double>>& pts, const char* style, bool closed) {
  out << "<" << (closed ? "polygon" : "polyline") << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << num(pts[i].first) << "," << num(pts[i].second);
  out << "\" " << style << "/>\n";
}

void arrow(std::ostringstream& out, double x0, double y0, double x1, double y1, const char* color) {
  double mx = (x0 + x1) / 2, my = (y0 + y1) / 2;
  out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1) << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/>\n";
  out << "<line x1=\"" << num(x0) << "\" y1=\"" << num(y0) << "\" x2=\"" << num(mx) << "\" y2=\"" << num(my)
      << "\" stroke=\"none\" marker-end=\"url(#arrow)\"/>\n";
}

}  // namespace

std::string render_tiling_svg(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g) {
  BoundingBox b = r.bounds();
  int panel = b.width() * kCell + 2 * kPad;
  int height = b.height() * kCell + 2 * kPad;
  auto cx = [&](int panel_index, double x) { return panel_index * panel + kPad + (x - b.min_x + 0.5) * kCell; };
  auto cy = [&](double y) { return kPad + (y - b.min_y + 0.5) * kCell; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * panel << "\" height=\"" << height << "\" viewBox=\"0 0 "
      << 3 * panel << " " << height << "\">\n"
      << kDefs;
  for (int z = 0; z < 2; ++z) {
    out << "<g id=\"floor" << z << "\">\n";
    for (Cell c : r.floor(z).cells()) {
      bool white = cube_color({c.x, c.y, z}) == Color::White;
      out << "<rect x=\"" << num(cx(z, c.x) - kCell / 2.0) << "\" y=\"" << num(cy(c.y) - kCell / 2.0) << "\" width=\"" << kCell
          << "\" height=\"" << kCell << "\" fill=\"" << (white ? "#ffffff" : "#d9d9d9") << "\" stroke=\"#888\"/>\n";
    }
    for (const Dimer& d : t.dimers()) {
      if (d.axis() == Axis::Z) {
        out << "<circle cx=\"" << num(cx(z, d.a.x)) << "\" cy=\"" << num(cy(d.a.y)) << "\" r=\"" << kCell / 4 << "\" fill=\""
            << (z == 0 ? "#d62728" : "#ffffff") << "\" stroke=\"#000\"/>\n";
      } else if (d.a.z == z) {
        out << "<line x1=\"" << num(cx(z, d.a.x)) << "\" y1=\"" << num(cy(d.a.y)) << "\" x2=\"" << num(cx(z, d.b.x)) << "\" y2=\""
            << num(cy(d.b.y)) << "\" stroke=\"#000\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
      }
    }
    out << "</g>\n";
  }
  out << "<g id=\"drawing\">\n";
  for (Cell c : r.top().cells())
    out << "<rect x=\"" << num(cx(2, c.x) - kCell / 2.0) << "\" y=\"" << num(cy(c.y) - kCell / 2.0) << "\" width=\"" << kCell
        << "\" height=\"" << kCell << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  Drawing d = drawing_of(t, r, g);
  for (const auto& e : d.edges) arrow(out, cx(2, e.from.x), cy(e.from.y), cx(2, e.to.x), cy(e.to.y), "#1f4e9c");
  for (const auto& route : d.ghosts) {
    std::vector<std::pair<double, double>> pts;
    for (Cell c : route.path) pts.emplace_back(cx(2, c.x), cy(c.y));
    polyline(out, pts, "fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\" stroke-dasharray=\"5,3\"", false);
  }
  for (const auto& j : d.jewels)
    out << "<circle cx=\"" << num(cx(2, j.cell.x)) << "\" cy=\"" << num(cy(j.cell.y)) << "\" r=\"" << kCell / 5 << "\" fill=\""
        << (j.color == Color::Black ? "#000" : "#fff") << "\" stroke=\"#000\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_sock_svg(const Sock& s) {
  BoundingBox b;
  if (s.domain()) b = s.domain()->bounds();
  else if (!s.empty()) b = s.bounds();
  else b = {0, 0, 2, 2};
  b.min_x -= 1;
  b.min_y -= 1;
  b.max_x += 1;
  b.max_y += 1;
  int w = (b.max_x - b.min_x) * kCell + 2 * kPad, h = (b.max_y - b.min_y) * kCell + 2 * kPad;
  auto px = [&](double x) { return kPad + (x - b.min_x) * kCell; };
  auto py = [&](double y) { return kPad + (y - b.min_y) * kCell; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << kDefs << "<g id=\"grid\" stroke=\"#ddd\">\n";
  for (int x = b.min_x; x <= b.max_x; ++x)
    out << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(py(b.min_y)) << "\" x2=\"" << num(px(x)) << "\" y2=\"" << num(py(b.max_y)) << "\"/>\n";
  for (int y = b.min_y; y <= b.max_y; ++y)
    out << "<line x1=\"" << num(px(b.min_x)) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(px(b.max_x)) << "\" y2=\"" << num(py(y)) << "\"/>\n";
  out << "</g>\n<g id=\"cycles\">\n";
  for (const auto& c : s.cycles())
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex u = c[i], v = c[(i + 1) % c.size()];
      arrow(out, px(u.x), py(u.y), px(v.x), py(v.y), "#1f4e9c");
    }
  out << "</g>\n<g id=\"jewels\">\n";
  if (!s.empty()) {
    BoundingBox sb = s.bounds();
    for (int y = sb.min_y; y <= sb.max_y; ++y)
      for (int x = sb.min_x; x <= sb.max_x; ++x) {
        Vertex v{x, y};
        if (s.on_cycle(v) || !s.in_domain(v) || sock_winding(s, v) == 0) continue;
        out << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"" << kCell / 6 << "\" fill=\""
            << (cell_color(v) == Color::Black ? "#000" : "#fff") << "\" stroke=\"#000\"/>\n";
      }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace domino3d
