#include "tilecover/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tilecover {

namespace {

std::pair<double, double> to_xy(const QuadPoint& p) { return {p.x.to_double(), p.y.to_double()}; }

const char* gon_fill(int gon) {
  switch (gon) {
    case 3: return "#f6d55c";
    case 4: return "#ed553b";
    case 6: return "#3caea3";
    case 12: return "#20639b";
    default: return "#cccccc";
  }
}

const char* part_colour(int part) {
  static const char* colours[] = {"#111111", "#ffffff", "#888888"};
  return colours[std::min(part, 2)];
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::vector<int> class_parts(const PeriodicTiling& t) {
  std::vector<int> part(t.num_classes(), 0);
  TypeClassification tc = classify_types(t);
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    VertexType vt = face_cycle_type(t, static_cast<int>(c));
    auto it = std::find(t.declared_types.begin(), t.declared_types.end(), vt);
    if (it != t.declared_types.end()) {
      part[c] = static_cast<int>(it - t.declared_types.begin());
    } else {
      part[c] = static_cast<int>(std::find(tc.types.begin(), tc.types.end(), vt) - tc.types.begin());
    }
  }
  return part;
}

}  // namespace

SvgScene tiling_scene(const PeriodicTiling& t, int cells_w, int cells_h) {
  SvgScene s;
  const auto part = class_parts(t);
  for (int i = 0; i < cells_w; ++i)
    for (int j = 0; j < cells_h; ++j) {
      for (const auto& f : t.face_classes) {
        SvgScene::Polygon poly;
        poly.gon = static_cast<int>(f.size());
        for (const auto& c : f) poly.points.push_back(to_xy(t.position(c.vclass, c.offset + Vec2i{i, j})));
        s.polygons.push_back(std::move(poly));
      }
      for (std::size_t c = 0; c < t.num_classes(); ++c) {
        auto [x, y] = to_xy(t.position(static_cast<int>(c), {i, j}));
        s.markers.push_back({x, y, part[c]});
      }
    }
  return s;
}

SvgScene map_scene(const ToroidalMap& m, const PeriodicTiling& t) {
  SvgScene s;
  const auto part = class_parts(t);
  for (const auto& f : m.faces) {
    if (f.fclass < 0 || static_cast<std::size_t>(f.fclass) >= t.face_classes.size())
      throw std::invalid_argument("map has no face provenance; cannot place faces in the plane");
    SvgScene::Polygon poly;
    const auto& fc = t.face_classes[static_cast<std::size_t>(f.fclass)];
    poly.gon = static_cast<int>(fc.size());
    for (const auto& c : fc) poly.points.push_back(to_xy(t.position(c.vclass, c.offset + f.cell)));
    s.polygons.push_back(std::move(poly));
  }
  for (const auto& v : m.vertices) {
    auto [x, y] = to_xy(t.position(v.vclass, v.coset));
    s.markers.push_back({x, y, part[static_cast<std::size_t>(v.vclass)]});
  }
  auto corner = [&](Int i, Int j) { return to_xy(t.translation({i, j})); };
  const auto& g = m.gamma;
  auto p0 = corner(0, 0), pc = corner(g.a, 0), pd = corner(g.b, g.d), pcd = corner(g.a + g.b, g.d);
  // Opposite sides carry the same number of arrows.
  s.boundary.push_back({p0.first, p0.second, pc.first, pc.second, 1});
  s.boundary.push_back({pd.first, pd.second, pcd.first, pcd.second, 1});
  s.boundary.push_back({p0.first, p0.second, pd.first, pd.second, 2});
  s.boundary.push_back({pc.first, pc.second, pcd.first, pcd.second, 2});
  return s;
}

std::string to_svg(const SvgScene& scene) {
  double minx = std::numeric_limits<double>::max(), miny = minx;
  double maxx = std::numeric_limits<double>::lowest(), maxy = maxx;
  auto grow = [&](double x, double y) {
    minx = std::min(minx, x);
    maxx = std::max(maxx, x);
    miny = std::min(miny, y);
    maxy = std::max(maxy, y);
  };
  for (const auto& p : scene.polygons)
    for (auto [x, y] : p.points) grow(x, y);
  for (const auto& b : scene.boundary) {
    grow(b.x0, b.y0);
    grow(b.x1, b.y1);
  }
  if (minx > maxx) minx = maxx = miny = maxy = 0;
  const double k = scene.scale, margin = 1.0;
  auto X = [&](double x) { return num((x - minx + margin) * k); };
  auto Y = [&](double y) { return num((maxy - y + margin) * k); };  // SVG y grows downwards

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num((maxx - minx + 2 * margin) * k)
     << "\" height=\"" << num((maxy - miny + 2 * margin) * k) << "\">\n";
  os << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#000\"/></marker></defs>\n";
  for (const auto& p : scene.polygons) {
    os << "<polygon class=\"face\" data-gon=\"" << p.gon << "\" fill=\"" << gon_fill(p.gon)
       << "\" stroke=\"#222\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i)
      os << (i ? " " : "") << X(p.points[i].first) << "," << Y(p.points[i].second);
    os << "\"/>\n";
  }
  for (const auto& b : scene.boundary) {
    os << "<line class=\"boundary\" x1=\"" << X(b.x0) << "\" y1=\"" << Y(b.y0) << "\" x2=\"" << X(b.x1) << "\" y2=\""
       << Y(b.y1) << "\" stroke=\"#000\" stroke-width=\"2\" stroke-dasharray=\"6 3\"/>\n";
    for (int a = 1; a <= b.arrows; ++a) {
      // Short arrow segments placed along the side.
      double t0 = 0.4 + 0.1 * (a - 1), t1 = t0 + 0.05;
      double ax = b.x0 + (b.x1 - b.x0) * t0, ay = b.y0 + (b.y1 - b.y0) * t0;
      double bx = b.x0 + (b.x1 - b.x0) * t1, by = b.y0 + (b.y1 - b.y0) * t1;
      os << "<line class=\"identify\" x1=\"" << X(ax) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(bx) << "\" y2=\""
         << Y(by) << "\" stroke=\"#000\" marker-end=\"url(#arrow)\"/>\n";
    }
  }
  for (const auto& m : scene.markers)
    os << "<circle class=\"vertex\" data-part=\"" << m.part << "\" cx=\"" << X(m.x) << "\" cy=\"" << Y(m.y)
       << "\" r=\"4\" fill=\"" << part_colour(m.part) << "\" stroke=\"#000\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tilecover
