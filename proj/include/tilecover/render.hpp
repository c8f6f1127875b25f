#pragma once

#include <string>
#include <vector>

#include "tilecover/periodic.hpp"
#include "tilecover/torusmap.hpp"

namespace tilecover {

struct SvgScene {
  struct Polygon {
    std::vector<std::pair<double, double>> points;
    int gon = 0;
  };
  struct Marker {
    double x = 0, y = 0;
    int part = 0;  // index of the vertex's type
  };
  struct Segment {
    double x0, y0, x1, y1;
    int arrows = 0;  // identification marks for fundamental-domain sides
  };
  std::vector<Polygon> polygons;
  std::vector<Marker> markers;
  std::vector<Segment> boundary;
  double scale = 40.0;
};

SvgScene tiling_scene(const PeriodicTiling& t, int cells_w, int cells_h);

/// Needs face provenance (maps built by quotient or loaded with it).
SvgScene map_scene(const ToroidalMap& m, const PeriodicTiling& t);

std::string to_svg(const SvgScene& scene);

}  // namespace tilecover
