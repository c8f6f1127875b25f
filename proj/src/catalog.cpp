#include "catalog_data.hpp"
#include "tilecover/periodic.hpp"

namespace tilecover {

namespace {

QuadPoint to_point(const detail::Cyclo& c) {
  // w = (sqrt3/2, 1/2), w^2 = (1/2, sqrt3/2), w^3 = (0, 1).
  return {QuadExact(Rational(2 * c[0] + c[2], 2), Rational(c[1], 2)),
          QuadExact(Rational(c[1] + 2 * c[3], 2), Rational(c[2], 2))};
}

PeriodicTiling build(const detail::RawEntry& raw) {
  const VertexType first = VertexType::parse(raw.first_type);
  const VertexType second = VertexType::parse(raw.second_type);
  std::vector<VertexClass> vertices;
  for (const auto& v : raw.vertices) vertices.push_back({"", to_point(v)});
  std::vector<FaceClass> faces;
  for (const auto& f : raw.faces) {
    FaceClass fc;
    for (const auto& c : f) fc.push_back({c.vclass, {c.dx, c.dy}});
    faces.push_back(std::move(fc));
  }
  PeriodicTiling t = assemble_tiling(raw.name, to_point(raw.a), to_point(raw.b), std::move(vertices),
                                     std::move(faces), {first, second});
  int na = 0, nb = 0;
  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    bool in_first = face_cycle_type(t, static_cast<int>(c)) == first;
    t.vertex_classes[c].label = in_first ? "a" + std::to_string(na++) : "b" + std::to_string(nb++);
  }
  return t;
}

}  // namespace

const std::vector<PeriodicTiling>& catalog() {
  static const std::vector<PeriodicTiling> entries = [] {
    std::vector<PeriodicTiling> out;
    for (const auto& raw : detail::raw_catalog()) out.push_back(build(raw));
    return out;
  }();
  return entries;
}

}  // namespace tilecover
