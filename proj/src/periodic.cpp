#include "tilecover/periodic.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace tilecover {

namespace {

using EdgeKey = std::tuple<int, int, Int, Int>;

EdgeKey edge_key(int u, int v, Vec2i off) { return {u, v, off.x, off.y}; }

// Undirected edge classes are stored in the orientation with the smaller key.
EdgeKey canonical_edge(int u, int v, Vec2i off) {
  return std::min(edge_key(u, v, off), edge_key(v, u, -off));
}

QuadPoint rotate(const QuadPoint& p, int steps, bool reflect) {
  QuadPoint q = reflect ? QuadPoint{p.x, -p.y} : p;
  QuadPoint c = unit_direction(steps);
  return {c.x * q.x - c.y * q.y, c.y * q.x + c.x * q.y};
}

// Coordinates of p in the basis (A, B); exact.
struct CellCoords {
  QuadExact s, t;
};

CellCoords cell_coords(const PeriodicTiling& t, const QuadPoint& p) {
  QuadExact det = cross(t.basis_a, t.basis_b);
  return {cross(p, t.basis_b) / det, cross(t.basis_a, p) / det};
}

std::optional<Vec2i> as_lattice_vector(const PeriodicTiling& t, const QuadPoint& p) {
  CellCoords c = cell_coords(t, p);
  if (!c.s.is_integer() || !c.t.is_integer()) return std::nullopt;
  return Vec2i{c.s.floor(), c.t.floor()};
}

struct Located {
  int vclass;
  Vec2i offset;
};

std::optional<Located> locate(const PeriodicTiling& t, const QuadPoint& p) {
  for (std::size_t c = 0; c < t.vertex_classes.size(); ++c) {
    if (auto off = as_lattice_vector(t, p - t.vertex_classes[c].position))
      return Located{static_cast<int>(c), *off};
  }
  return std::nullopt;
}

// Translation-invariant key of a face: corner list relative to each corner
// of minimal class, minimised over those anchors, then sorted.
std::vector<FaceCorner> face_key(const FaceClass& f) {
  int min_class = f.front().vclass;
  for (const auto& c : f) min_class = std::min(min_class, c.vclass);
  std::vector<FaceCorner> best;
  for (const auto& anchor : f) {
    if (anchor.vclass != min_class) continue;
    std::vector<FaceCorner> k;
    for (const auto& c : f) k.push_back({c.vclass, c.offset - anchor.offset});
    std::sort(k.begin(), k.end());
    if (best.empty() || k < best) best = std::move(k);
  }
  return best;
}

QuadExact polygon_area2(const std::vector<QuadPoint>& pts) {
  QuadExact a;
  for (std::size_t i = 0; i < pts.size(); ++i) a += cross(pts[i], pts[(i + 1) % pts.size()]);
  return a;
}

// Incident corners of every vertex class: (face class, corner index).
std::vector<std::vector<std::pair<int, int>>> incident_corners(const PeriodicTiling& t) {
  std::vector<std::vector<std::pair<int, int>>> inc(t.num_classes());
  for (std::size_t f = 0; f < t.face_classes.size(); ++f) {
    const auto& face = t.face_classes[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      int c = face[i].vclass;
      if (c < 0 || static_cast<std::size_t>(c) >= t.num_classes())
        throw MalformedTiling("face " + std::to_string(f) + " refers to unknown vertex class");
      inc[static_cast<std::size_t>(c)].emplace_back(static_cast<int>(f), static_cast<int>(i));
    }
  }
  return inc;
}

}  // namespace

PeriodicTiling assemble_tiling(std::string name, QuadPoint a, QuadPoint b,
                               std::vector<VertexClass> vertices, std::vector<FaceClass> faces,
                               std::vector<VertexType> declared) {
  PeriodicTiling t;
  t.name = std::move(name);
  t.basis_a = a;
  t.basis_b = b;
  t.declared_types = std::move(declared);
  if (cross(a, b).sign() == 0) throw MalformedTiling("degenerate translation basis");

  // Move every vertex class into the fundamental parallelogram.
  std::vector<Vec2i> moved(vertices.size());
  for (std::size_t c = 0; c < vertices.size(); ++c) {
    CellCoords cc = cell_coords(t, vertices[c].position);
    moved[c] = {cc.s.floor(), cc.t.floor()};
    vertices[c].position = vertices[c].position - t.translation(moved[c]);
  }
  for (auto& f : faces)
    for (auto& corner : f) corner.offset = corner.offset + moved[static_cast<std::size_t>(corner.vclass)];
  t.vertex_classes = std::move(vertices);
  t.face_classes = std::move(faces);

  std::set<EdgeKey> seen;
  for (const auto& f : t.face_classes) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const FaceCorner& p = f[i];
      const FaceCorner& q = f[(i + 1) % f.size()];
      EdgeKey k = canonical_edge(p.vclass, q.vclass, q.offset - p.offset);
      if (seen.insert(k).second)
        t.edge_classes.push_back({std::get<0>(k), std::get<1>(k), {std::get<2>(k), std::get<3>(k)}});
    }
  }
  return t;
}

std::vector<std::vector<FaceSide>> face_sides(const PeriodicTiling& t) {
  std::map<EdgeKey, int> index;
  for (std::size_t e = 0; e < t.edge_classes.size(); ++e) {
    const auto& ec = t.edge_classes[e];
    index.emplace(edge_key(ec.u, ec.v, ec.offset), static_cast<int>(e));
  }
  std::vector<std::vector<FaceSide>> out;
  for (std::size_t f = 0; f < t.face_classes.size(); ++f) {
    const auto& face = t.face_classes[f];
    std::vector<FaceSide> sides;
    for (std::size_t i = 0; i < face.size(); ++i) {
      const FaceCorner& p = face[i];
      const FaceCorner& q = face[(i + 1) % face.size()];
      Vec2i d = q.offset - p.offset;
      if (auto it = index.find(edge_key(p.vclass, q.vclass, d)); it != index.end()) {
        sides.push_back({it->second, false, p.offset});
      } else if (auto jt = index.find(edge_key(q.vclass, p.vclass, -d)); jt != index.end()) {
        sides.push_back({jt->second, true, q.offset});
      } else {
        throw MalformedTiling("side " + std::to_string(i) + " of face " + std::to_string(f) +
                              " matches no edge class");
      }
    }
    out.push_back(std::move(sides));
  }
  return out;
}

VertexType face_cycle_type(const PeriodicTiling& t, int vclass) {
  if (vclass < 0 || static_cast<std::size_t>(vclass) >= t.num_classes())
    throw std::out_of_range("vertex class out of range");
  auto inc = incident_corners(t)[static_cast<std::size_t>(vclass)];
  if (inc.empty()) throw MalformedTiling("vertex class " + std::to_string(vclass) + " lies on no face");

  struct Wedge {
    int size;
    FaceCorner next, prev;  // neighbours relative to this vertex's cell
  };
  std::vector<Wedge> wedges;
  for (auto [f, i] : inc) {
    const auto& face = t.face_classes[static_cast<std::size_t>(f)];
    int n = static_cast<int>(face.size());
    Vec2i s = face[static_cast<std::size_t>(i)].offset;
    const auto& nx = face[static_cast<std::size_t>((i + 1) % n)];
    const auto& pv = face[static_cast<std::size_t>((i + n - 1) % n)];
    wedges.push_back({n, {nx.vclass, nx.offset - s}, {pv.vclass, pv.offset - s}});
  }
  // Counter-clockwise around the vertex, the next face begins along the ray
  // where the current one ends.
  std::vector<int> cycle;
  std::vector<bool> used(wedges.size(), false);
  std::size_t cur = 0;
  for (;;) {
    used[cur] = true;
    cycle.push_back(wedges[cur].size);
    std::optional<std::size_t> succ;
    for (std::size_t j = 0; j < wedges.size(); ++j) {
      if (wedges[j].next == wedges[cur].prev) {
        if (succ) throw MalformedTiling("vertex class " + std::to_string(vclass) + ": ambiguous face cycle");
        succ = j;
      }
    }
    if (!succ) throw MalformedTiling("vertex class " + std::to_string(vclass) + ": face cycle does not close");
    if (*succ == 0) break;
    if (used[*succ]) throw MalformedTiling("vertex class " + std::to_string(vclass) + ": face cycle is not a circle");
    cur = *succ;
  }
  if (cycle.size() != wedges.size())
    throw MalformedTiling("vertex class " + std::to_string(vclass) + ": incident faces form several cycles");
  return VertexType(std::move(cycle));
}

TypeClassification classify_types(const PeriodicTiling& t) {
  std::map<VertexType, std::vector<int>> groups;
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    groups[face_cycle_type(t, static_cast<int>(c))].push_back(static_cast<int>(c));
  TypeClassification out;
  for (auto& [type, classes] : groups) {
    out.types.push_back(type);
    out.partition.push_back(std::move(classes));
  }
  return out;
}

ValidationReport validate_geometry(const PeriodicTiling& t) {
  ValidationReport r;
  auto fail = [&](const std::string& s) { r.violations.push_back(s); };
  const QuadExact cell = cross(t.basis_a, t.basis_b);
  if (cell.sign() == 0) {
    fail("degenerate translation basis");
    return r;
  }
  if (t.vertex_classes.empty()) fail("no vertex classes");

  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    CellCoords cc = cell_coords(t, t.vertex_classes[c].position);
    if (cc.s.floor() != 0 || cc.t.floor() != 0)
      fail("vertex class " + std::to_string(c) + " outside the fundamental parallelogram");
    for (std::size_t d = c + 1; d < t.num_classes(); ++d)
      if (as_lattice_vector(t, t.vertex_classes[d].position - t.vertex_classes[c].position))
        fail("vertex classes " + std::to_string(c) + " and " + std::to_string(d) + " coincide modulo the lattice");
  }

  for (std::size_t e = 0; e < t.edge_classes.size(); ++e) {
    const auto& ec = t.edge_classes[e];
    if (ec.u < 0 || ec.v < 0 || static_cast<std::size_t>(std::max(ec.u, ec.v)) >= t.num_classes()) {
      fail("edge class " + std::to_string(e) + " refers to unknown vertex class");
      return r;
    }
    if (norm2(t.position(ec.v, ec.offset) - t.position(ec.u, {})) != QuadExact(1))
      fail("edge class " + std::to_string(e) + ": edge not unit length");
  }

  QuadExact area2;
  for (std::size_t f = 0; f < t.face_classes.size(); ++f) {
    const auto& face = t.face_classes[f];
    std::string tag = "face class " + std::to_string(f);
    if (face.size() < 3) {
      fail(tag + ": fewer than three corners");
      continue;
    }
    std::vector<QuadPoint> pts;
    for (const auto& c : face) {
      if (c.vclass < 0 || static_cast<std::size_t>(c.vclass) >= t.num_classes()) {
        fail(tag + " refers to unknown vertex class");
        return r;
      }
      pts.push_back(t.position(c.vclass, c.offset));
    }
    std::set<FaceCorner> distinct(face.begin(), face.end());
    if (distinct.size() != face.size()) fail(tag + ": repeated corner");
    const std::size_t n = pts.size();
    for (std::size_t k = 1; k <= n / 2; ++k) {
      QuadExact d0 = norm2(pts[k % n] - pts[0]);
      if (k == 1 && d0 != QuadExact(1)) fail(tag + ": side not unit length");
      for (std::size_t i = 1; i < n; ++i)
        if (norm2(pts[(i + k) % n] - pts[i]) != d0) {
          fail(tag + ": not a regular polygon");
          k = n;
          break;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (cross(pts[(i + 1) % n] - pts[i], pts[(i + 2) % n] - pts[(i + 1) % n]).sign() <= 0) {
        fail(tag + ": corners not in counter-clockwise convex order");
        break;
      }
    area2 += polygon_area2(pts);
  }
  QuadExact abs_cell = cell.sign() < 0 ? -cell : cell;
  if (area2 != QuadExact(2) * abs_cell) fail("faces do not tile the fundamental cell (area mismatch)");

  std::vector<std::vector<FaceSide>> sides;
  try {
    sides = face_sides(t);
  } catch (const MalformedTiling& e) {
    fail(e.what());
    return r;
  }
  std::vector<int> forward(t.edge_classes.size(), 0), backward(t.edge_classes.size(), 0);
  for (const auto& fs : sides)
    for (const auto& s : fs) ++(s.reversed ? backward : forward)[static_cast<std::size_t>(s.edge)];
  for (std::size_t e = 0; e < t.edge_classes.size(); ++e)
    if (forward[e] != 1 || backward[e] != 1)
      fail("edge class " + std::to_string(e) + " is not in exactly two faces with opposite orientation");

  // Polyhedrality: any two face instances meeting at a vertex share exactly
  // that vertex or exactly one edge.
  auto inc = incident_corners(t);
  for (std::size_t f = 0; f < t.face_classes.size(); ++f) {
    const auto& face = t.face_classes[f];
    std::set<FaceCorner> mine(face.begin(), face.end());
    std::set<std::pair<int, Vec2i>> partners;
    for (const auto& corner : face)
      for (auto [g, j] : inc[static_cast<std::size_t>(corner.vclass)]) {
        Vec2i cell_g = corner.offset - t.face_classes[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)].offset;
        if (g == static_cast<int>(f) && cell_g == Vec2i{}) continue;
        partners.emplace(g, cell_g);
      }
    for (const auto& [g, cell_g] : partners) {
      const auto& other = t.face_classes[static_cast<std::size_t>(g)];
      std::vector<int> pos_f, pos_g;
      for (std::size_t j = 0; j < other.size(); ++j) {
        FaceCorner c{other[j].vclass, other[j].offset + cell_g};
        auto it = std::find(face.begin(), face.end(), c);
        if (it != face.end()) {
          pos_f.push_back(static_cast<int>(it - face.begin()));
          pos_g.push_back(static_cast<int>(j));
        }
      }
      auto adjacent = [](int x, int y, int n) { return (x - y + n) % n == 1 || (y - x + n) % n == 1; };
      bool ok = pos_f.size() == 1 ||
                (pos_f.size() == 2 && adjacent(pos_f[0], pos_f[1], static_cast<int>(face.size())) &&
                 adjacent(pos_g[0], pos_g[1], static_cast<int>(other.size())));
      if (!ok)
        fail("face classes " + std::to_string(f) + " and " + std::to_string(g) +
             " meet in more than a vertex or an edge");
    }
  }

  for (std::size_t c = 0; c < t.num_classes(); ++c) {
    try {
      VertexType vt = face_cycle_type(t, static_cast<int>(c));
      // Interior angles (p-2)*180/p must sum to 360: sum of (p-2)/p is 2.
      Rational sum(0);
      for (int p : vt.cycle()) sum += Rational(p - 2, p);
      if (sum != Rational(2)) fail("vertex class " + std::to_string(c) + ": angles do not sum to 360 degrees");
    } catch (const MalformedTiling& e) {
      fail(e.what());
    }
  }
  return r;
}

std::vector<TilingSymmetry> point_symmetries(const PeriodicTiling& t) {
  std::set<EdgeKey> edges;
  for (const auto& ec : t.edge_classes) edges.insert(canonical_edge(ec.u, ec.v, ec.offset));
  std::set<std::vector<FaceCorner>> faces;
  for (const auto& f : t.face_classes) faces.insert(face_key(f));

  std::vector<TilingSymmetry> out;
  if (t.vertex_classes.empty()) return out;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int k = 0; k < 12; ++k) {
      auto ia = as_lattice_vector(t, rotate(t.basis_a, k, reflect));
      auto ib = as_lattice_vector(t, rotate(t.basis_b, k, reflect));
      if (!ia || !ib) continue;
      IntMatrix2 m = IntMatrix2::from_columns(*ia, *ib);
      if (m.det() != 1 && m.det() != -1) continue;
      const QuadPoint r0 = rotate(t.vertex_classes[0].position, k, reflect);
      for (std::size_t w = 0; w < t.num_classes(); ++w) {
        TilingSymmetry s;
        s.linear = {m};
        s.rotation = k;
        s.reflection = reflect != 0;
        s.shift = t.vertex_classes[w].position - r0;
        bool ok = true;
        for (std::size_t c = 0; c < t.num_classes() && ok; ++c) {
          auto loc = locate(t, rotate(t.vertex_classes[c].position, k, reflect) + s.shift);
          if (!loc) {
            ok = false;
            break;
          }
          s.class_perm.push_back(loc->vclass);
          s.class_offset.push_back(loc->offset);
        }
        if (!ok) continue;
        std::vector<int> sorted = s.class_perm;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
        auto image = [&](int c, Vec2i off) {
          return FaceCorner{s.class_perm[static_cast<std::size_t>(c)],
                            s.class_offset[static_cast<std::size_t>(c)] + m.apply(off)};
        };
        for (const auto& ec : t.edge_classes) {
          FaceCorner iu = image(ec.u, {}), iv = image(ec.v, ec.offset);
          if (!edges.count(canonical_edge(iu.vclass, iv.vclass, iv.offset - iu.offset))) {
            ok = false;
            break;
          }
        }
        for (std::size_t f = 0; f < t.face_classes.size() && ok; ++f) {
          FaceClass img;
          for (const auto& c : t.face_classes[f]) img.push_back(image(c.vclass, c.offset));
          if (!faces.count(face_key(img))) ok = false;
        }
        if (ok) out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::vector<std::map<VertexType, int>> neighbour_type_certificate(const PeriodicTiling& t) {
  std::vector<VertexType> types;
  for (std::size_t c = 0; c < t.num_classes(); ++c) types.push_back(face_cycle_type(t, static_cast<int>(c)));
  std::vector<std::map<VertexType, int>> cert(t.num_classes());
  for (const auto& ec : t.edge_classes) {
    ++cert[static_cast<std::size_t>(ec.u)][types[static_cast<std::size_t>(ec.v)]];
    ++cert[static_cast<std::size_t>(ec.v)][types[static_cast<std::size_t>(ec.u)]];
  }
  return cert;
}

std::array<QuadExact, 3> reduced_gram(const PeriodicTiling& t) {
  QuadPoint a = t.basis_a, b = t.basis_b;
  if (norm2(b) < norm2(a)) std::swap(a, b);
  for (;;) {
    const std::int64_t k = (dot(a, b) / norm2(a) + QuadExact(Rational(1, 2))).floor();
    b = b - QuadExact(k) * a;
    if (norm2(b) >= norm2(a)) break;
    std::swap(a, b);
  }
  QuadExact d = dot(a, b);
  if (d.sign() < 0) d = -d;
  return {norm2(a), norm2(b), d};
}

const PeriodicTiling& catalog_entry(const std::string& name) {
  for (const auto& t : catalog())
    if (t.name == name) return t;
  throw std::out_of_range("unknown catalog entry: " + name);
}

namespace fixtures {

namespace {
const QuadExact kHalf(Rational(1, 2));
const QuadExact kHalfR3(Rational(0), Rational(1, 2));
const QuadExact kR3(Rational(0), Rational(1));
}  // namespace

PeriodicTiling square_grid() {
  return assemble_tiling("square-grid", {1, 0}, {0, 1}, {{"a0", {0, 0}}},
                         {{{0, {0, 0}}, {0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}},
                         {VertexType::parse("[4^4]")});
}

PeriodicTiling triangle_grid() {
  return assemble_tiling("triangle-grid", {1, 0}, {kHalf, kHalfR3}, {{"a0", {0, 0}}},
                         {{{0, {0, 0}}, {0, {1, 0}}, {0, {0, 1}}}, {{0, {1, 0}}, {0, {1, 1}}, {0, {0, 1}}}},
                         {VertexType::parse("[3^6]")});
}

PeriodicTiling hexagon_grid() {
  return assemble_tiling("hexagon-grid", {QuadExact(Rational(3, 2)), kHalfR3}, {0, kR3},
                         {{"a0", {1, 0}}, {"a1", {kHalf, kHalfR3}}},
                         {{{0, {0, 0}}, {1, {0, 0}}, {0, {-1, 1}}, {1, {-1, 0}}, {0, {-1, 0}}, {1, {0, -1}}}},
                         {VertexType::parse("[6^3]")});
}

PeriodicTiling kagome() {
  return assemble_tiling("kagome", {2, 0}, {1, kR3},
                         {{"a0", {1, 0}}, {"a1", {kHalf, kHalfR3}}, {"a2", {QuadExact(Rational(3, 2)), kHalfR3}}},
                         {{{0, {0, 0}}, {2, {0, 0}}, {1, {0, 0}}},
                          {{2, {0, 0}}, {1, {1, 0}}, {0, {0, 1}}},
                          {{0, {0, 0}}, {1, {0, 0}}, {2, {-1, 0}}, {0, {-1, 0}}, {1, {0, -1}}, {2, {0, -1}}}},
                         {VertexType::parse("[3,6,3,6]")});
}

}  // namespace fixtures

}  // namespace tilecover
