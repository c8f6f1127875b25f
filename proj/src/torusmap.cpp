#include "tilecover/torusmap.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tilecover {

std::string to_string(PolyhedralityReason r) {
  switch (r) {
    case PolyhedralityReason::LoopEdge: return "LoopEdge";
    case PolyhedralityReason::ParallelEdges: return "ParallelEdges";
    case PolyhedralityReason::RepeatedVertexInFace: return "RepeatedVertexInFace";
    case PolyhedralityReason::FacePairBadIntersection: return "FacePairBadIntersection";
    case PolyhedralityReason::DisconnectedFlags: return "DisconnectedFlags";
  }
  return "Unknown";
}

namespace {

int coset_index(const SublatticeHNF& g, Vec2i v) {
  Vec2i r = coset_rep(g, v);
  return static_cast<int>(r.x * g.d + r.y);
}

[[noreturn]] void fail(PolyhedralityReason r, std::vector<int> elems, const std::string& detail) {
  throw PolyhedralityError(r, std::move(elems), to_string(r) + ": " + detail);
}

void fill_face_edges(ToroidalMap& m) {
  std::map<std::pair<int, int>, int> by_ends;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    auto [u, v] = std::minmax(m.edges[e].u, m.edges[e].v);
    by_ends.emplace(std::make_pair(u, v), static_cast<int>(e));
  }
  for (auto& f : m.faces) {
    if (!f.edges.empty()) continue;
    const std::size_t n = f.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto key = std::minmax(f.vertices[i], f.vertices[(i + 1) % n]);
      auto it = by_ends.find({key.first, key.second});
      if (it == by_ends.end()) throw std::invalid_argument("face side is not an edge of the map");
      f.edges.push_back(it->second);
    }
  }
}

void check_polyhedral(const ToroidalMap& m) {
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (m.edges[e].u == m.edges[e].v)
      fail(PolyhedralityReason::LoopEdge, {static_cast<int>(e)}, "edge " + std::to_string(e) + " is a loop");

  std::map<std::pair<int, int>, int> ends;
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    auto [u, v] = std::minmax(m.edges[e].u, m.edges[e].v);
    auto [it, fresh] = ends.emplace(std::make_pair(u, v), static_cast<int>(e));
    if (!fresh)
      fail(PolyhedralityReason::ParallelEdges, {it->second, static_cast<int>(e)},
           "edges " + std::to_string(it->second) + " and " + std::to_string(e) + " join the same vertices");
  }

  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    std::vector<int> vs = m.faces[f].vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      fail(PolyhedralityReason::RepeatedVertexInFace, {static_cast<int>(f)},
           "face " + std::to_string(f) + " visits a vertex twice");
  }

  std::vector<std::vector<int>> faces_at(m.vertices.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (int v : m.faces[f].vertices) faces_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& fv = m.faces[f].vertices;
    const int n = static_cast<int>(fv.size());
    std::map<int, std::vector<int>> shared;  // other face -> positions in f
    for (int i = 0; i < n; ++i)
      for (int g : faces_at[static_cast<std::size_t>(fv[static_cast<std::size_t>(i)])])
        if (g > static_cast<int>(f)) shared[g].push_back(i);
    for (const auto& [g, pos] : shared) {
      bool ok = pos.size() == 1;
      if (pos.size() == 2) {
        int d = pos[1] - pos[0];
        // Shared pair must be a side of both faces; with no parallel edges
        // that makes it the same edge.
        const auto& gv = m.faces[static_cast<std::size_t>(g)].vertices;
        const int k = static_cast<int>(gv.size());
        int a = fv[static_cast<std::size_t>(pos[0])], b = fv[static_cast<std::size_t>(pos[1])];
        int ia = static_cast<int>(std::find(gv.begin(), gv.end(), a) - gv.begin());
        int ib = static_cast<int>(std::find(gv.begin(), gv.end(), b) - gv.begin());
        int dg = (ia - ib + k) % k;
        ok = (d == 1 || d == n - 1) && (dg == 1 || dg == k - 1);
      }
      if (!ok)
        fail(PolyhedralityReason::FacePairBadIntersection, {static_cast<int>(f), g},
             "faces " + std::to_string(f) + " and " + std::to_string(g) + " meet in more than a vertex or an edge");
    }
  }
}

}  // namespace

int ToroidalMap::vertex_index(int vclass, Vec2i v) const {
  return vclass * static_cast<int>(gamma.index()) + coset_index(gamma, v);
}

FlagSystem build_flags(const ToroidalMap& m) {
  FlagSystem fs;
  int total = 0;
  for (const auto& f : m.faces) {
    fs.corner_base.push_back(total);
    total += static_cast<int>(f.vertices.size());
  }
  const std::size_t nflags = 2 * static_cast<std::size_t>(total);
  fs.vertex.resize(nflags);
  fs.edge.resize(nflags);
  fs.face.resize(nflags);
  fs.s0.assign(nflags, -1);
  fs.s1.assign(nflags, -1);
  fs.s2.assign(nflags, -1);

  // Per edge, the (face, side) pairs using it.
  std::vector<std::vector<std::pair<int, int>>> sides(m.edges.size());
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (std::size_t i = 0; i < m.faces[f].edges.size(); ++i)
      sides[static_cast<std::size_t>(m.faces[f].edges[i])].emplace_back(static_cast<int>(f), static_cast<int>(i));

  auto id = [&](int f, int i, int dir) {
    int n = static_cast<int>(m.faces[static_cast<std::size_t>(f)].vertices.size());
    return 2 * (fs.corner_base[static_cast<std::size_t>(f)] + ((i % n) + n) % n) + dir;
  };
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    const auto& face = m.faces[f];
    const int n = static_cast<int>(face.vertices.size());
    const int fi = static_cast<int>(f);
    for (int i = 0; i < n; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        auto x = static_cast<std::size_t>(id(fi, i, dir));
        int side = dir == 0 ? i : (i + n - 1) % n;
        fs.vertex[x] = face.vertices[static_cast<std::size_t>(i)];
        fs.edge[x] = face.edges[static_cast<std::size_t>(side)];
        fs.face[x] = fi;
        fs.s1[x] = id(fi, i, 1 - dir);
        fs.s0[x] = dir == 0 ? id(fi, i + 1, 1) : id(fi, i - 1, 0);
        // The other face on this side traverses it the other way round.
        for (auto [g, j] : sides[static_cast<std::size_t>(fs.edge[x])]) {
          if (g == fi && j == side) continue;
          fs.s2[x] = dir == 0 ? id(g, j + 1, 1) : id(g, j, 0);
        }
      }
    }
  }
  return fs;
}

void finalize_map(ToroidalMap& m) {
  fill_face_edges(m);
  check_polyhedral(m);
  std::vector<int> uses(m.edges.size(), 0);
  for (const auto& f : m.faces)
    for (int e : f.edges) ++uses[static_cast<std::size_t>(e)];
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (uses[e] != 2)
      fail(PolyhedralityReason::FacePairBadIntersection, {static_cast<int>(e)},
           "edge " + std::to_string(e) + " does not lie on exactly two faces");
  std::vector<char> on_face(m.vertices.size(), 0);
  for (const auto& f : m.faces)
    for (int v : f.vertices) on_face[static_cast<std::size_t>(v)] = 1;
  if (std::find(on_face.begin(), on_face.end(), 0) != on_face.end())
    fail(PolyhedralityReason::DisconnectedFlags, {}, "a vertex lies on no face");
  m.flags = build_flags(m);
  const auto& fs = m.flags;
  if (fs.size() == 0) fail(PolyhedralityReason::DisconnectedFlags, {}, "map has no flags");
  std::vector<char> seen(fs.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int y = fs.involution(i)[static_cast<std::size_t>(x)];
      if (y >= 0 && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != fs.size())
    fail(PolyhedralityReason::DisconnectedFlags, {}, "flag graph is not connected");
}

ToroidalMap quotient(const PeriodicTiling& t, const SublatticeHNF& gamma) {
  if (gamma.a < 1 || gamma.d < 1 || gamma.b < 0 || gamma.b >= gamma.a)
    throw std::invalid_argument("sublattice is not in Hermite normal form");
  ToroidalMap m;
  m.source = t.name;
  m.gamma = gamma;
  const std::vector<Vec2i> reps = coset_reps(gamma);
  const int n = static_cast<int>(reps.size());

  for (std::size_t c = 0; c < t.num_classes(); ++c)
    for (const Vec2i& r : reps) m.vertices.push_back({static_cast<int>(c), r});

  for (std::size_t e = 0; e < t.edge_classes.size(); ++e) {
    const auto& ec = t.edge_classes[e];
    for (const Vec2i& r : reps)
      m.edges.push_back({m.vertex_index(ec.u, r), m.vertex_index(ec.v, r + ec.offset), static_cast<int>(e), r});
  }

  const auto sides = face_sides(t);
  for (std::size_t f = 0; f < t.face_classes.size(); ++f) {
    const auto& fc = t.face_classes[f];
    for (const Vec2i& r : reps) {
      MapFace face;
      face.fclass = static_cast<int>(f);
      face.cell = r;
      for (const auto& corner : fc) face.vertices.push_back(m.vertex_index(corner.vclass, r + corner.offset));
      for (const auto& s : sides[f])
        face.edges.push_back(s.edge * n + coset_index(gamma, r + s.shift));
      m.faces.push_back(std::move(face));
    }
  }
  finalize_map(m);
  return m;
}

VertexType vertex_type_at(const ToroidalMap& m, int vertex) {
  const auto& fs = m.flags;
  // A dir-0 flag at the vertex: corner i of some face.
  int start = -1;
  for (std::size_t f = 0; f < m.faces.size() && start < 0; ++f) {
    const auto& vs = m.faces[f].vertices;
    auto it = std::find(vs.begin(), vs.end(), vertex);
    if (it != vs.end()) start = 2 * (fs.corner_base[f] + static_cast<int>(it - vs.begin()));
  }
  if (start < 0) throw std::invalid_argument("vertex lies on no face");
  std::vector<int> cycle;
  int x = start;
  do {
    cycle.push_back(static_cast<int>(m.faces[static_cast<std::size_t>(fs.face[static_cast<std::size_t>(x)])].vertices.size()));
    x = fs.s2[static_cast<std::size_t>(fs.s1[static_cast<std::size_t>(x)])];
  } while (x != start && cycle.size() <= fs.size());
  return VertexType(std::move(cycle));
}

MapTypeClassification vertex_types(const ToroidalMap& m) {
  // One pass over corners instead of a face search per vertex.
  const auto& fs = m.flags;
  std::vector<int> start(m.vertices.size(), -1);
  for (std::size_t f = 0; f < m.faces.size(); ++f)
    for (std::size_t i = 0; i < m.faces[f].vertices.size(); ++i) {
      int& s = start[static_cast<std::size_t>(m.faces[f].vertices[i])];
      if (s < 0) s = 2 * (fs.corner_base[f] + static_cast<int>(i));
    }
  std::map<VertexType, std::vector<int>> groups;
  for (std::size_t v = 0; v < m.vertices.size(); ++v) {
    std::vector<int> cycle;
    int x = start[v];
    do {
      cycle.push_back(static_cast<int>(m.faces[static_cast<std::size_t>(fs.face[static_cast<std::size_t>(x)])].vertices.size()));
      x = fs.s2[static_cast<std::size_t>(fs.s1[static_cast<std::size_t>(x)])];
    } while (x != start[v]);
    groups[VertexType(std::move(cycle))].push_back(static_cast<int>(v));
  }
  MapTypeClassification out;
  for (auto& [type, vs] : groups) {
    out.types.push_back(type);
    out.partition.push_back(std::move(vs));
  }
  return out;
}

bool is_2_semiequivelar(const ToroidalMap& m) { return vertex_types(m).types.size() == 2; }

}  // namespace tilecover
