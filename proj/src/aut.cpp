#include "tilecover/aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace tilecover {

namespace {

struct UnionFind {
  std::vector<int> parent;
  std::size_t sets;
  explicit UnionFind(std::size_t n) : parent(n), sets(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    --sets;
  }
};

OrbitPartition blocks_of(UnionFind& uf) {
  std::map<int, std::vector<int>> by_root;
  for (std::size_t v = 0; v < uf.parent.size(); ++v) by_root[uf.find(static_cast<int>(v))].push_back(static_cast<int>(v));
  OrbitPartition p;
  for (auto& [root, block] : by_root) p.orbits.push_back(std::move(block));
  return p;
}

// Stable colouring of flags; automorphisms preserve it.
std::vector<int> refine_colours(const ToroidalMap& m) {
  const auto& fs = m.flags;
  const std::size_t n = fs.size();
  std::vector<int> degree(m.vertices.size(), 0);
  for (const auto& e : m.edges) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  std::vector<int> colour(n);
  for (std::size_t x = 0; x < n; ++x)
    colour[x] = static_cast<int>(m.faces[static_cast<std::size_t>(fs.face[x])].vertices.size()) * 64 +
                degree[static_cast<std::size_t>(fs.vertex[x])];
  std::size_t classes = 0;
  for (;;) {
    using Sig = std::tuple<int, int, int, int>;
    std::vector<Sig> sig(n);
    for (std::size_t x = 0; x < n; ++x)
      sig[x] = {colour[x], colour[static_cast<std::size_t>(fs.s0[x])], colour[static_cast<std::size_t>(fs.s1[x])],
                colour[static_cast<std::size_t>(fs.s2[x])]};
    std::vector<Sig> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t x = 0; x < n; ++x)
      colour[x] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[x]) - uniq.begin());
    if (uniq.size() == classes) break;
    classes = uniq.size();
  }
  return colour;
}

std::vector<char> flag_parity(const ToroidalMap& m) {
  const auto& fs = m.flags;
  std::vector<char> parity(fs.size(), -1);
  std::vector<int> stack{0};
  parity[0] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int i = 0; i < 3; ++i) {
      int y = fs.involution(i)[static_cast<std::size_t>(x)];
      if (parity[static_cast<std::size_t>(y)] < 0) {
        parity[static_cast<std::size_t>(y)] = static_cast<char>(1 - parity[static_cast<std::size_t>(x)]);
        stack.push_back(y);
      }
    }
  }
  return parity;
}

bool propagate(const FlagSystem& fs, int target, std::vector<int>& phi, std::vector<int>& queue) {
  std::fill(phi.begin(), phi.end(), -1);
  queue.clear();
  phi[0] = target;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    int fx = phi[static_cast<std::size_t>(x)];
    for (int i = 0; i < 3; ++i) {
      const auto& s = fs.involution(i);
      int y = s[static_cast<std::size_t>(x)];
      int img = s[static_cast<std::size_t>(fx)];
      int& cur = phi[static_cast<std::size_t>(y)];
      if (cur < 0) {
        cur = img;
        queue.push_back(y);
      } else if (cur != img) {
        return false;
      }
    }
  }
  return queue.size() == phi.size();
}

MapAutomorphism make_automorphism(const ToroidalMap& m, std::vector<int> phi, bool preserving) {
  const auto& fs = m.flags;
  MapAutomorphism a;
  a.vertex_perm.assign(m.vertices.size(), -1);
  a.edge_perm.assign(m.edges.size(), -1);
  a.face_perm.assign(m.faces.size(), -1);
  for (std::size_t x = 0; x < phi.size(); ++x) {
    auto y = static_cast<std::size_t>(phi[x]);
    a.vertex_perm[static_cast<std::size_t>(fs.vertex[x])] = fs.vertex[y];
    a.edge_perm[static_cast<std::size_t>(fs.edge[x])] = fs.edge[y];
    a.face_perm[static_cast<std::size_t>(fs.face[x])] = fs.face[y];
  }
  a.flag_perm = std::move(phi);
  a.orientation_preserving = preserving;
  return a;
}

}  // namespace

void for_each_automorphism(const ToroidalMap& m, const AutomorphismVisitor& visit) {
  const auto& fs = m.flags;
  if (fs.size() == 0) return;
  const std::vector<int> colour = refine_colours(m);
  const std::vector<char> parity = flag_parity(m);
  std::vector<int> phi(fs.size()), queue;
  queue.reserve(fs.size());
  for (std::size_t g = 0; g < fs.size(); ++g) {
    if (colour[g] != colour[0]) continue;
    if (!propagate(fs, static_cast<int>(g), phi, queue)) continue;
    if (!visit(make_automorphism(m, phi, parity[g] == parity[0]))) return;
  }
}

std::vector<MapAutomorphism> automorphisms(const ToroidalMap& m) {
  std::vector<MapAutomorphism> out;
  for_each_automorphism(m, [&](const MapAutomorphism& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<MapAutomorphism> extend_flag(const ToroidalMap& m, int target) {
  const auto& fs = m.flags;
  if (target < 0 || static_cast<std::size_t>(target) >= fs.size()) return std::nullopt;
  std::vector<int> phi(fs.size()), queue;
  if (!propagate(fs, target, phi, queue)) return std::nullopt;
  const std::vector<char> parity = flag_parity(m);
  return make_automorphism(m, std::move(phi), parity[static_cast<std::size_t>(target)] == parity[0]);
}

OrbitPartition vertex_orbits(const ToroidalMap& m) {
  const std::size_t floor_count = vertex_types(m).types.size();
  UnionFind uf(m.vertices.size());
  for_each_automorphism(m, [&](const MapAutomorphism& a) {
    for (std::size_t v = 0; v < a.vertex_perm.size(); ++v) uf.unite(static_cast<int>(v), a.vertex_perm[v]);
    return uf.sets > floor_count;
  });
  return blocks_of(uf);
}

bool is_2_uniform(const ToroidalMap& m) {
  return vertex_types(m).types.size() == 2 && vertex_orbits(m).count() == 2;
}

OrbitPartition translation_orbits(const ToroidalMap& m) {
  UnionFind uf(m.vertices.size());
  if (m.faces.empty() || m.faces[0].fclass < 0) return blocks_of(uf);
  const int n = static_cast<int>(m.gamma.index());
  const int fclass = m.faces[0].fclass;
  const Vec2i base = m.faces[0].cell;
  for (const Vec2i& t : coset_reps(m.gamma)) {
    // Flag 0 is corner 0 of face 0; send it to the same corner of the
    // translated face.
    Vec2i r = coset_rep(m.gamma, base + t);
    int face = fclass * n + static_cast<int>(r.x * m.gamma.d + r.y);
    auto a = extend_flag(m, 2 * m.flags.corner_base[static_cast<std::size_t>(face)]);
    if (!a) throw std::logic_error("translation is not an automorphism of the quotient");
    for (std::size_t v = 0; v < a->vertex_perm.size(); ++v) uf.unite(static_cast<int>(v), a->vertex_perm[v]);
  }
  return blocks_of(uf);
}

std::string to_string(CoveringErrorReason r) {
  switch (r) {
    case CoveringErrorReason::NotSublattice: return "NotSublattice";
    case CoveringErrorReason::NotLocalIso: return "NotLocalIso";
    case CoveringErrorReason::FiberMismatch: return "FiberMismatch";
  }
  return "Unknown";
}

CoveringMap verify_covering(const ToroidalMap& y, const ToroidalMap& x) {
  if (y.source != x.source) throw std::invalid_argument("maps are quotients of different tilings");
  const IntMatrix2 g = x.gamma.matrix();
  const IntMatrix2 l = y.gamma.matrix();
  if (!contains(g, l.column(0)) || !contains(g, l.column(1)))
    throw CoveringError(CoveringErrorReason::NotSublattice,
                        "NotSublattice: " + to_string(y.gamma) + " is not contained in " + to_string(x.gamma));
  const auto ni = static_cast<std::size_t>(x.gamma.index());
  const auto nl = static_cast<std::size_t>(y.gamma.index());
  auto classes = [](const ToroidalMap& m) {
    int c = 0;
    for (const auto& v : m.vertices) c = std::max(c, v.vclass + 1);
    return c;
  };
  if (classes(x) != classes(y)) throw std::invalid_argument("maps have different numbers of vertex classes");

  CoveringMap cm;
  cm.degree = static_cast<int>(nl / ni);
  for (const auto& v : y.vertices) cm.vertex_map.push_back(x.vertex_index(v.vclass, v.coset));

  auto key = [](int a, int b) {
    auto [lo, hi] = std::minmax(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) | static_cast<std::uint32_t>(hi);
  };
  std::unordered_map<std::uint64_t, int> x_edges;
  for (std::size_t e = 0; e < x.edges.size(); ++e) x_edges.emplace(key(x.edges[e].u, x.edges[e].v), static_cast<int>(e));
  for (const auto& e : y.edges) {
    auto it = x_edges.find(key(cm.vertex_map[static_cast<std::size_t>(e.u)], cm.vertex_map[static_cast<std::size_t>(e.v)]));
    if (it == x_edges.end()) throw CoveringError(CoveringErrorReason::NotLocalIso, "NotLocalIso: an edge does not map to an edge");
    cm.edge_map.push_back(it->second);
  }
  std::map<std::vector<int>, int> x_faces;
  for (std::size_t f = 0; f < x.faces.size(); ++f) {
    std::vector<int> vs = x.faces[f].vertices;
    std::sort(vs.begin(), vs.end());
    x_faces.emplace(std::move(vs), static_cast<int>(f));
  }
  for (const auto& f : y.faces) {
    std::vector<int> img;
    for (int v : f.vertices) img.push_back(cm.vertex_map[static_cast<std::size_t>(v)]);
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    auto it = x_faces.find(sorted);
    if (it == x_faces.end()) throw CoveringError(CoveringErrorReason::NotLocalIso, "NotLocalIso: a face does not map to a face");
    // Same cyclic order, up to rotation.
    const auto& target = x.faces[static_cast<std::size_t>(it->second)].vertices;
    auto start = std::find(target.begin(), target.end(), img[0]);
    std::vector<int> rotated(start, target.end());
    rotated.insert(rotated.end(), target.begin(), start);
    if (rotated != img) throw CoveringError(CoveringErrorReason::NotLocalIso, "NotLocalIso: face boundary order differs");
    cm.face_map.push_back(it->second);
  }

  auto check_fibres = [&](const std::vector<int>& map, std::size_t target_size, const char* what) {
    std::vector<int> count(target_size, 0);
    for (int i : map) ++count[static_cast<std::size_t>(i)];
    for (int c : count)
      if (c != cm.degree)
        throw CoveringError(CoveringErrorReason::FiberMismatch,
                            std::string("FiberMismatch: a ") + what + " fibre has size " + std::to_string(c) +
                                ", expected " + std::to_string(cm.degree));
  };
  check_fibres(cm.vertex_map, x.vertices.size(), "vertex");
  check_fibres(cm.edge_map, x.edges.size(), "edge");
  check_fibres(cm.face_map, x.faces.size(), "face");

  // Local isomorphism: the star of every vertex maps bijectively.
  std::vector<std::vector<int>> y_star(y.vertices.size()), x_star(x.vertices.size());
  for (std::size_t e = 0; e < y.edges.size(); ++e) {
    y_star[static_cast<std::size_t>(y.edges[e].u)].push_back(static_cast<int>(e));
    y_star[static_cast<std::size_t>(y.edges[e].v)].push_back(static_cast<int>(e));
  }
  for (std::size_t e = 0; e < x.edges.size(); ++e) {
    x_star[static_cast<std::size_t>(x.edges[e].u)].push_back(static_cast<int>(e));
    x_star[static_cast<std::size_t>(x.edges[e].v)].push_back(static_cast<int>(e));
  }
  std::vector<std::vector<int>> y_faces_at(y.vertices.size()), x_faces_at(x.vertices.size());
  for (std::size_t f = 0; f < y.faces.size(); ++f)
    for (int v : y.faces[f].vertices) y_faces_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  for (std::size_t f = 0; f < x.faces.size(); ++f)
    for (int v : x.faces[f].vertices) x_faces_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  for (std::size_t v = 0; v < y.vertices.size(); ++v) {
    auto w = static_cast<std::size_t>(cm.vertex_map[v]);
    std::vector<int> edges_img, faces_img;
    for (int e : y_star[v]) edges_img.push_back(cm.edge_map[static_cast<std::size_t>(e)]);
    for (int f : y_faces_at[v]) faces_img.push_back(cm.face_map[static_cast<std::size_t>(f)]);
    std::sort(edges_img.begin(), edges_img.end());
    std::sort(faces_img.begin(), faces_img.end());
    std::vector<int> xe = x_star[w], xf = x_faces_at[w];
    std::sort(xe.begin(), xe.end());
    std::sort(xf.begin(), xf.end());
    if (edges_img != xe || faces_img != xf)
      throw CoveringError(CoveringErrorReason::NotLocalIso,
                          "NotLocalIso: the star of vertex " + std::to_string(v) + " does not map bijectively");
  }
  return cm;
}

}  // namespace tilecover
