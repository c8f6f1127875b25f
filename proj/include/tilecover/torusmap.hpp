#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tilecover/lattice.hpp"
#include "tilecover/periodic.hpp"
#include "tilecover/vertex_type.hpp"

namespace tilecover {

enum class PolyhedralityReason {
  LoopEdge,
  ParallelEdges,
  RepeatedVertexInFace,
  FacePairBadIntersection,
  DisconnectedFlags,
};

std::string to_string(PolyhedralityReason r);

class PolyhedralityError : public std::runtime_error {
 public:
  PolyhedralityError(PolyhedralityReason reason, std::vector<int> elements, const std::string& what)
      : std::runtime_error(what), reason_(reason), elements_(std::move(elements)) {}

  PolyhedralityReason reason() const { return reason_; }
  /// Offending edge or face indices, depending on the reason.
  const std::vector<int>& elements() const { return elements_; }

 private:
  PolyhedralityReason reason_;
  std::vector<int> elements_;
};

struct MapVertex {
  int vclass = 0;
  Vec2i coset;
};

struct MapEdge {
  int u = 0;
  int v = 0;
  int eclass = -1;  // -1 when not derived from a tiling
  Vec2i cell;
};

struct MapFace {
  std::vector<int> vertices;  // cyclic, counter-clockwise in the plane
  std::vector<int> edges;     // edges[i] joins vertices[i] and vertices[i+1]
  int fclass = -1;
  Vec2i cell;
};

/// Flag (face f, corner i, dir) has index 2*(corner_base[f] + i) + dir. With
/// dir 0 its edge is side i of f, with dir 1 side i-1; its vertex is corner i.
struct FlagSystem {
  std::vector<int> corner_base;
  std::vector<int> vertex, edge, face;
  std::vector<int> s0, s1, s2;

  std::size_t size() const { return vertex.size(); }
  const std::vector<int>& involution(int i) const { return i == 0 ? s0 : (i == 1 ? s1 : s2); }
};

struct ToroidalMap {
  std::string source;
  SublatticeHNF gamma;
  std::vector<MapVertex> vertices;
  std::vector<MapEdge> edges;
  std::vector<MapFace> faces;
  FlagSystem flags;

  int euler_characteristic() const {
    return static_cast<int>(vertices.size()) - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
  }
  /// Index of vertex (vclass, v + gamma).
  int vertex_index(int vclass, Vec2i v) const;
};

/// Builds K / gamma. Throws PolyhedralityError at the first failed check, in
/// the order loops, parallel edges, repeated vertex in a face, face pairs,
/// flag connectivity.
ToroidalMap quotient(const PeriodicTiling& t, const SublatticeHNF& gamma);

/// Runs the polyhedrality checks and builds flags for a map whose vertices,
/// edges and faces are already filled in.
void finalize_map(ToroidalMap& m);

FlagSystem build_flags(const ToroidalMap& m);

VertexType vertex_type_at(const ToroidalMap& m, int vertex);

struct MapTypeClassification {
  std::vector<VertexType> types;            // sorted
  std::vector<std::vector<int>> partition;  // vertex indices per type
};
MapTypeClassification vertex_types(const ToroidalMap& m);

bool is_2_semiequivelar(const ToroidalMap& m);

}  // namespace tilecover
