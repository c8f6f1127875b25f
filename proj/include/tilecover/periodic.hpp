#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilecover/lattice.hpp"
#include "tilecover/quad_exact.hpp"
#include "tilecover/vertex_type.hpp"

namespace tilecover {

struct VertexClass {
  std::string label;
  QuadPoint position;  // inside the fundamental parallelogram
};

/// Edge from class u in cell (0,0) to class v in cell `offset`.
struct EdgeClass {
  int u = 0;
  int v = 0;
  Vec2i offset;
};

struct FaceCorner {
  int vclass = 0;
  Vec2i offset;
  friend auto operator<=>(const FaceCorner&, const FaceCorner&) = default;
};

/// Corners in counter-clockwise order.
using FaceClass = std::vector<FaceCorner>;

class MalformedTiling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A doubly periodic polygonal complex: classes of vertices, edges and faces
/// under the translation lattice Z*A + Z*B.
struct PeriodicTiling {
  std::string name;
  QuadPoint basis_a;
  QuadPoint basis_b;
  std::vector<VertexClass> vertex_classes;
  std::vector<EdgeClass> edge_classes;
  std::vector<FaceClass> face_classes;
  std::vector<VertexType> declared_types;

  QuadPoint translation(Vec2i offset) const {
    return QuadExact(offset.x) * basis_a + QuadExact(offset.y) * basis_b;
  }
  QuadPoint position(int vclass, Vec2i offset) const {
    return vertex_classes[static_cast<std::size_t>(vclass)].position + translation(offset);
  }
  std::size_t num_classes() const { return vertex_classes.size(); }
};

/// Build a tiling from vertices and faces; edge classes are derived from the
/// face boundaries, one per translation class of undirected edge, in order of
/// first appearance.
PeriodicTiling assemble_tiling(std::string name, QuadPoint a, QuadPoint b,
                               std::vector<VertexClass> vertices, std::vector<FaceClass> faces,
                               std::vector<VertexType> declared);

/// Side i of a face (corner i to corner i+1) as an edge class. `reversed`
/// means the side runs from the edge's v to its u.
struct FaceSide {
  int edge = 0;
  bool reversed = false;
  /// Cell of the edge's u endpoint relative to the face's cell.
  Vec2i shift;
};

/// Throws MalformedTiling if a face side matches no edge class.
std::vector<std::vector<FaceSide>> face_sides(const PeriodicTiling& t);

VertexType face_cycle_type(const PeriodicTiling& t, int vclass);

struct TypeClassification {
  std::vector<VertexType> types;            // sorted
  std::vector<std::vector<int>> partition;  // classes per type, same order
};
TypeClassification classify_types(const PeriodicTiling& t);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_geometry(const PeriodicTiling& t);

/// Isometry x -> R x + shift preserving the tiling, up to lattice
/// translations. R is rotation by 30*rotation degrees, applied after the
/// reflection (x, y) -> (x, -y) when `reflection` is set.
struct TilingSymmetry {
  PointSymmetry linear;       // action on the basis (A, B)
  int rotation = 0;
  bool reflection = false;
  std::vector<int> class_perm;         // class c goes to class_perm[c]
  std::vector<Vec2i> class_offset;     // ... in cell class_offset[c]
  QuadPoint shift;

  bool orientation_reversing() const { return reflection; }
};

/// All point symmetries modulo translations; the identity comes first.
std::vector<TilingSymmetry> point_symmetries(const PeriodicTiling& t);

/// Multiset of neighbour vertex types per class, used to tell apart tilings
/// that share a type pair.
std::vector<std::map<VertexType, int>> neighbour_type_certificate(const PeriodicTiling& t);

/// Gram entries (|a|^2, |b|^2, |a.b|) of a Lagrange-reduced basis of the
/// translation lattice. An isometry invariant; it separates tilings whose
/// neighbour certificates agree because they differ only in how strips line up.
std::array<QuadExact, 3> reduced_gram(const PeriodicTiling& t);

/// The built-in catalog of 2-uniform tilings.
const std::vector<PeriodicTiling>& catalog();

/// Throws std::out_of_range for an unknown name.
const PeriodicTiling& catalog_entry(const std::string& name);

namespace fixtures {
/// Unit square grid, one vertex class.
PeriodicTiling square_grid();
/// Triangular lattice on a hexagonal basis, one vertex class.
PeriodicTiling triangle_grid();
/// Regular hexagonal tiling, two vertex classes.
PeriodicTiling hexagon_grid();
/// Kagome tiling [3,6,3,6].
PeriodicTiling kagome();
}  // namespace fixtures

}  // namespace tilecover
