#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilecover/torusmap.hpp"

namespace tilecover {

struct MapAutomorphism {
  std::vector<int> flag_perm;
  std::vector<int> vertex_perm;
  std::vector<int> edge_perm;
  std::vector<int> face_perm;
  bool orientation_preserving = true;
};

struct OrbitPartition {
  std::vector<std::vector<int>> orbits;  // sorted blocks, ordered by least element
  std::size_t count() const { return orbits.size(); }
};

/// Return false from the callback to stop the enumeration.
using AutomorphismVisitor = std::function<bool(const MapAutomorphism&)>;

/// Enumerates every automorphism by fixing flag 0 and trying each candidate
/// image, in increasing flag order. Candidates are first filtered by colour
/// refinement on the flag graph.
void for_each_automorphism(const ToroidalMap& m, const AutomorphismVisitor& visit);

std::vector<MapAutomorphism> automorphisms(const ToroidalMap& m);

/// The automorphism with flag 0 -> target, if there is one.
std::optional<MapAutomorphism> extend_flag(const ToroidalMap& m, int target);

/// Vertex orbits of the full automorphism group. The enumeration stops early
/// once the orbits coincide with the vertex-type classes, which cannot be
/// merged further.
OrbitPartition vertex_orbits(const ToroidalMap& m);

bool is_2_uniform(const ToroidalMap& m);

/// Orbits of the translations H/gamma acting on a quotient.
OrbitPartition translation_orbits(const ToroidalMap& m);

enum class CoveringErrorReason { NotSublattice, NotLocalIso, FiberMismatch };
std::string to_string(CoveringErrorReason r);

class CoveringError : public std::runtime_error {
 public:
  CoveringError(CoveringErrorReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  CoveringErrorReason reason() const { return reason_; }

 private:
  CoveringErrorReason reason_;
};

struct CoveringMap {
  int degree = 0;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> face_map;
};

/// Projection Y -> X given by (class, v + L) -> (class, v + gamma). Both maps
/// must be quotients of the same tiling; throws std::invalid_argument if not.
CoveringMap verify_covering(const ToroidalMap& y, const ToroidalMap& x);

}  // namespace tilecover
