#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "tilecover/aut.hpp"
#include "tilecover/cover.hpp"
#include "tilecover/periodic.hpp"
#include "tilecover/torusmap.hpp"

namespace tilecover {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Catalog entries and the test fixtures by name; nullptr if unknown.
const PeriodicTiling* lookup_tiling(const std::string& name);

Json to_json(const QuadExact& x);
QuadExact quad_from_json(const Json& j);

Json to_json(const SublatticeHNF& h);
/// Accepts [a,b,0,d] and rejects anything that is not in normal form.
SublatticeHNF sublattice_from_json(const Json& j);

Json to_json(const PeriodicTiling& t);
PeriodicTiling tiling_from_json(const Json& j);

Json to_json(const ToroidalMap& m);
/// Rebuilds the map and reruns the polyhedrality checks.
ToroidalMap map_from_json(const Json& j);

Json to_json(const OrbitPartition& p);
Json automorphisms_to_json(const ToroidalMap& m);
Json to_json(const CoveringMap& c);
Json to_json(const CoverResult& r);
Json to_json(const LatticeClassification& lc);
Json to_json(const CensusReport& r);

/// Stable text form used for files and byte-for-byte comparisons.
std::string dump(const Json& j);

}  // namespace tilecover
