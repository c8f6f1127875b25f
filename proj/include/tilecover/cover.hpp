#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tilecover/aut.hpp"
#include "tilecover/periodic.hpp"
#include "tilecover/torusmap.hpp"

namespace tilecover {

enum class CoverStatus { CoverFound, IdentityCover, NoCoverWitnessed };
std::string to_string(CoverStatus s);

struct IntermediateCover {
  SublatticeHNF lattice;
  int degree = 0;
};

struct CoverResult {
  CoverStatus status = CoverStatus::NoCoverWitnessed;
  Int m = 1;                       // minimal exponent of gamma
  Int scale = 1;                   // L = scale * m * I
  SublatticeHNF cover_lattice;     // L
  std::shared_ptr<const ToroidalMap> cover;
  std::optional<CoveringMap> covering;
  int orbits_x = 0;
  int orbits_y = 0;
  int types_y = 0;
  /// Set for the two type pairs where no 2-uniform cover is expected but
  /// one was found anyway.
  bool contradicts_expectation = false;
  /// Smallest 2-uniform cover strictly between L and gamma (--minimal).
  std::optional<IntermediateCover> minimal;
  std::string note;
};

struct CoverOptions {
  bool search_minimal = false;
  Int max_scale = 8;
};

/// True for the two type pairs [3^3,4^2;3^2,4,3,4] and [3,4^2,6;3,6,3,6].
bool is_no_cover_type(const PeriodicTiling& t);

/// Caches quotients by m*I so repeated calls share the cover maps.
class CoverContext {
 public:
  explicit CoverContext(const PeriodicTiling& t) : tiling_(t) {}
  const PeriodicTiling& tiling() const { return tiling_; }

  struct ScaledCover {
    std::shared_ptr<const ToroidalMap> map;  // null if not polyhedral
    int orbits = 0;
    int types = 0;
  };
  const ScaledCover& scaled(Int k);

 private:
  const PeriodicTiling& tiling_;
  std::map<Int, ScaledCover> cache_;
};

/// Throws PolyhedralityError if K/gamma is not polyhedral, or if no scaling of
/// m*I up to max_scale gives a polyhedral cover.
CoverResult construct_cover(const PeriodicTiling& t, const SublatticeHNF& gamma, const CoverOptions& opt = {});
CoverResult construct_cover(CoverContext& ctx, const SublatticeHNF& gamma, const CoverOptions& opt = {});

enum class LatticeGroup { A_COVER, A_IDENTITY, B_NO_COVER };
std::string to_string(LatticeGroup g);

struct QuotientRecord {
  SublatticeHNF gamma;
  bool polyhedral = false;
  std::string reject_reason;  // PolyhedralityReason when not polyhedral
  int orbits = 0;
  CoverStatus status = CoverStatus::NoCoverWitnessed;
  int degree = 0;
  bool cover_verified = false;
  int cover_orbits = 0;
  std::string failure;  // non-empty if the cover pipeline failed
};

struct LatticeClassification {
  std::string name;
  std::string type_pair;
  LatticeGroup group = LatticeGroup::A_COVER;
  Int max_index = 0;
  std::vector<QuotientRecord> evidence;
  bool all_covers_verified = true;
  /// Classification using only quotients of index <= k, for k = 1..max_index.
  std::vector<LatticeGroup> by_bound;
};

LatticeClassification classify_lattice(const PeriodicTiling& t, Int max_index);

/// Group from evidence restricted to index <= bound.
LatticeGroup group_from_evidence(const PeriodicTiling& t, const std::vector<QuotientRecord>& evidence, Int bound);

struct CensusReport {
  Int max_index = 0;
  std::vector<LatticeClassification> entries;
  int a_cover = 0, a_identity = 0, b_no_cover = 0;
  bool matches_expected = false;  // (10, 6, 4)
};

CensusReport census(Int max_index);

}  // namespace tilecover
