#include "tilecover/cover.hpp"

#include <algorithm>

namespace tilecover {

std::string to_string(CoverStatus s) {
  switch (s) {
    case CoverStatus::CoverFound: return "CoverFound";
    case CoverStatus::IdentityCover: return "IdentityCover";
    case CoverStatus::NoCoverWitnessed: return "NoCoverWitnessed";
  }
  return "Unknown";
}

std::string to_string(LatticeGroup g) {
  switch (g) {
    case LatticeGroup::A_COVER: return "A_COVER";
    case LatticeGroup::A_IDENTITY: return "A_IDENTITY";
    case LatticeGroup::B_NO_COVER: return "B_NO_COVER";
  }
  return "Unknown";
}

bool is_no_cover_type(const PeriodicTiling& t) {
  static const std::vector<std::vector<VertexType>> pairs = {
      {VertexType::parse("[3^3,4^2]"), VertexType::parse("[3^2,4,3,4]")},
      {VertexType::parse("[3,4^2,6]"), VertexType::parse("[3,6,3,6]")},
  };
  std::vector<VertexType> declared = t.declared_types;
  std::sort(declared.begin(), declared.end());
  for (auto p : pairs) {
    std::sort(p.begin(), p.end());
    if (p == declared) return true;
  }
  return false;
}

const CoverContext::ScaledCover& CoverContext::scaled(Int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;
  ScaledCover sc;
  try {
    auto y = std::make_shared<ToroidalMap>(quotient(tiling_, {k, 0, k}));
    sc.types = static_cast<int>(vertex_types(*y).types.size());
    sc.orbits = static_cast<int>(vertex_orbits(*y).count());
    sc.map = std::move(y);
  } catch (const PolyhedralityError&) {
  }
  return cache_.emplace(k, std::move(sc)).first->second;
}

namespace {

bool two_uniform(int types, int orbits) { return types == 2 && orbits == 2; }

// Smallest 2-uniform quotient K/G' with L < G' < gamma.
std::optional<IntermediateCover> smallest_intermediate(const PeriodicTiling& t, const ToroidalMap& x,
                                                       const SublatticeHNF& gamma, const SublatticeHNF& l) {
  const Int lo = gamma.index(), hi = l.index();
  const IntMatrix2 g = gamma.matrix(), lm = l.matrix();
  for (Int n = lo + 1; n < hi; ++n) {
    if (n % lo != 0 || hi % n != 0) continue;
    for (const auto& h : enumerate_sublattices(n)) {
      const IntMatrix2 hm = h.matrix();
      if (!contains(hm, lm.column(0)) || !contains(hm, lm.column(1))) continue;
      if (!contains(g, hm.column(0)) || !contains(g, hm.column(1))) continue;
      try {
        ToroidalMap y = quotient(t, h);
        if (!is_2_uniform(y)) continue;
        CoveringMap c = verify_covering(y, x);
        return IntermediateCover{h, c.degree};
      } catch (const PolyhedralityError&) {
      }
    }
  }
  return std::nullopt;
}

CoverResult cover_from_quotient(CoverContext& ctx, const ToroidalMap& x, const CoverOptions& opt) {
  const PeriodicTiling& t = ctx.tiling();
  CoverResult r;
  r.m = minimal_exponent(x.gamma.matrix());
  const int types_x = static_cast<int>(vertex_types(x).types.size());
  r.orbits_x = static_cast<int>(vertex_orbits(x).count());
  const bool expect_none = is_no_cover_type(t);

  if (two_uniform(types_x, r.orbits_x)) {
    r.status = CoverStatus::IdentityCover;
    r.cover_lattice = x.gamma;
    r.cover = std::make_shared<ToroidalMap>(x);
    r.covering = verify_covering(x, x);
    r.orbits_y = r.orbits_x;
    r.types_y = types_x;
    r.contradicts_expectation = expect_none;
    if (expect_none) r.note = "quotient is already 2-uniform although no 2-uniform cover was expected";
    return r;
  }

  std::optional<PolyhedralityError> last_error;
  for (Int k = 1; k <= opt.max_scale; ++k) {
    const auto& sc = ctx.scaled(k * r.m);
    if (!sc.map) continue;
    r.scale = k;
    r.cover_lattice = sc.map->gamma;
    r.cover = sc.map;
    r.covering = verify_covering(*sc.map, x);
    r.orbits_y = sc.orbits;
    r.types_y = sc.types;
    if (two_uniform(sc.types, sc.orbits)) {
      r.status = CoverStatus::CoverFound;
      r.contradicts_expectation = expect_none;
      if (expect_none) r.note = "found a 2-uniform cover although none was expected";
      if (opt.search_minimal) r.minimal = smallest_intermediate(t, x, x.gamma, r.cover_lattice);
    } else {
      r.status = CoverStatus::NoCoverWitnessed;
      r.note = "K/" + to_string(r.cover_lattice) + " has " + std::to_string(sc.orbits) + " vertex orbits";
    }
    return r;
  }
  throw PolyhedralityError(PolyhedralityReason::FacePairBadIntersection, {},
                           "no polyhedral cover K/(k m I) for k <= " + std::to_string(opt.max_scale));
}

}  // namespace

CoverResult construct_cover(CoverContext& ctx, const SublatticeHNF& gamma, const CoverOptions& opt) {
  ToroidalMap x = quotient(ctx.tiling(), gamma);
  return cover_from_quotient(ctx, x, opt);
}

CoverResult construct_cover(const PeriodicTiling& t, const SublatticeHNF& gamma, const CoverOptions& opt) {
  CoverContext ctx(t);
  return construct_cover(ctx, gamma, opt);
}

LatticeGroup group_from_evidence(const PeriodicTiling& t, const std::vector<QuotientRecord>& evidence, Int bound) {
  bool all_two = true, all_three_plus = true;
  for (const auto& rec : evidence) {
    if (!rec.polyhedral || rec.gamma.index() > bound) continue;
    all_two = all_two && rec.orbits == 2;
    all_three_plus = all_three_plus && rec.orbits >= 3;
  }
  if (is_no_cover_type(t) && all_three_plus) return LatticeGroup::B_NO_COVER;
  return all_two ? LatticeGroup::A_IDENTITY : LatticeGroup::A_COVER;
}

LatticeClassification classify_lattice(const PeriodicTiling& t, Int max_index) {
  LatticeClassification lc;
  lc.name = t.name;
  lc.type_pair = t.declared_types.size() == 2 ? pair_to_string(t.declared_types[0], t.declared_types[1]) : "";
  lc.max_index = max_index;
  CoverContext ctx(t);
  for (Int n = 1; n <= max_index; ++n) {
    for (const auto& h : enumerate_sublattices(n)) {
      QuotientRecord rec;
      rec.gamma = h;
      std::optional<ToroidalMap> x;
      try {
        x.emplace(quotient(t, h));
      } catch (const PolyhedralityError& e) {
        rec.reject_reason = to_string(e.reason());
        lc.evidence.push_back(std::move(rec));
        continue;
      }
      rec.polyhedral = true;
      try {
        CoverResult cr = cover_from_quotient(ctx, *x, {});
        rec.orbits = cr.orbits_x;
        rec.status = cr.status;
        rec.degree = cr.covering ? cr.covering->degree : 0;
        rec.cover_verified = cr.covering.has_value();
        rec.cover_orbits = cr.orbits_y;
      } catch (const std::exception& e) {
        rec.failure = e.what();
        rec.orbits = static_cast<int>(vertex_orbits(*x).count());
      }
      const bool ok = rec.failure.empty() && rec.status != CoverStatus::NoCoverWitnessed;
      if (!ok && !is_no_cover_type(t)) lc.all_covers_verified = false;
      lc.evidence.push_back(std::move(rec));
    }
  }
  for (Int k = 1; k <= max_index; ++k) lc.by_bound.push_back(group_from_evidence(t, lc.evidence, k));
  lc.group = group_from_evidence(t, lc.evidence, max_index);
  return lc;
}

CensusReport census(Int max_index) {
  CensusReport rep;
  rep.max_index = max_index;
  for (const auto& t : catalog()) {
    rep.entries.push_back(classify_lattice(t, max_index));
    switch (rep.entries.back().group) {
      case LatticeGroup::A_COVER: ++rep.a_cover; break;
      case LatticeGroup::A_IDENTITY: ++rep.a_identity; break;
      case LatticeGroup::B_NO_COVER: ++rep.b_no_cover; break;
    }
  }
  rep.matches_expected = rep.a_cover == 10 && rep.a_identity == 6 && rep.b_no_cover == 4;
  return rep;
}

}  // namespace tilecover
