#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tilecover/cover.hpp"

using namespace tilecover;

namespace {

const PeriodicTiling& twelve_class_hex_entry() {
  for (const auto& t : catalog())
    if (t.declared_types[1] == VertexType::parse("[3^4,6]") && t.num_classes() == 12) return t;
  throw std::logic_error("no 12-class [3^6;3^4,6] entry");
}

void expect_sound(const CoverResult& r, const ToroidalMap& x) {
  ASSERT_TRUE(r.cover);
  ASSERT_TRUE(r.covering.has_value());
  EXPECT_EQ(r.cover->source, x.source);
  EXPECT_EQ(r.cover_lattice, r.cover->gamma);
  EXPECT_EQ(r.covering->degree, static_cast<int>(r.cover_lattice.index() / x.gamma.index()));
  EXPECT_EQ(r.covering->vertex_map.size(), r.cover->vertices.size());
  if (r.status != CoverStatus::NoCoverWitnessed) {
    EXPECT_TRUE(is_2_uniform(*r.cover));
    EXPECT_EQ(r.orbits_y, 2);
    EXPECT_EQ(r.types_y, 2);
  }
}

}  // namespace

TEST(Cover, NoCoverTypes) {
  int n = 0;
  for (const auto& t : catalog()) n += is_no_cover_type(t);
  EXPECT_EQ(n, 4);
  EXPECT_FALSE(is_no_cover_type(fixtures::square_grid()));
}

TEST(Cover, ScaledIdentityGammaNeedsNoCover) {
  const auto& t = twelve_class_hex_entry();
  for (Int k = 3; k <= 4; ++k) {
    const SublatticeHNF g{k, 0, k};
    const CoverResult r = construct_cover(t, g);
    EXPECT_TRUE(r.status == CoverStatus::IdentityCover || (r.status == CoverStatus::CoverFound && r.cover_lattice == g));
    EXPECT_EQ(r.m, k);
    expect_sound(r, quotient(t, g));
  }
}

TEST(Cover, Index3Example) {
  const auto& t = twelve_class_hex_entry();
  const SublatticeHNF g{3, 1, 1};
  const CoverResult r = construct_cover(t, g);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(oracle::minimal_exponent(g), 3);
  const ToroidalMap x = quotient(t, g);
  expect_sound(r, x);
  ASSERT_NE(r.status, CoverStatus::NoCoverWitnessed);
  // This gamma is invariant under the order-6 rotation, so the quotient is
  // already 2-uniform and the identity is the cover.
  EXPECT_EQ(r.status, CoverStatus::IdentityCover);
  EXPECT_EQ(r.covering->degree, 1);
  // Forcing L = 3I gives the degree 9/3 = 3 cover, also 2-uniform.
  const ToroidalMap y = quotient(t, {3, 0, 3});
  EXPECT_EQ(verify_covering(y, x).degree, 3);
  EXPECT_TRUE(is_2_uniform(y));
}

TEST(Cover, NonUniformQuotientGetsCover) {
  const auto& t = twelve_class_hex_entry();
  CoverContext ctx(t);
  int found = 0;
  for (Int n = 2; n <= 8; ++n)
    for (const auto& g : enumerate_sublattices(n)) {
      ToroidalMap x;
      try {
        x = quotient(t, g);
      } catch (const PolyhedralityError&) {
        continue;
      }
      const CoverResult r = construct_cover(ctx, g);
      expect_sound(r, x);
      ASSERT_NE(r.status, CoverStatus::NoCoverWitnessed) << to_string(g);
      if (r.status == CoverStatus::CoverFound) {
        ++found;
        EXPECT_GT(r.orbits_x, 2);
        EXPECT_EQ(r.cover_lattice.a % r.m, 0);
        if (r.scale == 1) EXPECT_EQ(r.covering->degree, r.m * r.m / g.index());
      }
    }
  EXPECT_GT(found, 0);
}

TEST(Cover, MinimalIntermediate) {
  const auto& t = twelve_class_hex_entry();
  for (const auto& g : enumerate_sublattices(6)) {
    CoverResult r;
    try {
      r = construct_cover(t, g, {true, 8});
    } catch (const PolyhedralityError&) {
      continue;
    }
    if (r.status != CoverStatus::CoverFound || !r.minimal) continue;
    const ToroidalMap x = quotient(t, g);
    const ToroidalMap mid = quotient(t, r.minimal->lattice);
    EXPECT_TRUE(is_2_uniform(mid));
    EXPECT_EQ(verify_covering(mid, x).degree, r.minimal->degree);
    EXPECT_LT(r.minimal->lattice.index(), r.cover_lattice.index());
    verify_covering(*r.cover, mid);
  }
}

TEST(Cover, NoCoverTypeRecordsEvidence) {
  for (const auto& t : catalog()) {
    if (!is_no_cover_type(t)) continue;
    // At least one quotient has three or more orbits.
    bool witnessed = false;
    for (Int n = 4; n <= 9 && !witnessed; ++n)
      for (const auto& g : enumerate_sublattices(n)) {
        try {
          const CoverResult r = construct_cover(t, g);
          if (r.orbits_x >= 3) {
            witnessed = true;
            EXPECT_EQ(r.status == CoverStatus::NoCoverWitnessed, !is_2_uniform(*r.cover));
            break;
          }
        } catch (const PolyhedralityError&) {
        }
      }
    EXPECT_TRUE(witnessed) << t.name;
  }
}

TEST(Cover, CoverLatticeLiesInGammaAndIsInvariant) {
  std::mt19937 rng(5);
  for (const auto& t : catalog()) {
    const auto syms = point_symmetries(t);
    for (int i = 0; i < 50; ++i) {
      const auto all = enumerate_sublattices(std::uniform_int_distribution<Int>(1, 100)(rng));
      const auto g = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
      const IntMatrix2 l = IntMatrix2::scalar(minimal_exponent(g.matrix()));
      EXPECT_TRUE(contains(g.matrix(), l.column(0)) && contains(g.matrix(), l.column(1)));
      for (const auto& s : syms) EXPECT_TRUE(is_invariant(l, s.linear));
    }
  }
}

TEST(Classification, GroupFromEvidence) {
  const auto& a = twelve_class_hex_entry();
  const PeriodicTiling* b = nullptr;
  for (const auto& t : catalog())
    if (is_no_cover_type(t)) b = &t;
  ASSERT_NE(b, nullptr);
  auto rec = [](Int a_, Int d, int orbits, bool poly = true) {
    QuotientRecord r;
    r.gamma = {a_, 0, d};
    r.polyhedral = poly;
    r.orbits = orbits;
    return r;
  };
  std::vector<QuotientRecord> two{rec(1, 3, 2), rec(2, 2, 2), rec(1, 1, 0, false)};
  std::vector<QuotientRecord> mixed{rec(1, 3, 2), rec(3, 3, 4)};
  std::vector<QuotientRecord> many{rec(1, 3, 3), rec(3, 3, 4)};
  EXPECT_EQ(group_from_evidence(a, two, 16), LatticeGroup::A_IDENTITY);
  EXPECT_EQ(group_from_evidence(a, mixed, 16), LatticeGroup::A_COVER);
  EXPECT_EQ(group_from_evidence(a, mixed, 3), LatticeGroup::A_IDENTITY);
  EXPECT_EQ(group_from_evidence(a, many, 16), LatticeGroup::A_COVER);
  EXPECT_EQ(group_from_evidence(*b, many, 16), LatticeGroup::B_NO_COVER);
  EXPECT_EQ(group_from_evidence(*b, mixed, 16), LatticeGroup::A_COVER);
}

TEST(Classification, SmallBoundCounts) {
  const Int bound = 6;
  for (const auto& t : catalog()) {
    const LatticeClassification lc = classify_lattice(t, bound);
    Int expected = 0;
    for (Int k = 1; k <= bound; ++k) expected += oracle::sigma(k);
    EXPECT_EQ(static_cast<Int>(lc.evidence.size()), expected);
    ASSERT_EQ(static_cast<Int>(lc.by_bound.size()), bound);
    EXPECT_EQ(lc.by_bound.back(), lc.group);
    for (const auto& r : lc.evidence) {
      EXPECT_TRUE(r.failure.empty()) << t.name << " " << to_string(r.gamma) << ": " << r.failure;
      if (r.polyhedral) {
        EXPECT_GE(r.orbits, 2);
        EXPECT_TRUE(r.cover_verified);
      } else {
        EXPECT_FALSE(r.reject_reason.empty());
      }
    }
    if (!is_no_cover_type(t)) EXPECT_TRUE(lc.all_covers_verified) << t.name;
  }
}
