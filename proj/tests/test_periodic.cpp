#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "tilecover/periodic.hpp"

using namespace tilecover;

namespace {

using Pair = std::pair<VertexType, VertexType>;

Pair sorted_pair(const PeriodicTiling& t) {
  auto a = t.declared_types.at(0), b = t.declared_types.at(1);
  return a < b ? Pair{a, b} : Pair{b, a};
}

Pair pair_of(const char* a, const char* b) {
  auto x = VertexType::parse(a), y = VertexType::parse(b);
  return x < y ? Pair{x, y} : Pair{y, x};
}

// The type pairs named in the source literature's list of 2-uniform types.
const std::vector<Pair>& listed_pairs() {
  static const std::vector<Pair> v = {
      pair_of("[3^6]", "[3^3,4^2]"),       pair_of("[3^6]", "[3^2,4,3,4]"),
      pair_of("[3^6]", "[3^4,6]"),         pair_of("[3^6]", "[3^2,4,12]"),
      pair_of("[3^4,6]", "[3^2,6^2]"),     pair_of("[3^3,4^2]", "[3^2,4,3,4]"),
      pair_of("[3^3,4^2]", "[3,4,6,4]"),   pair_of("[3^3,4^2]", "[4^4]"),
      pair_of("[3^2,4,3,4]", "[3,4,6,4]"), pair_of("[3^2,6^2]", "[3,6,3,6]"),
      pair_of("[3,4,3,12]", "[3,12^2]"),   pair_of("[3,4^2,6]", "[3,4,6,4]"),
      pair_of("[3,4^2,6]", "[3,6,3,6]"),   pair_of("[3,4,6,4]", "[4,6,12]"),
  };
  return v;
}

// Pairs carried by two different tilings.
const std::set<Pair>& doubled_pairs() {
  static const std::set<Pair> s = {
      pair_of("[3^6]", "[3^4,6]"), pair_of("[3^6]", "[3^3,4^2]"), pair_of("[3^3,4^2]", "[3^2,4,3,4]"),
      pair_of("[3^3,4^2]", "[4^4]"), pair_of("[3,4^2,6]", "[3,6,3,6]")};
  return s;
}

int find_symmetry(const std::vector<TilingSymmetry>& syms, const IntMatrix2& m, const std::vector<int>& perm) {
  for (std::size_t i = 0; i < syms.size(); ++i)
    if (syms[i].linear.matrix == m && syms[i].class_perm == perm) return static_cast<int>(i);
  return -1;
}

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

}  // namespace

TEST(Fixtures, ValidAndSingleType) {
  for (auto t : {fixtures::square_grid(), fixtures::triangle_grid(), fixtures::hexagon_grid(), fixtures::kagome()}) {
    auto rep = validate_geometry(t);
    EXPECT_TRUE(rep.ok()) << t.name << ": " << (rep.ok() ? "" : rep.violations[0]);
    auto ct = classify_types(t);
    EXPECT_EQ(ct.types, t.declared_types) << t.name;
  }
  EXPECT_EQ(face_cycle_type(fixtures::square_grid(), 0), VertexType::parse("[4^4]"));
  EXPECT_EQ(classify_types(fixtures::hexagon_grid()).partition, (std::vector<std::vector<int>>{{0, 1}}));
}

TEST(Fixtures, NegativeControls) {
  const auto bad = testfix::mislabeled_triangles();
  EXPECT_TRUE(validate_geometry(bad).ok());
  EXPECT_NE(classify_types(bad).types, bad.declared_types);

  const auto rep = validate_geometry(testfix::long_edges());
  ASSERT_FALSE(rep.ok());
  EXPECT_TRUE(std::any_of(rep.violations.begin(), rep.violations.end(),
                          [](const std::string& s) { return s.find("edge not unit length") != std::string::npos; }));

  const auto rows = testfix::three_type_rows();
  EXPECT_TRUE(validate_geometry(rows).ok());
  EXPECT_EQ(classify_types(rows).types.size(), 3u);
}

TEST(Fixtures, BrokenFaceIsReported) {
  auto t = fixtures::kagome();
  std::reverse(t.face_classes[0].begin(), t.face_classes[0].end());
  EXPECT_FALSE(validate_geometry(t).ok());
  auto u = fixtures::square_grid();
  u.face_classes.push_back(u.face_classes[0]);
  EXPECT_FALSE(validate_geometry(u).ok());
}

TEST(Catalog, HasTwentyEntries) { EXPECT_EQ(catalog().size(), 20u); }

TEST(Catalog, EveryEntryValidatesWithItsDeclaredPair) {
  for (const auto& t : catalog()) {
    auto rep = validate_geometry(t);
    EXPECT_TRUE(rep.ok()) << t.name << ": " << (rep.ok() ? "" : rep.violations[0]);
    auto ct = classify_types(t);
    std::vector<VertexType> declared = t.declared_types;
    std::sort(declared.begin(), declared.end());
    EXPECT_EQ(ct.types, declared) << t.name;
    ASSERT_EQ(ct.partition.size(), 2u);
    EXPECT_FALSE(ct.partition[0].empty());
    EXPECT_FALSE(ct.partition[1].empty());
    // Labels follow the declared order: a* for the first type, b* for the second.
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      EXPECT_EQ(t.vertex_classes[c].label[0] == 'a', face_cycle_type(t, static_cast<int>(c)) == t.declared_types[0]);
  }
}

TEST(Catalog, TypePairs) {
  std::map<Pair, int> count;
  for (const auto& t : catalog()) ++count[sorted_pair(t)];
  for (const auto& p : listed_pairs())
    EXPECT_TRUE(count.count(p)) << pair_to_string(p.first, p.second) << " missing";
  // The list above leaves out [3^6;3^2,6^2], which exists as a 2-uniform
  // tiling; the catalog carries it, so there are 15 distinct pairs.
  EXPECT_EQ(count[pair_of("[3^6]", "[3^2,6^2]")], 1);
  EXPECT_EQ(count.size(), 15u);
  for (const auto& [p, n] : count) EXPECT_EQ(n, doubled_pairs().count(p) ? 2 : 1) << pair_to_string(p.first, p.second);
}

TEST(Catalog, NamesEncodeTypes) {
  std::set<std::string> names;
  for (const auto& t : catalog()) {
    EXPECT_TRUE(names.insert(t.name).second) << t.name;
    const std::string stem = "K-" + t.declared_types[0].compact() + "_" + t.declared_types[1].compact() + "-";
    EXPECT_EQ(t.name.substr(0, stem.size()), stem);
    EXPECT_EQ(&catalog_entry(t.name), &t);
  }
  EXPECT_THROW(catalog_entry("K-nope"), std::out_of_range);
}

// Neighbour types alone do not separate the two [3,4^2,6;3,6,3,6] tilings:
// both are kagome strips between rows of squares, aligned in one and shifted
// by half a period in the other. The reduced lattice Gram matrix does.
TEST(Catalog, SharedPairsHaveDifferentCertificates) {
  const auto& cat = catalog();
  std::vector<std::string> same_neighbours;
  int shared = 0;
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (sorted_pair(cat[i]) != sorted_pair(cat[j])) continue;
      ++shared;
      auto ci = neighbour_type_certificate(cat[i]), cj = neighbour_type_certificate(cat[j]);
      std::sort(ci.begin(), ci.end());
      std::sort(cj.begin(), cj.end());
      if (ci == cj) {
        same_neighbours.push_back(cat[i].name);
        EXPECT_NE(reduced_gram(cat[i]), reduced_gram(cat[j])) << cat[i].name << " vs " << cat[j].name;
      }
    }
  EXPECT_EQ(shared, 5);
  EXPECT_EQ(same_neighbours, std::vector<std::string>{"K-3446_3636-a"});
}

TEST(Catalog, ReducedGramIsBasisIndependent) {
  for (const auto& t : catalog()) {
    PeriodicTiling u = t;
    u.basis_b = t.basis_b + QuadExact(3) * t.basis_a;
    u.basis_a = t.basis_a + QuadExact(2) * u.basis_b;  // det 1 change of basis
    EXPECT_EQ(reduced_gram(u), reduced_gram(t)) << t.name;
  }
}

TEST(Catalog, FaceCycleExamples) {
  for (const auto& t : catalog()) {
    auto ct = classify_types(t);
    if (sorted_pair(t) == pair_of("[3^6]", "[3^4,6]")) {
      EXPECT_EQ(t.declared_types[0], VertexType::parse("[3^6]"));
      EXPECT_EQ(face_cycle_type(t, 0), VertexType::parse("[3^6]"));
    }
    if (sorted_pair(t) == pair_of("[3,4,6,4]", "[4,6,12]")) {
      int b = -1;
      for (std::size_t c = 0; c < t.num_classes() && b < 0; ++c)
        if (t.vertex_classes[c].label[0] == 'b') b = static_cast<int>(c);
      ASSERT_GE(b, 0);
      EXPECT_EQ(face_cycle_type(t, b), VertexType::parse("[4,6,12]"));
    }
  }
}

TEST(Catalog, FaceCycleIgnoresCellRelabelling) {
  for (const auto& t : catalog()) {
    PeriodicTiling u = t;
    for (auto& f : u.face_classes)
      for (auto& c : f) c.offset = c.offset + Vec2i{3, -2};
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      EXPECT_EQ(face_cycle_type(u, static_cast<int>(c)), face_cycle_type(t, static_cast<int>(c))) << t.name;
  }
}

TEST(Catalog, TranslationBasisIsMinimal) {
  // A translation symmetry outside the lattice would show up as a symmetry
  // with trivial linear part other than the identity.
  for (const auto& t : catalog()) {
    auto syms = point_symmetries(t);
    int translations = 0;
    for (const auto& s : syms) translations += s.rotation == 0 && !s.reflection;
    EXPECT_EQ(translations, 1) << t.name;
  }
}

TEST(Catalog, SymmetriesFormAGroup) {
  std::vector<PeriodicTiling> all = catalog();
  all.push_back(fixtures::square_grid());
  all.push_back(fixtures::kagome());
  for (const auto& t : all) {
    auto syms = point_symmetries(t);
    ASSERT_FALSE(syms.empty());
    std::vector<int> id(t.num_classes());
    for (std::size_t c = 0; c < id.size(); ++c) id[c] = static_cast<int>(c);
    EXPECT_EQ(syms[0].linear.matrix, IntMatrix2::identity()) << t.name;
    EXPECT_EQ(syms[0].class_perm, id) << t.name;
    for (const auto& p : syms) {
      bool has_inverse = false;
      for (const auto& q : syms) {
        const IntMatrix2 m = p.linear.matrix * q.linear.matrix;
        const auto perm = compose(p.class_perm, q.class_perm);
        EXPECT_GE(find_symmetry(syms, m, perm), 0) << t.name;
        has_inverse = has_inverse || (m == IntMatrix2::identity() && perm == id);
      }
      EXPECT_TRUE(has_inverse) << t.name;
    }
  }
}

TEST(Catalog, RotationOrders) {
  auto has_order = [](const PeriodicTiling& t, int k) {
    for (const auto& s : point_symmetries(t))
      if (!s.reflection && s.linear.order() == k) return true;
    return false;
  };
  EXPECT_TRUE(has_order(fixtures::square_grid(), 4));
  int hex_entries = 0;
  for (const auto& t : catalog())
    if (sorted_pair(t) == pair_of("[3^6]", "[3^4,6]")) {
      ++hex_entries;
      EXPECT_TRUE(has_order(t, 6)) << t.name;
    }
  EXPECT_EQ(hex_entries, 2);
}

TEST(Catalog, SymmetriesPreserveTypes) {
  for (const auto& t : catalog()) {
    std::vector<VertexType> types;
    for (std::size_t c = 0; c < t.num_classes(); ++c) types.push_back(face_cycle_type(t, static_cast<int>(c)));
    for (const auto& s : point_symmetries(t))
      for (std::size_t c = 0; c < t.num_classes(); ++c)
        EXPECT_EQ(types[c], types[static_cast<std::size_t>(s.class_perm[c])]) << t.name;
  }
}
