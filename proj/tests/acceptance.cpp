// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are part of each criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "tilecover/io.hpp"

using namespace tilecover;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;
constexpr double kNoLimit = 1e9;

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.pass && in_time;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " [" << secs << " s";
  if (limit_s < 1e8) line << ", limit " << limit_s << " s";
  line << "]";
  if (!in_time) line << " (over time)";
  if (!o.detail.empty()) line << " -- " << o.detail;
  std::cout << line.str() << std::endl;
  return pass;
}

using Pair = std::pair<VertexType, VertexType>;

Pair pair_of(const std::string& a, const std::string& b) {
  auto x = VertexType::parse(a), y = VertexType::parse(b);
  return x < y ? Pair{x, y} : Pair{y, x};
}

// The fourteen type pairs listed in the literature.
std::set<Pair> listed_pairs() {
  return {pair_of("[3^6]", "[3^3,4^2]"),       pair_of("[3^6]", "[3^2,4,3,4]"),
          pair_of("[3^6]", "[3^4,6]"),         pair_of("[3^6]", "[3^2,4,12]"),
          pair_of("[3^4,6]", "[3^2,6^2]"),     pair_of("[3^3,4^2]", "[3^2,4,3,4]"),
          pair_of("[3^3,4^2]", "[3,4,6,4]"),   pair_of("[3^3,4^2]", "[4^4]"),
          pair_of("[3^2,4,3,4]", "[3,4,6,4]"), pair_of("[3^2,6^2]", "[3,6,3,6]"),
          pair_of("[3,4,3,12]", "[3,12^2]"),   pair_of("[3,4^2,6]", "[3,4,6,4]"),
          pair_of("[3,4^2,6]", "[3,6,3,6]"),   pair_of("[3,4,6,4]", "[4,6,12]")};
}

std::string pair_name(const Pair& p) { return pair_to_string(p.first, p.second); }

Outcome catalog_integrity() {
  Outcome o;
  std::ostringstream d;
  const auto& cat = catalog();
  if (cat.size() != 20) {
    o.pass = false;
    d << cat.size() << " entries (want 20); ";
  }
  std::set<Pair> pairs;
  for (const auto& t : cat) {
    auto a = t.declared_types.at(0), b = t.declared_types.at(1);
    pairs.insert(a < b ? Pair{a, b} : Pair{b, a});
    if (!validate_geometry(t).ok()) {
      o.pass = false;
      d << t.name << " fails geometry; ";
    }
    std::vector<VertexType> declared{a, b};
    std::sort(declared.begin(), declared.end());
    if (classify_types(t).types != declared) {
      o.pass = false;
      d << t.name << " types differ from declared; ";
    }
    try {
      if (!is_2_semiequivelar(quotient(t, {4, 0, 4}))) {
        o.pass = false;
        d << t.name << " quotient not 2-semiequivelar; ";
      }
    } catch (const PolyhedralityError& e) {
      o.pass = false;
      d << t.name << ": " << e.what() << "; ";
    }
  }
  const auto listed = listed_pairs();
  if (pairs != listed) o.pass = false;
  d << pairs.size() << " distinct pairs (want 14)";
  for (const auto& p : pairs)
    if (!listed.count(p)) d << ", extra " << pair_name(p);
  for (const auto& p : listed)
    if (!pairs.count(p)) d << ", missing " << pair_name(p);
  o.detail = d.str();
  return o;
}

Outcome lattice_arithmetic() {
  for (Int n = 1; n <= 50; ++n)
    if (static_cast<Int>(enumerate_sublattices(n).size()) != oracle::sigma(n))
      return {false, "sublattice count differs from sigma(" + std::to_string(n) + ")"};
  int hnfs = 0;
  for (Int n = 1; n <= 30; ++n)
    for (const auto& h : enumerate_sublattices(n)) {
      ++hnfs;
      if (minimal_exponent(h.matrix()) != oracle::minimal_exponent(h))
        return {false, "minimal_exponent differs at " + to_string(h)};
    }
  std::mt19937 rng(1);
  std::uniform_int_distribution<Int> entry(-10, 10), coord(-50, 50);
  int checked = 0;
  while (checked < 10000) {
    IntMatrix2 m{entry(rng), entry(rng), entry(rng), entry(rng)};
    if (m.det() == 0) continue;
    ++checked;
    const SublatticeHNF h = hnf(m);
    if (hnf(h.matrix()) != h || lattice_index(h.matrix()) != lattice_index(m)) return {false, "HNF not idempotent"};
    for (int i = 0; i < 2; ++i)
      if (!contains(m, h.matrix().column(i)) || !contains(h.matrix(), m.column(i))) return {false, "HNF changes the lattice"};
    const Vec2i v{coord(rng), coord(rng)};
    if (contains(m, v) != (coset_rep(h, v) == Vec2i{})) return {false, "membership disagrees with coset_rep"};
  }
  return {true, std::to_string(hnfs) + " HNFs of index <= 30, 10000 random matrices"};
}

Outcome quotient_soundness() {
  int maps = 0;
  for (const auto& t : catalog()) {
    const auto types = classify_types(t).types;
    for (Int n = 1; n <= 16; ++n)
      for (const auto& g : enumerate_sublattices(n)) {
        ToroidalMap m;
        try {
          m = quotient(t, g);
        } catch (const PolyhedralityError&) {
          continue;
        }
        ++maps;
        const auto nn = static_cast<std::size_t>(n);
        const bool ok = m.euler_characteristic() == 0 && m.vertices.size() == t.num_classes() * nn &&
                        m.edges.size() == t.edge_classes.size() * nn && m.faces.size() == t.face_classes.size() * nn &&
                        vertex_types(m).types == types;
        if (!ok) return {false, t.name + " " + to_string(g)};
      }
  }
  return {true, std::to_string(maps) + " polyhedral quotients"};
}

Outcome automorphism_oracle() {
  std::vector<PeriodicTiling> corpus = catalog();
  for (auto t : {fixtures::square_grid(), fixtures::triangle_grid(), fixtures::hexagon_grid(), fixtures::kagome()})
    corpus.push_back(t);
  int maps = 0;
  for (const auto& t : corpus)
    for (Int n = 1; n * static_cast<Int>(t.num_classes()) <= 24; ++n)
      for (const auto& g : enumerate_sublattices(n)) {
        ToroidalMap m;
        try {
          m = quotient(t, g);
        } catch (const PolyhedralityError&) {
          continue;
        }
        ++maps;
        std::set<std::vector<int>> mine;
        for (const auto& a : automorphisms(m)) mine.insert(a.vertex_perm);
        if (mine != oracle::vertex_automorphisms(m)) return {false, t.name + " " + to_string(g)};
      }
  const std::size_t square = automorphisms(quotient(fixtures::square_grid(), {3, 0, 3})).size();
  if (square != 72) return {false, "|Aut| of the 3x3 square torus is " + std::to_string(square)};
  return {true, std::to_string(maps) + " maps, |Aut(3x3 [4^4])| = 72"};
}

Outcome claims_1_2() {
  std::vector<PointSymmetry> linear;
  for (const auto& t : catalog())
    for (const auto& s : point_symmetries(t)) linear.push_back(s.linear);
  std::mt19937 rng(2);
  std::uniform_int_distribution<Int> idx(1, 100);
  for (int i = 0; i < 1000; ++i) {
    const auto all = enumerate_sublattices(idx(rng));
    const auto g = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const IntMatrix2 l = IntMatrix2::scalar(minimal_exponent(g.matrix()));
    if (!contains(g.matrix(), l.column(0)) || !contains(g.matrix(), l.column(1)))
      return {false, "m I not inside " + to_string(g)};
    for (const auto& p : linear)
      if (!is_invariant(l, p)) return {false, "m I not invariant for " + to_string(g)};
  }
  return {true, "1000 gammas, " + std::to_string(linear.size()) + " point symmetries"};
}

}  // namespace

int main() {
  constexpr Int kBound = 16;
  bool all = true;
  all &= run(1, "catalog integrity", 5, catalog_integrity);
  all &= run(2, "lattice arithmetic", 10, lattice_arithmetic);
  all &= run(3, "quotient soundness, index <= 16", 60, quotient_soundness);
  all &= run(4, "automorphisms vs brute force, <= 24 vertices", 60, automorphism_oracle);

  CensusReport rep;
  double census_secs = 0;
  {
    const auto t0 = Clock::now();
    rep = census(kBound);
    census_secs = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  std::ostringstream census_note;
  census_note.setf(std::ios::fixed);
  census_note.precision(1);
  census_note << "census(" << kBound << ") took " << census_secs << " s";
  std::cout << "      " << census_note.str() << std::endl;

  all &= run(5, "2-uniform covers for the 16 (a)-type lattices", 600 - census_secs, [&] {
    Outcome o;
    int entries = 0, quotients = 0;
    std::ostringstream d;
    for (const auto& lc : rep.entries) {
      if (is_no_cover_type(catalog_entry(lc.name))) continue;
      ++entries;
      for (const auto& r : lc.evidence) {
        if (!r.polyhedral) continue;
        ++quotients;
        if (!r.failure.empty() || !r.cover_verified || r.status == CoverStatus::NoCoverWitnessed || r.cover_orbits != 2) {
          o.pass = false;
          d << lc.name << " " << to_string(r.gamma) << "; ";
        }
      }
    }
    if (entries != 16) o.pass = false;
    d << entries << " entries, " << quotients << " quotients";
    o.detail = d.str();
    return o;
  });

  all &= run(6, "at least 3 orbits for the 4 (b)-type lattices", 300, [&] {
    Outcome o;
    int entries = 0;
    std::ostringstream d;
    for (const auto& lc : rep.entries) {
      if (!is_no_cover_type(catalog_entry(lc.name))) continue;
      ++entries;
      int two = 0, total = 0;
      std::string first;
      for (const auto& r : lc.evidence) {
        if (!r.polyhedral) continue;
        ++total;
        if (r.orbits < 3) {
          if (two++ == 0) first = to_string(r.gamma);
        }
      }
      d << lc.name << ": " << two << "/" << total << " quotients with 2 orbits";
      if (two) d << " (first " << first << ")";
      d << "; ";
      o.pass = o.pass && two == 0;
    }
    if (entries != 4) o.pass = false;
    d << entries << " entries";
    o.detail = d.str();
    return o;
  });

  all &= run(7, "census groups (10, 6, 4) with 6 identity lattices", kNoLimit, [&] {
    int identity_a = 0;
    std::ostringstream d;
    for (const auto& lc : rep.entries)
      if (!is_no_cover_type(catalog_entry(lc.name)) && lc.group == LatticeGroup::A_IDENTITY) ++identity_a;
    d << "group sizes (" << rep.a_cover << ", " << rep.a_identity << ", " << rep.b_no_cover << "), " << identity_a
      << " identity lattices among the (a) types";
    for (const auto& lc : rep.entries) {
      bool stable = true;
      for (std::size_t k = 3; k < lc.by_bound.size(); ++k) stable = stable && lc.by_bound[k] == lc.group;
      if (!stable) d << "; " << lc.name << " unstable across bounds";
    }
    return Outcome{rep.matches_expected && identity_a == 6 && rep.entries.size() == 20, d.str()};
  });

  all &= run(8, "cover lattice inside gamma and point-group invariant", 10, claims_1_2);

  all &= run(9, "census reports are byte-identical", kNoLimit, [&] {
    const std::string a = dump(to_json(rep));
    const std::string b = dump(to_json(census(kBound)));
    return Outcome{a == b, std::to_string(a.size()) + " bytes"};
  });

  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
