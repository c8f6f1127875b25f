#include "tilecover/io.hpp"

#include <map>

namespace tilecover {

namespace {

Json point_json(const QuadPoint& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

QuadPoint point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("point must be [x, y]");
  return {quad_from_json(j[0]), quad_from_json(j[1])};
}

Json vec_json(Vec2i v) { return Json::array({v.x, v.y}); }

Vec2i vec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("offset must be [dx, dy]");
  return {j[0].get<Int>(), j[1].get<Int>()};
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

const PeriodicTiling* lookup_tiling(const std::string& name) {
  for (const auto& t : catalog())
    if (t.name == name) return &t;
  static const std::vector<PeriodicTiling> extra = {fixtures::square_grid(), fixtures::triangle_grid(),
                                                    fixtures::hexagon_grid(), fixtures::kagome()};
  for (const auto& t : extra)
    if (t.name == name) return &t;
  return nullptr;
}

Json to_json(const QuadExact& x) {
  const Rational& p = x.rational_part();
  const Rational& q = x.sqrt3_part();
  return Json::array({p.numerator(), p.denominator(), q.numerator(), q.denominator()});
}

QuadExact quad_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("QuadExact must be [p_num, p_den, q_num, q_den]");
  return guarded([&] {
    auto pd = j[1].get<std::int64_t>(), qd = j[3].get<std::int64_t>();
    if (pd == 0 || qd == 0) throw FormatError("zero denominator");
    return QuadExact(Rational(j[0].get<std::int64_t>(), pd), Rational(j[2].get<std::int64_t>(), qd));
  });
}

Json to_json(const SublatticeHNF& h) { return Json::array({h.a, h.b, 0, h.d}); }

SublatticeHNF sublattice_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw FormatError("gamma must be [a, b, 0, d]");
  return guarded([&] {
    SublatticeHNF h{j[0].get<Int>(), j[1].get<Int>(), j[3].get<Int>()};
    if (j[2].get<Int>() != 0 || h.a < 1 || h.d < 1 || h.b < 0 || h.b >= h.a)
      throw FormatError("gamma is not in Hermite normal form");
    return h;
  });
}

Json to_json(const PeriodicTiling& t) {
  Json j;
  j["name"] = t.name;
  j["basis"] = Json::array({point_json(t.basis_a), point_json(t.basis_b)});
  Json vs = Json::array();
  for (const auto& v : t.vertex_classes) vs.push_back({{"label", v.label}, {"position", point_json(v.position)}});
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : t.edge_classes) es.push_back(Json::array({e.u, e.v, vec_json(e.offset)}));
  j["edges"] = es;
  Json fs = Json::array();
  for (const auto& f : t.face_classes) {
    Json face = Json::array();
    for (const auto& c : f) face.push_back(Json::array({c.vclass, vec_json(c.offset)}));
    fs.push_back(face);
  }
  j["faces"] = fs;
  Json types = Json::array();
  for (const auto& vt : t.declared_types) types.push_back(vt.to_string());
  j["types"] = types;
  return j;
}

PeriodicTiling tiling_from_json(const Json& j) {
  return guarded([&] {
    PeriodicTiling t;
    t.name = j.at("name").get<std::string>();
    const Json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != 2) throw FormatError("basis must hold two vectors");
    t.basis_a = point_from_json(basis[0]);
    t.basis_b = point_from_json(basis[1]);
    for (const auto& v : j.at("vertices"))
      t.vertex_classes.push_back({v.at("label").get<std::string>(), point_from_json(v.at("position"))});
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw FormatError("edge must be [u, v, [dx, dy]]");
      t.edge_classes.push_back({e[0].get<int>(), e[1].get<int>(), vec_from_json(e[2])});
    }
    for (const auto& f : j.at("faces")) {
      FaceClass fc;
      for (const auto& c : f) {
        if (!c.is_array() || c.size() != 2) throw FormatError("face corner must be [v, [dx, dy]]");
        fc.push_back({c[0].get<int>(), vec_from_json(c[1])});
      }
      t.face_classes.push_back(std::move(fc));
    }
    for (const auto& s : j.at("types")) t.declared_types.push_back(VertexType::parse(s.get<std::string>()));
    return t;
  });
}

Json to_json(const ToroidalMap& m) {
  Json j;
  j["source"] = m.source;
  j["gamma"] = to_json(m.gamma);
  j["V"] = m.vertices.size();
  j["E"] = m.edges.size();
  j["F"] = m.faces.size();
  Json vs = Json::array();
  for (const auto& v : m.vertices) vs.push_back(Json::array({v.vclass, vec_json(v.coset)}));
  j["vertices"] = vs;
  Json es = Json::array(), ep = Json::array();
  for (const auto& e : m.edges) {
    es.push_back(Json::array({e.u, e.v}));
    ep.push_back(Json::array({e.eclass, vec_json(e.cell)}));
  }
  j["edges"] = es;
  Json fs = Json::array(), fp = Json::array();
  for (const auto& f : m.faces) {
    fs.push_back(f.vertices);
    fp.push_back(Json::array({f.fclass, vec_json(f.cell)}));
  }
  j["faces"] = fs;
  j["edge_provenance"] = ep;
  j["face_provenance"] = fp;
  return j;
}

ToroidalMap map_from_json(const Json& j) {
  ToroidalMap m = guarded([&] {
    ToroidalMap m;
    m.source = j.at("source").get<std::string>();
    m.gamma = sublattice_from_json(j.at("gamma"));
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 2) throw FormatError("vertex must be [class, [x, y]]");
      m.vertices.push_back({v[0].get<int>(), vec_from_json(v[1])});
    }
    const int nv = static_cast<int>(m.vertices.size());
    auto check_vertex = [&](int v) {
      if (v < 0 || v >= nv) throw FormatError("vertex index out of range");
      return v;
    };
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("edge must be [i, j]");
      m.edges.push_back({check_vertex(e[0].get<int>()), check_vertex(e[1].get<int>()), -1, {}});
    }
    for (const auto& f : j.at("faces")) {
      MapFace face;
      for (const auto& v : f) face.vertices.push_back(check_vertex(v.get<int>()));
      if (face.vertices.size() < 3) throw FormatError("face with fewer than three vertices");
      m.faces.push_back(std::move(face));
    }
    if (j.contains("edge_provenance")) {
      const Json& ep = j["edge_provenance"];
      if (ep.size() != m.edges.size()) throw FormatError("edge_provenance length mismatch");
      for (std::size_t i = 0; i < ep.size(); ++i) {
        m.edges[i].eclass = ep[i].at(0).get<int>();
        m.edges[i].cell = vec_from_json(ep[i].at(1));
      }
    }
    if (j.contains("face_provenance")) {
      const Json& fp = j["face_provenance"];
      if (fp.size() != m.faces.size()) throw FormatError("face_provenance length mismatch");
      for (std::size_t i = 0; i < fp.size(); ++i) {
        m.faces[i].fclass = fp[i].at(0).get<int>();
        m.faces[i].cell = vec_from_json(fp[i].at(1));
      }
    }
    for (const char* key : {"V", "E", "F"})
      if (j.contains(key)) {
        std::size_t want = j[key].get<std::size_t>();
        std::size_t have = key[0] == 'V' ? m.vertices.size() : (key[0] == 'E' ? m.edges.size() : m.faces.size());
        if (want != have) throw FormatError(std::string(key) + " does not match the listed elements");
      }
    return m;
  });
  finalize_map(m);
  return m;
}

Json to_json(const OrbitPartition& p) {
  Json sizes = Json::array();
  for (const auto& o : p.orbits) sizes.push_back(o.size());
  return {{"count", p.count()}, {"sizes", sizes}, {"orbits", p.orbits}};
}

Json automorphisms_to_json(const ToroidalMap& m) {
  Json arr = Json::array();
  for_each_automorphism(m, [&](const MapAutomorphism& a) {
    arr.push_back({{"vertex_perm", a.vertex_perm}, {"orientation_preserving", a.orientation_preserving}});
    return true;
  });
  return arr;
}

Json to_json(const CoveringMap& c) {
  return {{"degree", c.degree}, {"vertex_map", c.vertex_map}};
}

Json to_json(const CoverResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["m"] = r.m;
  j["scale"] = r.scale;
  j["cover_lattice"] = to_json(r.cover_lattice);
  j["orbits_x"] = r.orbits_x;
  j["orbits_y"] = r.orbits_y;
  j["types_y"] = r.types_y;
  if (r.cover) {
    j["cover_V"] = r.cover->vertices.size();
    j["cover_E"] = r.cover->edges.size();
    j["cover_F"] = r.cover->faces.size();
  }
  if (r.covering) j["degree"] = r.covering->degree;
  j["covering_verified"] = r.covering.has_value();
  j["contradicts_expectation"] = r.contradicts_expectation;
  if (r.minimal) j["minimal"] = {{"lattice", to_json(r.minimal->lattice)}, {"degree", r.minimal->degree}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const LatticeClassification& lc) {
  Json j;
  j["name"] = lc.name;
  j["types"] = lc.type_pair;
  j["group"] = to_string(lc.group);
  j["all_covers_verified"] = lc.all_covers_verified;

  // Per index: quotients examined, rejects, orbit-count and degree histograms.
  std::map<Int, Json> per_index;
  std::map<int, int> orbit_hist, degree_hist;
  std::map<std::string, int> rejects;
  for (const auto& rec : lc.evidence) {
    Json& slot = per_index[rec.gamma.index()];
    if (slot.is_null()) slot = {{"index", rec.gamma.index()}, {"sublattices", 0}, {"polyhedral", 0}};
    slot["sublattices"] = slot["sublattices"].get<int>() + 1;
    if (!rec.polyhedral) {
      ++rejects[rec.reject_reason];
      continue;
    }
    slot["polyhedral"] = slot["polyhedral"].get<int>() + 1;
    ++orbit_hist[rec.orbits];
    ++degree_hist[rec.degree];
  }
  Json idx = Json::array();
  for (auto& [k, v] : per_index) idx.push_back(v);
  j["per_index"] = idx;
  Json oh = Json::object(), dh = Json::object(), rj = Json::object();
  for (auto [k, v] : orbit_hist) oh[std::to_string(k)] = v;
  for (auto [k, v] : degree_hist) dh[std::to_string(k)] = v;
  for (auto& [k, v] : rejects) rj[k] = v;
  j["orbit_histogram"] = oh;
  j["degree_histogram"] = dh;
  j["rejects"] = rj;

  Json bounds = Json::array();
  for (std::size_t k = 0; k < lc.by_bound.size(); ++k) bounds.push_back(to_string(lc.by_bound[k]));
  j["group_by_bound"] = bounds;
  bool stable = true;
  for (std::size_t k = 3; k < lc.by_bound.size(); ++k) stable = stable && lc.by_bound[k] == lc.group;
  j["stable_from_index_4"] = stable;

  Json ev = Json::array();
  for (const auto& rec : lc.evidence) {
    Json r = {{"gamma", to_json(rec.gamma)}, {"polyhedral", rec.polyhedral}};
    if (!rec.polyhedral) {
      r["reject"] = rec.reject_reason;
    } else {
      r["orbits"] = rec.orbits;
      r["status"] = to_string(rec.status);
      r["degree"] = rec.degree;
      r["cover_orbits"] = rec.cover_orbits;
      r["verified"] = rec.cover_verified;
      if (!rec.failure.empty()) r["failure"] = rec.failure;
    }
    ev.push_back(r);
  }
  j["evidence"] = ev;
  return j;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["max_index"] = r.max_index;
  j["group_sizes"] = {{"A_COVER", r.a_cover}, {"A_IDENTITY", r.a_identity}, {"B_NO_COVER", r.b_no_cover}};
  j["expected_group_sizes"] = {{"A_COVER", 10}, {"A_IDENTITY", 6}, {"B_NO_COVER", 4}};
  j["matches_expected"] = r.matches_expected;
  Json table = Json::array();
  for (const auto& e : r.entries) table.push_back({{"name", e.name}, {"types", e.type_pair}, {"group", to_string(e.group)}});
  j["classification"] = table;
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back(to_json(e));
  j["entries"] = entries;
  return j;
}

std::string dump(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace tilecover
