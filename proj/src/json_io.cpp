#include "eloday/json_io.hpp"

#include <fstream>
#include <sstream>

namespace eloday {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw JsonError((where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

BigInt integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(where, "expected an integer");
}

long long small_integer(const Json& j, const std::string& where) {
  BigInt v = integer(j, where);
  if (!v.fits_int64()) fail(where, "integer out of range");
  return v.to_int64();
}

Json integer_json(const BigInt& v) {
  if (v.fits_int64()) return Json(v.to_int64());
  return Json(v.str());
}

IntVector vector_from_json(const Json& j, long n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of integers");
  if (static_cast<long>(j.size()) != n) fail(where, "expected " + std::to_string(n) + " entries");
  IntVector v(n);
  for (long i = 0; i < n; ++i) v(i) = integer(j[i], where + "/" + std::to_string(i));
  return v;
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (long i = 0; i < v.size(); ++i) a.push_back(integer_json(v(i)));
  return a;
}

// A list of vectors of length n, as the columns of an n x k matrix.
IntMatrix columns_from_json(const Json& j, long n, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of vectors");
  IntMatrix m(n, static_cast<long>(j.size()));
  for (size_t c = 0; c < j.size(); ++c)
    m.col(static_cast<long>(c)) = vector_from_json(j[c], n, where + "/" + std::to_string(c));
  return m;
}

Json columns_json(const IntMatrix& m) {
  Json a = Json::array();
  for (long c = 0; c < m.cols(); ++c) a.push_back(vector_json(m.col(c)));
  return a;
}

std::string subgroup_names(const Subgroup& H) {
  std::string s;
  for (Elem h : H.members()) s += (s.empty() ? "" : ",") + H.parent()->name(h);
  return s;
}

const char* orbit_type_name(OrbitType t) {
  switch (t) {
    case OrbitType::Free:
      return "free";
    case OrbitType::H:
      return "H";
    case OrbitType::Hp:
      return "H'";
    case OrbitType::K:
      return "K";
  }
  return "?";
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // locate the byte offset reported by the parser
    size_t line = 1, col = 1;
    const size_t stop = std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    auto pos = what.find("; ");
    if (pos != std::string::npos) what = what.substr(pos + 2);
    throw JsonError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (long j = 0; j < m.cols(); ++j) r.push_back(integer_json(m(i, j)));
    rows.push_back(r);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  long r = small_integer(field(j, "rows", where), where + "/rows");
  long c = small_integer(field(j, "cols", where), where + "/cols");
  if (r < 0 || c < 0) fail(where, "negative dimension");
  const Json& d = field(j, "data", where);
  if (!d.is_array() || static_cast<long>(d.size()) != r) fail(where + "/data", "expected " + std::to_string(r) + " rows");
  IntMatrix m(r, c);
  for (long i = 0; i < r; ++i) m.row(i) = vector_from_json(d[i], c, where + "/data/" + std::to_string(i)).transpose();
  return m;
}

Json abelian_to_json(const FgAbelianGroup& A) {
  Json t = Json::array();
  for (auto& d : A.torsion()) t.push_back(integer_json(d));
  return Json{{"free_rank", A.free_rank()}, {"torsion", t}, {"display", A.str()}};
}

FgAbelianGroup abelian_from_json(const Json& j, const std::string& where) {
  long r = small_integer(field(j, "free_rank", where), where + "/free_rank");
  const Json& t = field(j, "torsion", where);
  if (!t.is_array()) fail(where + "/torsion", "expected an array");
  std::vector<BigInt> tor;
  for (size_t i = 0; i < t.size(); ++i) tor.push_back(integer(t[i], where + "/torsion/" + std::to_string(i)));
  try {
    return FgAbelianGroup(static_cast<int>(r), tor);
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Json group_to_json(const FiniteGroup& G) {
  return Json{{"label", G.label()}, {"order", G.order()}, {"mult", G.table()}, {"names", G.names()}};
}

GroupPtr group_from_json(const Json& j) {
  long n = small_integer(field(j, "order", ""), "/order");
  const Json& mult = field(j, "mult", "");
  if (!mult.is_array() || static_cast<long>(mult.size()) != n * n)
    fail("/mult", "expected " + std::to_string(n * n) + " entries");
  std::vector<int> table;
  for (size_t i = 0; i < mult.size(); ++i)
    table.push_back(static_cast<int>(small_integer(mult[i], "/mult/" + std::to_string(i))));
  std::vector<std::string> names;
  if (j.contains("names")) {
    const Json& a = j["names"];
    if (!a.is_array() || static_cast<long>(a.size()) != n) fail("/names", "expected " + std::to_string(n) + " names");
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) fail("/names/" + std::to_string(i), "expected a string");
      names.push_back(a[i].get<std::string>());
    }
  } else {
    for (long i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  std::string label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  try {
    return std::make_shared<FiniteGroup>(table, names, label);
  } catch (const GroupError& e) {
    fail("/mult", e.what());
  }
}

Json group_info(const GroupPtr& G) {
  Json out = group_to_json(*G);
  Json classes = Json::array();
  for (auto& c : conjugacy_classes(G)) {
    Json cl = Json::array();
    for (Elem g : c) cl.push_back(G->name(g));
    classes.push_back(cl);
  }
  out["conjugacy_classes"] = classes;
  auto subs = all_subgroups(G);
  auto index_of = [&](const Subgroup& K) {
    for (size_t i = 0; i < subs.size(); ++i)
      if (subs[i] == K) return static_cast<int>(i);
    return -1;
  };
  Json lattice = Json::array();
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& H = subs[i];
    auto info = subgroup_tools(H);
    Json above = Json::array();
    for (size_t k = 0; k < subs.size(); ++k)
      if (k != i && is_subgroup_of(H, subs[k])) above.push_back(k);
    Json conj = Json::array();
    for (auto& c : info.conjugates) conj.push_back(index_of(c));
    lattice.push_back(Json{{"index", i},
                           {"label", H.label()},
                           {"order", H.order()},
                           {"members", subgroup_names(H)},
                           {"normal", info.is_normal},
                           {"contained_in", above},
                           {"conjugates", conj},
                           {"normalizer", index_of(info.normalizer)},
                           {"weyl_order", info.weyl.quotient->order()}});
  }
  out["subgroups"] = lattice;
  return out;
}

RingPresentation presentation_from_json(const Json& j) {
  RingPresentation p;
  p.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  const Json& gens = field(j, "generators", "");
  if (!gens.is_array() || gens.empty()) fail("/generators", "expected a nonempty array of names");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) fail("/generators/" + std::to_string(i), "expected a string");
    p.generators.push_back(gens[i].get<std::string>());
  }
  const long n = static_cast<long>(p.generators.size());
  p.relations = j.contains("relations") ? columns_from_json(j["relations"], n, "/relations") : IntMatrix(n, 0);
  const Json& mult = field(j, "mult", "");
  if (!mult.is_array() || static_cast<long>(mult.size()) != n) fail("/mult", "expected " + std::to_string(n) + " rows");
  p.mult.resize(n);
  for (long a = 0; a < n; ++a) {
    const std::string w = "/mult/" + std::to_string(a);
    if (!mult[a].is_array() || static_cast<long>(mult[a].size()) != n) fail(w, "expected " + std::to_string(n) + " products");
    for (long b = 0; b < n; ++b) p.mult[a].push_back(vector_from_json(mult[a][b], n, w + "/" + std::to_string(b)));
  }
  p.unit = vector_from_json(field(j, "unit", ""), n, "/unit");
  if (j.contains("involution") && !j["involution"].is_null()) {
    IntMatrix m = columns_from_json(j["involution"], n, "/involution");
    if (m.cols() != n) fail("/involution", "expected one image per generator");
    p.involution = m;
  }
  if (j.contains("commutative") && !j["commutative"].is_null()) {
    if (!j["commutative"].is_boolean()) fail("/commutative", "expected a boolean");
    p.commutative = j["commutative"].get<bool>();
  }
  return p;
}

Json presentation_to_json(const RingPresentation& p) {
  Json j;
  j["name"] = p.name;
  j["generators"] = p.generators;
  j["relations"] = columns_json(p.relations);
  Json mult = Json::array();
  for (auto& row : p.mult) {
    Json r = Json::array();
    for (auto& v : row) r.push_back(vector_json(v));
    mult.push_back(r);
  }
  j["mult"] = mult;
  j["unit"] = vector_json(p.unit);
  j["involution"] = p.involution ? columns_json(*p.involution) : Json(nullptr);
  j["commutative"] = p.commutative ? Json(*p.commutative) : Json(nullptr);
  return j;
}

CoefficientSpec coefficient_from_json(const Json& j) {
  CoefficientSpec c;
  if (!j.is_object()) fail("", "expected an object");
  c.id = j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : "";
  const Json& rj = field(j, "ring", "");
  RingPresentation p;
  try {
    p = presentation_from_json(rj);
  } catch (const JsonError& e) {
    throw JsonError(std::string("/ring") + e.what());
  }
  try {
    c.ring = Ring::make(p);
  } catch (const RingError& e) {
    fail("/ring", e.what());
  }
  if (c.id.empty()) c.id = c.ring->name();
  if (!j.contains("action")) return c;
  const Json& a = j["action"];
  if (a.is_string()) {
    const auto s = a.get<std::string>();
    if (s == "trivial") {
      c.action = ActionKind::Trivial;
    } else if (s == "involution") {
      if (!c.ring->involution()) fail("/action", "the ring has no involution");
      c.action = ActionKind::Involution;
    } else {
      fail("/action", "unknown action '" + s + "'");
    }
    return c;
  }
  c.action = ActionKind::Generators;
  const Json& g = field(a, "group", "/action");
  if (!g.is_string()) fail("/action/group", "expected a group name");
  c.group = g.get<std::string>();
  try {
    group_by_name(c.group);
  } catch (const GroupError& e) {
    fail("/action/group", e.what());
  }
  const Json& gens = field(a, "generators", "/action");
  if (!gens.is_object()) fail("/action/generators", "expected an object keyed by element name");
  const long n = static_cast<long>(p.generators.size());
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    IntMatrix m = columns_from_json(it.value(), n, "/action/generators/" + it.key());
    if (m.cols() != n) fail("/action/generators/" + it.key(), "expected one image per generator");
    c.images.emplace_back(it.key(), m);
  }
  return c;
}

CoefficientSpec load_coefficient(const std::string& path) {
  Json j = read_json_file(path);
  try {
    return coefficient_from_json(j);
  } catch (const JsonError& e) {
    throw JsonError(path + ": " + e.what());
  }
}

GRingPtr coefficient_ring(const CoefficientSpec& c, const Subgroup& H) {
  switch (c.action) {
    case ActionKind::Trivial:
      return trivial_hring(H, c.ring);
    case ActionKind::Involution:
      return esigma_hring(H, c.ring);
    case ActionKind::Generators: {
      const auto& G = H.parent();
      if (group_by_name(c.group)->table() != G->table())
        throw RingError("coefficient " + c.id + " acts through " + c.group + ", not " + G->label());
      std::vector<Elem> gens;
      std::vector<TransformPtr> images;
      for (auto& [name, m] : c.images) {
        Elem g = G->parse(name);
        if (!H.contains(g)) throw RingError("element " + name + " is outside " + H.label());
        gens.push_back(g);
        images.push_back(transform_from_presentation(c.ring, c.ring, m,
                                                     c.ring->is_commutative() ? MapKind::Hom : MapKind::AntiHom, name));
      }
      return hring_from_generators(H, c.ring, gens, images, c.id);
    }
  }
  throw RingError("unknown action kind");
}

Json space_to_json(const FinSimpGSet& X) {
  Json j;
  j["name"] = X.name;
  j["group"] = X.G->label();
  j["truncation"] = X.N;
  j["isotropy_mode"] = isotropy_kind_name(X.mode.kind);
  Json levels = Json::array();
  for (int n = 0; n <= X.N; ++n) {
    Json orbits = Json::array();
    for (auto& o : X.levels[n].orbits)
      orbits.push_back(Json{{"label", o.label}, {"isotropy", subgroup_names(o.isotropy)}, {"type", orbit_type_name(o.type)}});
    levels.push_back(Json{{"degree", n}, {"elements", X.levels[n].count}, {"orbits", orbits}});
  }
  j["levels"] = levels;
  auto maps = [&](const std::vector<std::vector<EqMap>>& all, int first) {
    Json out = Json::array();
    for (size_t n = first; n < all.size(); ++n) {
      Json per = Json::array();
      for (auto& f : all[n]) {
        Json img = Json::array();
        for (auto& im : f.image) img.push_back(Json{{"orbit", im.orbit}, {"c", X.G->name(im.c)}});
        per.push_back(img);
      }
      out.push_back(Json{{"degree", n}, {"maps", per}});
    }
    return out;
  };
  j["faces"] = maps(X.faces, 1);
  j["degeneracies"] = maps(X.degens, 0);
  return j;
}

Json wiring_to_json(const Wiring& w) {
  Json out = Json::array();
  for (auto& fs : w.out) {
    Json slot = Json::array();
    for (auto& f : fs) slot.push_back(Json{{"src", f.src}, {"map", f.t ? Json(f.t->label) : Json(nullptr)}});
    out.push_back(slot);
  }
  return out;
}

Json wiring_matrix(const Wiring& w, long long max_dim) {
  TensorSpace dom(w.dom), cod(w.cod);
  if (dom.dim() > max_dim) return nullptr;
  Json entries = Json::array();
  for (long long m = 0; m < dom.dim(); ++m)
    for (auto& [row, v] : apply_mono(w, dom, cod, m)) entries.push_back(Json::array({row, m, v}));
  return Json{{"rows", cod.dim()}, {"cols", dom.dim()}, {"entries", entries}};
}

Json simplicial_ring_to_json(const SimplicialGRing& S, bool matrices) {
  Json j;
  j["name"] = S.name;
  j["group"] = S.G->label();
  j["truncation"] = S.N;
  j["multiplicative"] = S.multiplicative;
  Json levels = Json::array();
  for (int n = 0; n <= S.N; ++n) {
    Json slots = Json::array();
    for (int s = 0; s < S.levels[n]->size(); ++s) {
      const auto& t = S.tags[n][s];
      slots.push_back(Json{{"ring", S.levels[n]->slots[s]->name()},
                           {"orbit", t.orbit},
                           {"coset", t.coset},
                           {"rep", S.G->name(t.rep)}});
    }
    levels.push_back(Json{{"degree", n}, {"monomials", S.levels[n]->space().dim()}, {"slots", slots}});
  }
  j["levels"] = levels;
  auto maps = [&](const std::vector<std::vector<GRingHom>>& all, int first) {
    Json out = Json::array();
    for (size_t n = first; n < all.size(); ++n) {
      Json per = Json::array();
      for (auto& f : all[n]) {
        Json m{{"wiring", wiring_to_json(f.w)}};
        if (matrices) m["matrix"] = wiring_matrix(f.w);
        per.push_back(m);
      }
      out.push_back(Json{{"degree", n}, {"maps", per}});
    }
    return out;
  };
  j["faces"] = maps(S.faces, 1);
  j["degeneracies"] = maps(S.degens, 0);
  return j;
}

Json rows_to_json(const std::vector<HomologyRow>& rows) {
  Json a = Json::array();
  for (auto& r : rows) {
    Json t = Json::array();
    for (auto& d : r.value.torsion()) t.push_back(integer_json(d));
    a.push_back(Json{{"space", r.space},
                     {"coefficient", r.coefficient},
                     {"subgroup", r.subgroup},
                     {"degree", r.degree},
                     {"free_rank", r.value.free_rank()},
                     {"torsion", t}});
  }
  return a;
}

std::string rows_to_csv(const std::vector<HomologyRow>& rows) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::string out = "space,coefficient,subgroup,degree,free_rank,torsion\n";
  for (auto& r : rows) {
    std::string t;
    for (auto& d : r.value.torsion()) t += (t.empty() ? "" : ";") + d.str();
    out += quote(r.space) + "," + quote(r.coefficient) + "," + quote(r.subgroup) + "," + std::to_string(r.degree) + "," +
           std::to_string(r.value.free_rank()) + "," + t + "\n";
  }
  return out;
}

}  // namespace eloday
