// eloday: batch driver for groups, coefficient rings, simplicial G-sets, Loday
// constructions and the verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "eloday/homology.hpp"
#include "eloday/json_io.hpp"
#include "eloday/suites.hpp"

using namespace eloday;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  // group
  std::string group, group_file;
  // ring / coefficients
  std::string coeff;
  // space
  std::string kind;
  int n = 2, m = 1, truncation = -1;
  std::string gens;
  bool check = false;
  // loday
  std::string space_kind, mode = "flip", levels = "free";
  int max_degree = 1;
  bool emit_complex = false, matrices = false, dump = false;
  // verify
  std::string suite;
  int suite_m = 0, suite_degree = 3;
  bool no_homology = false;
};

std::string resolve_path(const std::string& p) {
  namespace fs = std::filesystem;
  if (fs::exists(p)) return p;
  fs::path name = fs::path(p).filename();
  if (name.extension().empty()) name += ".json";
  fs::path alt = fs::path(ELODAY_DATA_DIR) / name;
  if (fs::exists(alt)) return alt.string();
  throw UsageError("coefficient file not found: " + p);
}

CoefficientSpec load_coeff(const std::string& p) {
  if (p.empty()) throw UsageError("--coeff is required");
  return load_coefficient(resolve_path(p));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

FinSimpGSet build_space(const std::string& kind, const Options& o, int N) {
  if (kind == "sigma") return build_sigma_circle(N);
  if (kind == "rot") return build_rot_circle(o.n, N);
  if (kind == "polygon") return build_polygon(o.m, N);
  if (kind == "permutohedron") return build_permutohedron_skeleton(o.n, N);
  if (kind == "cayley") {
    if (o.group.empty()) throw UsageError("--group is required for cayley graphs");
    auto G = group_by_name(o.group);
    std::vector<Elem> gens;
    if (o.gens.empty()) {
      gens = G->generators();
    } else {
      std::stringstream ss(o.gens);
      std::string tok;
      while (std::getline(ss, tok, ';')) gens.push_back(G->parse(tok));
    }
    return build_cayley(G, gens, N);
  }
  throw UsageError("unknown space kind '" + kind + "'");
}

std::string space_label(const std::string& kind, const Options& o) {
  if (kind == "rot" || kind == "permutohedron") return kind + " n=" + std::to_string(o.n);
  if (kind == "polygon") return "polygon m=" + std::to_string(o.m);
  if (kind == "cayley") return "cayley " + o.group;
  return kind;
}

NormMode parse_mode(const std::string& s) {
  if (s == "flip") return NormMode::Flip;
  if (s == "diagonal") return NormMode::Diagonal;
  throw UsageError("unknown mode '" + s + "'");
}

// The ring goes over the subgroup the isotropy mode attaches coefficients to.
SimplicialGRing run_loday(const FinSimpGSet& X, const CoefficientSpec& spec, NormMode mode) {
  Subgroup over;
  switch (X.mode.kind) {
    case IsotropyKind::Free:
      over = whole_group(X.G);
      break;
    case IsotropyKind::One:
      over = X.mode.H;
      break;
    case IsotropyKind::Two:
      over = X.mode.Hp;
      break;
    case IsotropyKind::Normal:
      throw UsageError("normal-subgroup spaces are not built from the command line");
  }
  if (mode == NormMode::Diagonal && X.mode.kind != IsotropyKind::Free)
    throw UsageError("diagonal inner actions exist only for free spaces");
  auto R = coefficient_ring(spec, over);
  CoeffKind kind = X.mode.kind == IsotropyKind::Two
                       ? (spec.ring->is_commutative() ? CoeffKind::HpRingPhi : CoeffKind::ESigma)
                       : (over.is_whole() ? CoeffKind::GRing : CoeffKind::HRing);
  return loday(X, Coefficient{kind, R, std::nullopt, spec.id}, mode);
}

std::vector<Subgroup> selected_levels(const SimplicialGRing& S, const std::string& levels) {
  if (levels == "free") return {trivial_subgroup(S.G)};
  if (levels == "all-fixed") return subgroup_class_reps(S.G);
  throw UsageError("unknown --levels '" + levels + "'");
}

Json sparse_json(const SparseMatrix& M) {
  Json e = Json::array();
  for (int c = 0; c < M.ncols(); ++c)
    for (auto& [r, v] : M.cols[c]) e.push_back(Json::array({r, c, v}));
  return Json{{"rows", M.rows}, {"cols", M.ncols()}, {"entries", e}};
}

Json complex_json(const LevelComplex& C) {
  Json levels = Json::array();
  for (int n = 0; n <= C.top(); ++n) {
    Json j{{"degree", n}, {"orders", C.orders(n, true)}};
    if (n > 0) j["boundary"] = sparse_json(C.norm_boundary[n]);
    levels.push_back(j);
  }
  return Json{{"subgroup", C.K.label()}, {"normalized", levels}};
}

int cmd_group(const Options& o) {
  GroupPtr G;
  if (!o.group_file.empty())
    G = group_from_json(read_json_file(o.group_file));
  else if (!o.group.empty())
    G = group_by_name(o.group);
  else
    throw UsageError("group info needs --group or --file");
  auto info = group_info(G);
  if (o.format == "csv") {
    std::cout << "index,label,order,normal,weyl_order\n";
    for (auto& s : info["subgroups"])
      std::cout << s["index"].get<int>() << ",\"" << s["label"].get<std::string>() << "\"," << s["order"].get<int>() << ","
                << (s["normal"].get<bool>() ? "yes" : "no") << "," << s["weyl_order"].get<int>() << "\n";
  } else {
    emit(info);
  }
  return 0;
}

int cmd_ring(const Options& o) {
  auto spec = load_coeff(o.coeff);
  Json out{{"coefficient", spec.id}, {"ring", spec.ring->name()}, {"rank", spec.ring->rank()},
           {"orders", spec.ring->orders()}, {"commutative", spec.ring->is_commutative()}};
  auto fail = [&](const std::string& what, const std::string& msg) {
    out["status"] = "fail";
    out["violation"] = Json{{"check", what}, {"message", msg}};
    emit(out);
    return 1;
  };
  auto r = check_ring(*spec.ring);
  if (!r.ok) return fail("ring axioms", r.message);
  if (spec.action == ActionKind::Generators) {
    auto G = group_by_name(spec.group);
    auto R = coefficient_ring(spec, whole_group(G));
    auto g = check_gring(*R);
    if (!g.ok) return fail("group action", g.message);
  } else if (spec.action == ActionKind::Involution) {
    auto C2 = make_cyclic(2);
    auto g = check_gring(*coefficient_ring(spec, whole_group(C2)));
    if (!g.ok) return fail("involution action", g.message);
    auto e = esigma_check(spec.ring, spec.ring->one());
    if (!e.ok) return fail("E_sigma data", e.message);
  }
  out["status"] = "ok";
  if (o.format == "csv")
    std::cout << "coefficient,rank,commutative,status\n" << spec.id << "," << spec.ring->rank() << ","
              << (spec.ring->is_commutative() ? "yes" : "no") << ",ok\n";
  else
    emit(out);
  return 0;
}

int cmd_space(const Options& o) {
  const int N = o.truncation < 0 ? 5 : o.truncation;
  auto X = build_space(o.kind, o, N);
  Json out = space_to_json(X);
  int status = 0;
  std::vector<HomologyRow> rows;
  if (o.check) {
    auto v = validate(X);
    out["valid"] = v.ok;
    if (!v.ok) {
      out["violation"] = v.message;
      status = 1;
    } else {
      auto h = underlying_homology(X, std::min(1, N - 1));
      for (size_t k = 0; k < h.size(); ++k) rows.push_back({space_label(o.kind, o), "", "underlying", static_cast<int>(k), h[k]});
      out["underlying_homology"] = rows_to_json(rows);
      out["euler_characteristic"] = euler_characteristic(X);
    }
  }
  if (o.format == "csv")
    std::cout << rows_to_csv(rows);
  else
    emit(out);
  return status;
}

std::vector<HomologyRow> homology_rows(const SimplicialGRing& S, const std::vector<Subgroup>& Ks, int max_k,
                                       const std::string& space, const std::string& coeff, Json* complexes) {
  std::vector<HomologyRow> rows;
  for (auto& K : Ks) {
    auto h = homology_table(S, K, max_k);
    for (int k = 0; k <= max_k; ++k) rows.push_back({space, coeff, K.label(), k, h[k]});
    if (complexes) complexes->push_back(complex_json(moore(S, K, max_k + 1)));
  }
  return rows;
}

int cmd_loday(const Options& o) {
  const int N = o.truncation < 0 ? o.max_degree + 1 : o.truncation;
  if (o.max_degree < 0 || o.max_degree > N - 1) throw UsageError("--max-degree must lie in [0, truncation - 1]");
  auto spec = load_coeff(o.coeff);
  auto X = build_space(o.space_kind, o, N);
  auto S = run_loday(X, spec, parse_mode(o.mode));
  Json complexes = Json::array();
  auto rows = homology_rows(S, selected_levels(S, o.levels), o.max_degree, space_label(o.space_kind, o), spec.id,
                            o.emit_complex ? &complexes : nullptr);
  if (o.format == "csv") {
    std::cout << rows_to_csv(rows);
    return 0;
  }
  Json out{{"space", space_label(o.space_kind, o)}, {"coefficient", spec.id}, {"mode", o.mode}, {"truncation", N}};
  out["construction"] = simplicial_ring_to_json(S, o.matrices);
  if (o.emit_complex) out["complexes"] = complexes;
  out["homology"] = rows_to_json(rows);
  emit(out);
  return 0;
}

int cmd_verify(const Options& o) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite '" + o.suite + "'");
  SuiteParams p;
  if (!o.group.empty()) p.group = o.group;
  p.m = o.suite_m;
  if (!o.coeff.empty()) p.coeff = load_coeff(o.coeff);
  p.max_degree = o.suite_degree;
  p.homology = !o.no_homology;
  auto r = run_suite(o.suite, p);
  if (o.format == "csv")
    std::cout << "suite,status,checks\n" << r.suite << "," << (r.ok ? "pass" : "fail") << "," << r.checks << "\n";
  else
    emit(suite_to_json(r));
  return r.ok ? 0 : 1;
}

int cmd_bench(const Options& o) {
  using clock = std::chrono::steady_clock;
  auto secs = [](clock::time_point a) { return std::chrono::duration<double>(clock::now() - a).count(); };
  const int N = o.truncation < 0 ? o.max_degree + 1 : o.truncation;
  auto spec = load_coeff(o.coeff);
  Json stages = Json::array();
  auto t0 = clock::now();
  auto X = build_space(o.space_kind, o, N);
  stages.push_back(Json{{"stage", "space"}, {"seconds", secs(t0)}});
  t0 = clock::now();
  auto S = run_loday(X, spec, parse_mode(o.mode));
  stages.push_back(Json{{"stage", "loday"}, {"seconds", secs(t0)}});
  Json dims = Json::array();
  for (int n = 0; n <= S.N; ++n) {
    long long predicted = 1;
    for (auto& r : S.levels[n]->slots) predicted *= r->rank();
    dims.push_back(Json{{"degree", n},
                        {"slots", S.levels[n]->size()},
                        {"monomials", S.levels[n]->space().dim()},
                        {"predicted", predicted}});
  }
  Json per = Json::array();
  for (auto& K : selected_levels(S, o.levels)) {
    t0 = clock::now();
    auto C = moore(S, K, o.max_degree + 1);
    const double tm = secs(t0);
    Json sizes = Json::array();
    for (int n = 0; n <= C.top(); ++n) sizes.push_back(Json{{"degree", n}, {"fixed", C.levels[n].size()},
                                                          {"normalized", C.norm_gens[n].size()}});
    t0 = clock::now();
    auto h = homology_table(S, K, o.max_degree);
    Json hs = Json::array();
    for (auto& x : h) hs.push_back(x.str());
    per.push_back(Json{{"subgroup", K.label()}, {"moore_seconds", tm}, {"homology_seconds", secs(t0)},
                       {"chain_groups", sizes}, {"homology", hs}});
  }
  Json out{{"space", space_label(o.space_kind, o)}, {"coefficient", spec.id}, {"stages", stages},
           {"levels", dims}, {"fixed_levels", per}};
  if (o.format == "csv") {
    std::cout << "degree,slots,monomials,predicted\n";
    for (auto& d : dims)
      std::cout << d["degree"].get<int>() << "," << d["slots"].get<int>() << "," << d["monomials"].get<long long>() << ","
                << d["predicted"].get<long long>() << "\n";
  } else {
    emit(out);
  }
  return 0;
}

void space_flags(CLI::App* c, Options& o) {
  c->add_option("--n", o.n, "rotation circle size or permutohedron dimension");
  c->add_option("--m", o.m, "polygon parameter (2m-gon)");
  c->add_option("--group", o.group, "group for cayley graphs (c<n>, d<2m>, s<n>, a4)");
  c->add_option("--gens", o.gens, "';'-separated generator names for cayley graphs");
  c->add_option("--truncation", o.truncation, "top simplicial degree");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant Loday constructions over finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));

  auto* group = app.add_subcommand("group", "finite groups");
  auto* ginfo = group->add_subcommand("info", "subgroup lattice, conjugacy classes, Weyl groups");
  group->require_subcommand(1);
  ginfo->add_option("--group", o.group, "group name");
  ginfo->add_option("--file", o.group_file, "group JSON {order, mult, names}");

  auto* ring = app.add_subcommand("ring", "coefficient rings");
  auto* rcheck = ring->add_subcommand("check", "validate a coefficient file");
  ring->require_subcommand(1);
  rcheck->add_option("--coeff", o.coeff, "coefficient JSON")->required();

  auto* space = app.add_subcommand("space", "simplicial G-sets");
  auto* sbuild = space->add_subcommand("build", "build a finite simplicial G-set");
  space->require_subcommand(1);
  sbuild->add_option("--kind", o.kind, "sigma|rot|polygon|cayley|permutohedron")
      ->required()
      ->check(CLI::IsMember({"sigma", "rot", "polygon", "cayley", "permutohedron"}));
  space_flags(sbuild, o);
  sbuild->add_flag("--check", o.check, "validate and report underlying H_0, H_1");

  auto* lod = app.add_subcommand("loday", "Loday constructions");
  auto* lrun = lod->add_subcommand("run", "build a Loday construction and its homology");
  lod->require_subcommand(1);
  lrun->add_option("--space", o.space_kind, "sigma|rot|polygon|cayley|permutohedron")->required();
  space_flags(lrun, o);
  lrun->add_option("--coeff", o.coeff, "coefficient JSON")->required();
  lrun->add_option("--mode", o.mode, "flip|diagonal")->check(CLI::IsMember({"flip", "diagonal"}));
  lrun->add_option("--max-degree", o.max_degree, "top homology degree");
  lrun->add_option("--levels", o.levels, "free|all-fixed")->check(CLI::IsMember({"free", "all-fixed"}));
  lrun->add_flag("--emit-complex", o.emit_complex, "include the normalized Moore complex of each level");
  lrun->add_flag("--matrices", o.matrices, "include monomial matrices of the structure maps");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suites;
  for (auto& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;
  ver->add_option("--suite", o.suite, suites)->required();
  ver->add_option("--group", o.group, "restrict to one group");
  ver->add_option("--m", o.suite_m, "polygon parameter");
  ver->add_option("--coeff", o.coeff, "coefficient JSON");
  ver->add_option("--max-degree", o.suite_degree, "top homology degree compared");
  ver->add_flag("--no-homology", o.no_homology, "skip homology comparisons");

  auto* bench = app.add_subcommand("bench", "timings and dimensions per stage");
  bench->add_option("--space", o.space_kind, "sigma|rot|polygon|cayley|permutohedron")->required();
  space_flags(bench, o);
  bench->add_option("--coeff", o.coeff, "coefficient JSON")->required();
  bench->add_option("--mode", o.mode, "flip|diagonal");
  bench->add_option("--max-degree", o.max_degree, "top homology degree");
  bench->add_option("--levels", o.levels, "free|all-fixed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ginfo) return cmd_group(o);
    if (*rcheck) return cmd_ring(o);
    if (*sbuild) return cmd_space(o);
    if (*lrun) return cmd_loday(o);
    if (*ver) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
