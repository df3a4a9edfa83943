#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eloday/homology.hpp"
#include "eloday/json_io.hpp"
#include "eloday/suites.hpp"
#include "oracles.hpp"

using namespace eloday;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (ok) summary = why;
    ok = false;
    notes.push_back("failed: " + why);
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

Outcome from_suites(const std::vector<std::string>& names) {
  Outcome o;
  long checks = 0;
  for (auto& name : names) {
    auto r = run_suite(name);
    checks += r.checks;
    for (auto& n : r.notes) o.notes.push_back(name + ": " + n);
    if (!r.ok) o.fail(name + ": " + r.witness.dump());
  }
  if (o.ok) o.summary = std::to_string(checks) + " checks";
  return o;
}

CoefficientSpec involutive(const std::string& id, RingPtr R) {
  CoefficientSpec s;
  s.id = id;
  s.ring = std::move(R);
  s.action = ActionKind::Involution;
  return s;
}

CoefficientSpec z4_trivial() {
  RingPresentation p = Ring::integers_mod(4)->presentation();
  p.involution = IntMatrix::Identity(1, 1);
  return involutive("Z/4", Ring::make(p));
}

Coefficient over_s(const CoefficientSpec& spec, int m) {
  auto D = make_dihedral(m);
  auto Hs = generated_subgroup(D, {dihedral_rs(m, 0)});
  auto R = coefficient_ring(spec, Hs);
  return Coefficient{spec.ring->is_commutative() ? CoeffKind::HpRingPhi : CoeffKind::ESigma, R, std::nullopt, spec.id};
}

// Homology through max_k as far as the size guards allow; `stop` names the obstruction.
struct Partial {
  std::vector<FgAbelianGroup> h;
  std::string stop;
};

Partial partial_table(const SimplicialGRing& S, const Subgroup& K, int max_k) {
  Partial t;
  std::optional<LevelComplex> C;
  for (int top = max_k + 1; top >= 1 && !C; --top) {
    try {
      C = moore(S, K, top);
    } catch (const AlgebraError& e) {
      if (t.stop.empty()) t.stop = e.what();
    }
  }
  if (!C) return t;
  for (int k = 0; k <= max_k && k < C->top(); ++k) {
    try {
      t.h.push_back(complex_homology(*C, k));
    } catch (const AlgebraError& e) {
      t.stop = e.what();
      break;
    }
  }
  return t;
}

std::string join(const std::vector<FgAbelianGroup>& v) {
  std::string s;
  for (auto& h : v) s += (s.empty() ? "" : ", ") + h.str();
  return "[" + s + "]";
}

void realhh_case(Outcome& o, const CoefficientSpec& spec, int m, bool counted) {
  const std::string on = "m=" + std::to_string(m) + " " + spec.id;
  const long before = commutative_path_hits().load();
  auto res = real_hochschild(m, over_s(spec, m), 4);
  auto vl = validate(res.L), vb = validate(res.B);
  o.expect(vl.ok, on + ": Loday side " + vl.message);
  o.expect(vb.ok, on + ": bar side " + vb.message);
  auto v = validate_levelwise_map(res.L, res.B, res.iso);
  o.expect(v.ok, on + ": levelwise map " + v.message);
  int reached = 4;
  std::string stop;
  for (auto& K : all_subgroups(res.L.G)) {
    auto a = partial_table(res.L, K, 3);
    auto b = partial_table(res.B, K, 3);
    const size_t common = std::min(a.h.size(), b.h.size());
    for (size_t k = 0; k < common; ++k)
      o.expect(a.h[k] == b.h[k], on + " at " + K.label() + ": H_" + std::to_string(k) + " " + a.h[k].str() +
                                     " vs " + b.h[k].str());
    if (static_cast<int>(common) < reached) {
      reached = static_cast<int>(common);
      stop = K.label() + ": " + (a.stop.empty() ? b.stop : a.stop);
    }
    if (K.is_trivial()) o.notes.push_back(on + " free level " + join(a.h));
  }
  if (counted) o.expect(commutative_path_hits().load() == before, on + ": a commutative code path was entered");
  if (reached < 4)
    o.fail(on + ": homology computed through degree " + std::to_string(reached - 1) + " only (" + stop + ")");
  else
    o.notes.push_back(on + ": degrees 0-3 agree at every subgroup level");
}

Outcome criterion6() {
  Outcome o;
  for (auto& spec : {z4_trivial(), involutive("Z[i]", ring_gaussian())})
    for (int m = 1; m <= 3; ++m) realhh_case(o, spec, m, false);
  if (o.ok) o.summary = "Z/4 and Z[i], m = 1..3, degrees 0-3";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto spec = involutive("quaternions", ring_lipschitz());
  auto chk = esigma_check(spec.ring, spec.ring->one());
  o.expect(chk.ok && !chk.commutative, "E_sigma data: " + chk.message);
  for (int m = 1; m <= 2; ++m) realhh_case(o, spec, m, true);
  if (o.ok) o.summary = "Lipschitz quaternions, m = 1, 2, commutative paths untouched";
  return o;
}

// Monomial matrix of a Loday map, relabelled into subdivision coordinates.
bool matches_subdivision(const GRingHom& f, const SimplicialGRing& S, int ks, int kt, const oracle::MonomialMatrix& want,
                         int r) {
  TensorSpace V(S.levels[ks]->slots), W(S.levels[kt]->slots);
  auto position = [&](int k, int slot) {
    const auto& t = S.tags[k][slot];
    return static_cast<int>(t.rep) * (k + 1) + t.orbit;
  };
  auto relabel = [&](const TensorSpace& T, int k, long long mono) {
    std::vector<int> d, e(T.size());
    T.digits(mono, d);
    for (int s = 0; s < T.size(); ++s) e[position(k, s)] = d[s];
    long long idx = 0;
    for (int x : e) idx = idx * r + x;
    return idx;
  };
  for (long long m = 0; m < V.dim(); ++m) {
    std::vector<std::pair<long long, long long>> got;
    for (auto& [mono, c] : apply_mono(f.w, V, W, m)) got.push_back({relabel(W, kt, mono), c});
    std::sort(got.begin(), got.end());
    if (got != want.cols[relabel(V, ks, m)]) return false;
  }
  return true;
}

Outcome criterion8() {
  Outcome o;
  const int N = 3;
  for (int n : {2, 3}) {
    auto C = make_cyclic(n);
    GRingPtr T;
    if (n == 2) {
      auto zi = ring_gaussian();
      auto bar = make_transform(zi, zi, *zi->involution(), MapKind::Hom, "conj");
      T = hring_from_generators(whole_group(C), zi, {1}, {bar}, "Z[i]");
    } else {
      T = coefficient_ring(load_coefficient(std::string(ELODAY_DATA_DIR) + "/f2cube_c3.json"), whole_group(C));
    }
    const auto& R = *T->slots[0];
    const std::string on = "n=" + std::to_string(n) + " " + T->name;
    auto X = build_rot_circle(n, N);
    auto F = loday_free(X, T, NormMode::Flip);
    auto D = loday_free(X, T, NormMode::Diagonal);
    bool equal = true, differs = false;
    for (int k = 1; k <= N; ++k)
      for (int i = 0; i <= k; ++i) {
        if (!matches_subdivision(F.faces[k][i], F, k, k - 1, oracle::sd_face(R, n, k, k - i), R.rank())) {
          equal = false;
          o.fail(on + ": face d_" + std::to_string(i) + " on level " + std::to_string(k));
        }
        if (!wiring_equal(F.faces[k][i].w, D.faces[k][i].w)) differs = true;
      }
    for (int k = 0; k < N; ++k)
      for (int j = 0; j <= k; ++j)
        if (!matches_subdivision(F.degens[k][j], F, k, k + 1, oracle::sd_degeneracy(R, n, k, k - j), R.rank())) {
          equal = false;
          o.fail(on + ": degeneracy s_" + std::to_string(j) + " on level " + std::to_string(k));
        }
    o.expect(differs, on + ": diagonal mode agrees with flip on every face");
    auto h = homology_table(F, trivial_subgroup(C), 2);
    auto hh = oracle::hochschild(R, 2);
    o.expect(h == hh, on + ": homology " + join(h) + " vs Hochschild " + join(hh));
    o.notes.push_back(on + ": subdivision match " + (equal ? "exact" : "no") + ", HH through 2 " + join(hh));
  }
  if (o.ok) o.summary = "n = 2, 3 through level 3";
  return o;
}

AbHom plus_identity(const AbHom& f) {
  IntMatrix I = IntMatrix::Identity(f.matrix.rows(), f.matrix.cols());
  return make_hom(f.domain, f.codomain, IntMatrix(f.matrix + I));
}

void h0_checks(Outcome& o, const SimplicialGRing& S, const std::string& on, long& c2_checks) {
  for (auto& K : all_subgroups(S.G)) {
    auto got = homology_table(S, K, 0)[0];
    auto want = oracle_h0(S, K);
    o.expect(got == want, on + " at " + K.label() + ": H_0 " + got.str() + " vs oracle " + want.str());
  }
  MackeyH M(S, 0);
  const int e = M.index_of(trivial_subgroup(S.G));
  for (auto& C : all_subgroups(S.G)) {
    if (C.order() != 2) continue;
    const int c = M.index_of(C);
    const Elem tau = C.members()[0] == S.G->identity() ? C.members()[1] : C.members()[0];
    auto lhs = hom_compose(M.res(c, e), M.tr(e, c));
    auto rhs = plus_identity(M.conj(tau, e));
    o.expect(hom_equal(lhs, rhs), on + ": res o tr != 1 + " + S.G->name(tau) + " for " + C.label());
    ++c2_checks;
  }
}

Outcome criterion9() {
  Outcome o;
  long c2 = 0;
  int pipelines = 0;
  for (auto& spec : {z4_trivial(), involutive("Z[i]", ring_gaussian())})
    for (int m = 1; m <= 3; ++m) {
      auto res = real_hochschild(m, over_s(spec, m), 1);
      const std::string on = "m=" + std::to_string(m) + " " + spec.id;
      h0_checks(o, res.L, on + " Loday", c2);
      h0_checks(o, res.B, on + " bar", c2);
      pipelines += 2;
    }
  auto quat = involutive("quaternions", ring_lipschitz());
  for (int m = 1; m <= 2; ++m) {
    auto res = real_hochschild(m, over_s(quat, m), 1);
    const std::string on = "m=" + std::to_string(m) + " quaternions";
    h0_checks(o, res.L, on + " Loday", c2);
    h0_checks(o, res.B, on + " bar", c2);
    pipelines += 2;
  }
  for (int n : {2, 3}) {
    auto C = make_cyclic(n);
    GRingPtr T;
    if (n == 2) {
      auto zi = ring_gaussian();
      T = hring_from_generators(whole_group(C), zi, {1},
                                {make_transform(zi, zi, *zi->involution(), MapKind::Hom, "conj")}, "Z[i]");
    } else {
      T = coefficient_ring(load_coefficient(std::string(ELODAY_DATA_DIR) + "/f2cube_c3.json"), whole_group(C));
    }
    auto X = build_rot_circle(n, 1);
    for (auto mode : {NormMode::Flip, NormMode::Diagonal}) {
      h0_checks(o, loday_free(X, T, mode), "rot n=" + std::to_string(n) + " " + mode_name(mode), c2);
      ++pipelines;
    }
  }
  o.expect(c2 > 0, "no order-2 subgroup was exercised");
  if (o.ok) o.summary = std::to_string(pipelines) + " pipelines, " + std::to_string(c2) + " C2 identities";
  return o;
}

void space_checks(Outcome& o, const FinSimpGSet& X, std::optional<oracle::GraphBetti> expect) {
  auto v = validate(X);
  o.expect(v.ok, X.name + ": " + v.message);
  auto h = underlying_homology(X, 1);
  if (!expect) {
    o.expect(h[0] == FgAbelianGroup(1, {}) && h[1] == FgAbelianGroup(1, {}),
             X.name + ": underlying homology " + join(h) + " is not that of a circle");
    return;
  }
  std::vector<std::pair<int, int>> edges;
  for (int e : X.nondegenerate(1))
    edges.push_back({X.apply(X.faces[1][1], 1, 0, e), X.apply(X.faces[1][0], 1, 0, e)});
  auto g = oracle::graph_betti(X.levels[0].count, edges);
  o.expect(g.b0 == expect->b0 && g.b1 == expect->b1,
           X.name + ": graph has b0 = " + std::to_string(g.b0) + ", b1 = " + std::to_string(g.b1));
  o.expect(h[0] == FgAbelianGroup(g.b0, {}) && h[1] == FgAbelianGroup(g.b1, {}),
           X.name + ": underlying homology " + join(h) + " vs spanning tree Betti numbers");
}

Outcome criterion10() {
  Outcome o;
  const int N = 5;
  int spaces = 0;
  auto run = [&](const FinSimpGSet& X, std::optional<oracle::GraphBetti> g) {
    space_checks(o, X, g);
    ++spaces;
  };
  run(build_sigma_circle(N), std::nullopt);
  for (int n = 1; n <= 4; ++n) run(build_rot_circle(n, N), std::nullopt);
  for (int m = 1; m <= 4; ++m) run(build_polygon(m, N), std::nullopt);
  // Cayley graph for a generating set S: |G| vertices, |G||S| edges, connected
  auto cayley = [&](const GroupPtr& G, const std::vector<Elem>& gens) {
    const int V = G->order(), E = G->order() * static_cast<int>(gens.size());
    run(build_cayley(G, gens, N), oracle::GraphBetti{1, E - V + 1});
  };
  for (int n = 2; n <= 6; ++n) cayley(make_cyclic(n), {1});
  cayley(make_cyclic(4), {1, 2});
  cayley(make_cyclic(6), {2, 3});
  auto S3 = make_symmetric(3);
  cayley(S3, {S3->parse("(1,2)"), S3->parse("(2,3)")});
  cayley(S3, {S3->parse("(1,2)"), S3->parse("(1,2,3)")});
  // permutohedron skeleton: n! vertices, n!(n-1)/2 edges, connected
  run(build_permutohedron_skeleton(2, N), oracle::GraphBetti{1, 0});
  run(build_permutohedron_skeleton(3, N), oracle::GraphBetti{1, 1});
  if (o.ok) o.summary = std::to_string(spaces) + " spaces at truncation 5";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));
  struct Criterion {
    int id;
    double limit_s;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, 10, [] { return from_suites({"counit"}); }},
      {2, 10, [] { return from_suites({"psi"}); }},
      {3, 30, [] { return from_suites({"xi", "xi-diagonal-counterexample"}); }},
      {4, 60, [] { return from_suites({"weyl"}); }},
      {5, 60, [] { return from_suites({"switching"}); }},
      {6, 300, criterion6},
      {7, 300, criterion7},
      {8, 120, criterion8},
      {9, 60, criterion9},
      {10, 120, criterion10},
  };
  int failed = 0;
  for (auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_s) o.fail("runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    char head[96];
    std::snprintf(head, sizeof head, "criterion %2d: %s (%.1f s) ", c.id, o.ok ? "PASS" : "FAIL", secs);
    std::cout << head << o.summary << std::endl;
    for (auto& n : o.notes) std::cout << "    " << n << "\n";
    if (!o.ok) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failed ? 1 : 0;
}
