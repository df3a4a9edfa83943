#include <doctest.h>

#include <map>
#include <random>

#include "eloday/homology.hpp"
#include "eloday/json_io.hpp"
#include "oracles.hpp"

using namespace eloday;

namespace {

RingPtr zi() {
  static auto R = ring_gaussian();
  return R;
}

RingPtr z4() {
  static auto R = Ring::integers_mod(4);
  return R;
}

RingPtr zmod(long long p) {
  static std::map<long long, RingPtr> cache;
  auto& R = cache[p];
  if (!R) R = Ring::integers_mod(p);
  return R;
}

FgAbelianGroup Z(int r = 1) { return FgAbelianGroup(r, {}); }
FgAbelianGroup T(std::vector<long long> t) {
  std::vector<BigInt> b;
  for (auto x : t) b.emplace_back(x);
  return FgAbelianGroup(0, b);
}

// Circle with one vertex and one loop edge, both fixed by all of G.
FinSimpGSet trivial_circle(const GroupPtr& G, int N) {
  GraphSpec s;
  s.G = G;
  s.vertices = {Orbit{whole_group(G), "x"}};
  s.edges = {GraphEdge{whole_group(G), "y", 0, G->identity(), 0, G->identity()}};
  s.mode.kind = IsotropyKind::One;
  s.mode.H = whole_group(G);
  s.name = "trivial circle";
  return build_graph(s, N);
}

void check_all_levels(const SimplicialGRing& S, int max_k) {
  for (auto& K : all_subgroups(S.G)) {
    CAPTURE(K.label());
    auto C = moore(S, K, max_k + 1);
    CHECK_NOTHROW(check_boundary_squares(C));
    auto a = homology_table(S, K, max_k);
    auto b = homology_table_unnormalized(S, K, max_k);
    for (int k = 0; k <= max_k; ++k) CHECK_MESSAGE(a[k] == b[k], "H_" << k << ": " << a[k].str() << " vs " << b[k].str());
    auto o = oracle_h0(S, K);
    CHECK_MESSAGE(o == a[0], o.str() << " vs " << a[0].str());
  }
}

}  // namespace

TEST_CASE("sparse elimination agrees with the dense Smith form") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 9), c = 1 + static_cast<int>(rng() % 9);
    SparseMatrix M;
    M.rows = r;
    M.cols.resize(c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (rng() % 3 == 0) M.cols[j].push_back({i, static_cast<long long>(rng() % 7) - 3});
    auto dense = elementary_divisors(M.dense());
    long rank = 0;
    std::vector<BigInt> div;
    for (auto& d : dense)
      if (!d.is_zero()) {
        ++rank;
        if (d != BigInt(1)) div.push_back(d);
      }
    auto e = eliminate(M);
    std::sort(e.divisors.begin(), e.divisors.end());
    CHECK(e.rank == rank);
    CHECK(e.divisors == div);
    // rank over F_p counts the divisors prime to p
    for (long long p : {2LL, 3LL, 5LL}) {
      long rp = 0;
      for (auto& d : dense)
        if (!d.is_zero() && !divides(BigInt(p), d)) ++rp;
      CHECK(eliminate(M, p).rank == rp);
    }
  }
}

TEST_CASE("constant simplicial rings") {
  auto C2 = make_cyclic(2);
  auto X = build_constant(whole_group(C2), 3);
  auto S = loday_one_isotropy(X, esigma_hring(whole_group(C2), zi()));
  auto free_level = homology_table(S, trivial_subgroup(C2), 2);
  CHECK(free_level[0] == Z(2));
  CHECK(free_level[1].is_zero());
  CHECK(free_level[2].is_zero());
  CHECK(homology_table(S, whole_group(C2), 2)[0] == Z(1));
  check_all_levels(S, 2);

  auto S4 = loday_one_isotropy(X, trivial_hring(whole_group(C2), z4()));
  CHECK(homology_table(S4, whole_group(C2), 1)[0] == T({4}));
  check_all_levels(S4, 2);
}

TEST_CASE("bar(Z, Z, Z) is contractible onto Z") {
  auto G = make_cyclic(1);
  auto R = trivial_hring(whole_group(G), Ring::integers_mod(0));
  auto id = identity_hom(R);
  auto S = bar(bar_data_from_homs(R, R, R, id, id), 4);
  auto h = homology_table(S, whole_group(G), 3);
  CHECK(h[0] == Z(1));
  for (int k = 1; k <= 3; ++k) CHECK(h[k].is_zero());
  check_all_levels(S, 3);
}

TEST_CASE("rotation circles reproduce Hochschild homology at the free level") {
  for (long long p : {2LL, 3LL}) {
    auto X = build_rot_circle(2, 4);
    auto S = loday_free(X, trivial_hring(whole_group(X.G), zmod(p)), NormMode::Flip);
    auto h = homology_table(S, trivial_subgroup(X.G), 3);
    auto o = oracle::hochschild(*zmod(p), 3);
    for (int k = 0; k <= 3; ++k) CHECK_MESSAGE(h[k] == o[k], "p=" << p << " H_" << k);
    CHECK(h[0] == T({p}));
    check_all_levels(S, 2);
  }
  for (int n : {2, 3}) {
    auto X = build_rot_circle(n, 3);
    auto G = X.G;
    // Z[i] with a generator acting by conjugation for n = 2, trivially for n = 3
    GRingPtr Tn = n == 2 ? esigma_hring(whole_group(G), zi()) : trivial_hring(whole_group(G), zi());
    for (auto mode : {NormMode::Flip, NormMode::Diagonal}) {
      auto S = loday_free(X, Tn, mode);
      auto h = homology_table(S, trivial_subgroup(G), 2);
      auto o = oracle::hochschild(*zi(), 2);
      for (int k = 0; k <= 2; ++k) CHECK_MESSAGE(h[k] == o[k], "n=" << n << " H_" << k << ": " << h[k].str());
      check_all_levels(S, 1);
    }
  }
}

TEST_CASE("degree bounds") {
  auto K = whole_group(make_cyclic(1));
  auto R = trivial_hring(K, Ring::integers_mod(0));
  auto S1 = loday(build_constant(K, 1), Coefficient{CoeffKind::GRing, R, std::nullopt, "z"});
  CHECK(homology_table(S1, K, 0)[0] == Z(1));
  CHECK_THROWS_AS(homology_table(S1, K, 1), AlgebraError);
  auto S0 = loday(build_constant(K, 0), Coefficient{CoeffKind::GRing, R, std::nullopt, "z"});
  CHECK_THROWS_AS(homology_table(S0, K, 0), AlgebraError);
  CHECK_THROWS_AS(MackeyH(S0, 0), AlgebraError);
}

TEST_CASE("C2 transfer identity and double cosets") {
  auto X = build_rot_circle(2, 2);
  auto G = X.G;
  auto S = loday_free(X, esigma_hring(whole_group(G), zi()), NormMode::Flip);
  MackeyH M(S, 0);
  const int e = M.index_of(trivial_subgroup(G)), c2 = M.index_of(whole_group(G));
  auto rt = hom_compose(M.res(c2, e), M.tr(e, c2));
  auto tau = M.conj(1, e);
  IntMatrix sum = IntMatrix::Identity(tau.matrix.rows(), tau.matrix.cols()) + tau.matrix;
  CHECK(hom_equal(rt, make_hom(tau.domain, tau.codomain, sum)));
  auto chk = check_double_coset(M);
  CHECK_MESSAGE(chk.ok, chk.message);
  CHECK(M.class_reps().size() == 2);

  auto P = build_polygon(3, 2);
  auto D = P.G;
  auto Hp = generated_subgroup(D, {dihedral_rs(3, 0)});
  auto L = loday_two_isotropy(P, esigma_hring(Hp, zi()));
  MackeyH ML(L, 0);
  auto c = check_double_coset(ML);
  CHECK_MESSAGE(c.ok, c.message);
}

TEST_CASE("trivial actions: restriction is an isomorphism") {
  auto G = make_cyclic(3);
  auto X = trivial_circle(G, 3);
  auto S = loday_one_isotropy(X, trivial_hring(whole_group(G), zi()));
  for (int k = 0; k <= 1; ++k) {
    MackeyH M(S, k);
    const int e = M.index_of(trivial_subgroup(G)), g = M.index_of(whole_group(G));
    CHECK(is_isomorphism(M.res(g, e)));
    CHECK(M.value(g) == M.value(e));
  }
  auto h = homology_table(S, whole_group(G), 2);
  auto o = oracle::hochschild(*zi(), 2);
  for (int k = 0; k <= 2; ++k) CHECK(h[k] == o[k]);
}

TEST_CASE("Real Hochschild: L and B at every level") {
  for (int m = 1; m <= 2; ++m) {
    auto D = make_dihedral(m);
    auto Hs = generated_subgroup(D, {dihedral_rs(m, 0)});
    for (auto R : {trivial_hring(Hs, z4()), esigma_hring(Hs, zi())}) {
      auto res = real_hochschild(m, Coefficient{CoeffKind::HpRingPhi, R, std::nullopt, "c"}, 3);
      for (auto& K : all_subgroups(D)) {
        auto a = homology_table(res.L, K, 2);
        auto b = homology_table(res.B, K, 2);
        for (int k = 0; k <= 2; ++k) CHECK(a[k] == b[k]);
        CHECK(oracle_h0(res.L, K) == a[0]);
      }
      if (m == 1) {
        MackeyH ML(res.L, 0), MB(res.B, 0);
        const int top = ML.index_of(whole_group(D)), e = ML.index_of(trivial_subgroup(D));
        CHECK(hom_equal(ML.res(top, e), MB.res(top, e)));
        auto chk = check_double_coset(ML);
        CHECK_MESSAGE(chk.ok, chk.message);
      }
    }
  }
}

TEST_CASE("non-monomial actions: dense fixed points") {
  auto C = make_cyclic(3);
  Json j = read_json_file(std::string(ELODAY_DATA_DIR) + "/f2cube_c3.json");
  std::vector<GRingPtr> rings{coefficient_ring(coefficient_from_json(j), whole_group(C))};
  j["ring"]["relations"] = Json::array();
  j["ring"]["name"] = "Z^3";
  rings.push_back(coefficient_ring(coefficient_from_json(j), whole_group(C)));
  for (auto& T : rings) {
    CAPTURE(T->slots[0]->name());
    const bool free = T->slots[0]->all_free();
    for (auto mode : {NormMode::Flip, NormMode::Diagonal}) {
      auto S = loday_free(free ? build_constant(trivial_subgroup(C), 2) : build_rot_circle(3, 2), T, mode);
      auto F = fixed_level(S, whole_group(C), 1);
      // flip permutes slots only
      CHECK(F.dense == (mode == NormMode::Diagonal));
      if (free) CHECK(homology_table(S, trivial_subgroup(C), 0)[0] == FgAbelianGroup(27, {}));
      for (int g = 0; g < F.size(); ++g) {
        auto x = F.vector(g);
        auto y = apply(S.levels[1]->action(1), F.V, F.V, x);
        CHECK(y == x);
        auto c = F.coordinates(x);
        REQUIRE(c.size() == 1);
        CHECK(c[0] == std::pair<int, long long>{g, 1});
      }
      CHECK(homology_table(S, whole_group(C), 0)[0] == oracle_h0(S, whole_group(C)));
      MackeyH M(S, 0);
      auto chk = check_double_coset(M);
      CHECK_MESSAGE(chk.ok, chk.message);
      if (mode == NormMode::Diagonal) {
        HomologyLimits small;
        small.dense_fixed_dim = 20;
        CHECK_THROWS_WITH_AS(fixed_level(S, whole_group(C), 1, small), doctest::Contains("dense limit"), AlgebraError);
      }
    }
  }
}
