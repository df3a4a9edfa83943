#include <doctest.h>

#include "eloday/loday.hpp"

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

RingPtr quat() {
  static auto R = ring_lipschitz();
  return R;
}

Subgroup s_sub(const GroupPtr& D, int m) { return generated_subgroup(D, {dihedral_rs(m, 0)}); }

IntMatrix flip_t() {
  IntMatrix m = IntMatrix::Identity(2, 2);
  m(1, 1) = BigInt(-1);
  return m;
}

void require_valid(const SimplicialGRing& S) {
  auto v = validate(S);
  CHECK_MESSAGE(v.ok, S.name << ": " << v.message);
}

// Blockwise copy of `w` into a wiring between boxes of equal orbit layout.
GRingHom blockwise(const SimplicialGRing& S, const SimplicialGRing& T, int n, const std::vector<Wiring>& per_orbit) {
  Wiring w;
  w.dom = S.levels[n]->slots;
  w.cod = T.levels[n]->slots;
  w.out.resize(w.cod.size());
  int off = 0;
  for (auto& p : per_orbit) {
    for (size_t q = 0; q < p.out.size(); ++q)
      for (auto& f : p.out[q]) w.out[off + q].push_back(Factor{f.src + off, f.t});
    off += static_cast<int>(p.out.size());
  }
  return GRingHom{S.levels[n], T.levels[n], w, "blockwise"};
}

}  // namespace

TEST_CASE("sigma circle over a conjugation ring") {
  auto X = build_sigma_circle(4);
  auto R = esigma_hring(whole_group(X.G), zi());
  auto L = loday_one_isotropy(X, R);
  require_valid(L);
  CHECK(L.levels[0]->size() == 2);
  CHECK(L.levels[3]->size() == 2 + 3 * 2);
  CHECK(L.tags[1][1].orbit == 1);
  CHECK(L.tags[1][2].rep == 1);
}

TEST_CASE("Real Hochschild: Loday over polygons versus the bar construction") {
  for (int m = 1; m <= 3; ++m) {
    auto D = make_dihedral(m);
    std::vector<Coefficient> cs;
    cs.push_back({CoeffKind::HpRingPhi, trivial_hring(s_sub(D, m), z4()), std::nullopt, "z4"});
    cs.push_back({CoeffKind::HpRingPhi, esigma_hring(s_sub(D, m), zi()), std::nullopt, "zi"});
    for (auto& c : cs) {
      CAPTURE(m);
      CAPTURE(c.id);
      auto res = real_hochschild(m, c, 4);
      require_valid(res.L);
      require_valid(res.B);
      auto v = validate_levelwise_map(res.L, res.B, res.iso);
      CHECK_MESSAGE(v.ok, v.message);
      CHECK(res.B.levels[2]->size() == m + 2 * 2 * m + m);
    }
  }
}

TEST_CASE("E_sigma coefficients avoid commutative code paths") {
  for (int m = 1; m <= 2; ++m) {
    auto D = make_dihedral(m);
    Coefficient c{CoeffKind::ESigma, esigma_hring(s_sub(D, m), quat()), std::nullopt, "quat"};
    long before = commutative_path_hits().load();
    auto res = real_hochschild(m, c, 3);
    CHECK(commutative_path_hits().load() == before);
    CHECK_FALSE(res.L.multiplicative);
    require_valid(res.L);
    require_valid(res.B);
    auto v = validate_levelwise_map(res.L, res.B, res.iso);
    CHECK_MESSAGE(v.ok, v.message);
    CHECK(commutative_path_hits().load() == before);
  }
  auto D = make_dihedral(2);
  auto R = esigma_hring(s_sub(D, 2), quat());
  CHECK_THROWS_AS(loday_one_isotropy(build_sigma_circle(2), esigma_hring(whole_group(make_cyclic(2)), quat())),
                  RingError);
  Coefficient wrong{CoeffKind::GRing, R, std::nullopt, "q"};
  CHECK_THROWS_AS(real_hochschild(2, wrong, 2), RingError);
}

TEST_CASE("the 2-gon is the sigma circle") {
  auto D = make_dihedral(1);
  auto R = esigma_hring(whole_group(D), zi());
  auto res = real_hochschild(1, Coefficient{CoeffKind::HpRingPhi, R, std::nullopt, "zi"}, 3);
  auto X = build_sigma_circle(3);
  auto S = loday_one_isotropy(X, esigma_hring(whole_group(X.G), zi()));
  CHECK(X.G->table() == D->table());
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(wiring_equal(res.L.faces[n][i].w, S.faces[n][i].w));
  for (int n = 0; n < 3; ++n)
    for (int j = 0; j <= n; ++j) CHECK(wiring_equal(res.L.degens[n][j].w, S.degens[n][j].w));
}

TEST_CASE("free mode: flip and diagonal") {
  auto X = build_rot_circle(2, 4);
  auto C2 = X.G;
  auto T = hring_from_generators(whole_group(C2), zi(), {1},
                                 {make_transform(zi(), zi(), *zi()->involution(), MapKind::Hom, "conj")}, "Z[i]");
  auto F = loday_free(X, T, NormMode::Flip);
  auto Dg = loday_free(X, T, NormMode::Diagonal);
  require_valid(F);
  require_valid(Dg);
  bool differs = false;
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) differs = differs || !wiring_equal(F.faces[n][i].w, Dg.faces[n][i].w);
  CHECK(differs);
  // Psi orbitwise intertwines the two
  auto psi = psi_iso(T);
  std::vector<GRingHom> iso;
  for (int n = 0; n <= 4; ++n)
    iso.push_back(blockwise(F, Dg, n, std::vector<Wiring>(X.levels[n].orbits.size(), psi.w)));
  auto v = validate_levelwise_map(F, Dg, iso);
  CHECK_MESSAGE(v.ok, v.message);

  CHECK_THROWS_AS(loday_free(build_constant(whole_group(C2), 2), T, NormMode::Flip), RingError);
  CHECK_THROWS_AS(loday_free(build_sigma_circle(2), T, NormMode::Flip), RingError);

  // trivial action on an all-free space: one-isotropy over e matches the flip construction
  auto triv = trivial_hring(whole_group(C2), zi());
  auto A = loday_free(X, triv, NormMode::Flip);
  auto B = loday_one_isotropy(X, restrict_to(triv, trivial_subgroup(C2)));
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i <= n; ++i) CHECK(wiring_equal(A.faces[n][i].w, B.faces[n][i].w));
}

TEST_CASE("bar constructions") {
  auto G = make_cyclic(1);
  auto Z = trivial_hring(whole_group(G), Ring::integers_mod(0));
  auto id = identity_hom(Z);
  auto S = bar(bar_data_from_homs(Z, Z, Z, id, id), 3);
  require_valid(S);
  for (int n = 0; n <= 3; ++n) CHECK(S.levels[n]->size() == n + 2);
  auto R = trivial_hring(whole_group(G), zi());
  auto idR = identity_hom(R);
  auto B2 = bar(bar_data_from_homs(R, R, R, idR, idR), 3);
  for (int n = 0; n <= 3; ++n) CHECK(B2.levels[n]->space().dim() == 1LL << (n + 2));
  require_valid(B2);
}

TEST_CASE("two-isotropy degenerates to one-isotropy") {
  auto X = build_sigma_circle(3);
  auto R = esigma_hring(whole_group(X.G), zi());
  auto one = loday_one_isotropy(X, R);
  auto Y = X;
  Y.mode.kind = IsotropyKind::Two;
  Y.mode.Hp = Y.mode.H;
  Y.mode.phi = identity_iso(Y.G);
  auto two = loday_two_isotropy(Y, R);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(wiring_equal(one.faces[n][i].w, two.faces[n][i].w));
}

TEST_CASE("permutohedron: the conjugate vertex orbit carries the switched ring") {
  auto X = build_permutohedron_skeleton(3, 3);
  auto S3 = X.G;
  auto H = X.mode.H;
  auto Zs = ring_sign(0);
  auto sign = transform_from_presentation(Zs, Zs, flip_t(), MapKind::Hom, "t");
  auto R = hring_from_generators(H, Zs, {H.members()[1]}, {sign}, "Z[t]");
  auto L = loday_one_isotropy(X, R);
  require_valid(L);
  const auto& o = X.levels[0].orbits[0];
  CHECK(o.isotropy == generated_subgroup(S3, {symmetric_parse_cycles(3, "(2,3)")}));
  auto target = conj_switch(tensor_induce(R), o.conj).cod;
  const auto& ring = L.orbit_rings[0][0];
  for (Elem g = 0; g < S3->order(); ++g) CHECK(wiring_equal(ring->act[g], target->act[g]));
}

TEST_CASE("normal subgroup mode") {
  auto D8 = make_dihedral(4);
  auto H = generated_subgroup(D8, {dihedral_r(4, 1)});
  auto K = generated_subgroup(D8, {dihedral_r(4, 2)});
  auto Zs = ring_sign(0);
  auto sign = transform_from_presentation(Zs, Zs, flip_t(), MapKind::Hom, "t");
  auto R = hring_from_generators(H, Zs, {dihedral_r(4, 1)}, {sign}, "Z[t]");

  GraphSpec g;
  g.G = D8;
  Orbit vH, vK;
  vH.isotropy = H;
  vH.label = "h";
  vK.isotropy = K;
  vK.label = "k";
  g.vertices = {vK, vH};
  g.edges = {GraphEdge{K, "y", 0, D8->identity(), 1, D8->identity()},
             GraphEdge{trivial_subgroup(D8), "z", 0, D8->identity(), 0, dihedral_rs(4, 0)}};
  g.mode.kind = IsotropyKind::Normal;
  g.mode.H = H;
  g.mode.Ks = {K, trivial_subgroup(D8)};
  g.name = "normal graph";
  auto X = build_graph(g, 3);
  auto xv = validate(X);
  REQUIRE_MESSAGE(xv.ok, xv.message);
  auto L = loday_normal_sub(X, R);
  require_valid(L);

  // projections G/e -> G/K -> G/H compose to the direct one
  Orbit oe, oK, oH;
  oe.isotropy = trivial_subgroup(D8);
  oe.type = OrbitType::K;
  oe.k_index = 1;
  oK.isotropy = K;
  oK.type = OrbitType::K;
  oH.isotropy = H;
  oH.type = OrbitType::H;
  auto Re = orbit_ring(X, oe, R, NormMode::Flip);
  auto RK = orbit_ring(X, oK, R, NormMode::Flip);
  auto RH = orbit_ring(X, oH, R, NormMode::Flip);
  for (Elem c : {D8->identity(), dihedral_r(4, 2)}) {
    auto two = compose(orbit_map(RK, RH, D8->identity()), orbit_map(Re, RK, c));
    CHECK(hom_equal(two, orbit_map(Re, RH, c)));
  }
  CHECK(check_hom(orbit_map(Re, RK, D8->identity())).ok);

  // unit then project: the unit of Re maps to the unit of RH
  auto p = orbit_map(Re, RH, D8->identity());
  auto Vd = Re->space(), Vc = RH->space();
  auto img = apply(p.w, Vd, Vc, TensorElem{{0, 1}});
  CHECK(img == TensorElem{{0, 1}});

  auto bad = X;
  bad.mode.H = generated_subgroup(D8, {dihedral_rs(4, 0)});
  CHECK_THROWS(loday_normal_sub(bad, R));
}

TEST_CASE("E_sigma data checks") {
  auto r1 = esigma_check(zi(), zi()->one());
  CHECK(r1.ok);
  CHECK(r1.commutative);
  auto ut = ring_upper_triangular_f2();
  auto r2 = esigma_check(ut, ut->one());
  CHECK_MESSAGE(r2.ok, r2.message);
  CHECK_FALSE(r2.commutative);
  CHECK(r2.message.find("noncommutative") != std::string::npos);
  auto q = esigma_check(quat(), quat()->one());
  CHECK(q.ok);

  // the identity is not multiplication reversing on the quaternions
  auto r3 = esigma_check(quat(), quat()->one(), SmallMatrix::Identity(4, 4));
  CHECK_FALSE(r3.ok);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->first == 1);
  CHECK(r3.witness->second == 2);
  CHECK_FALSE(esigma_check(zi(), zi()->basis(1)).ok);
}
