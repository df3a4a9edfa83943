#include <doctest.h>

#include "eloday/gring.hpp"

using namespace eloday;

namespace {

RingPtr zi() {
  static auto G = ring_gaussian();
  return G;
}

TransformPtr conj_z_i() {
  static auto G = zi();
  static auto c = make_transform(G, G, *G->involution(), MapKind::Hom, "conj");
  return c;
}

// Z[i] over <s> in D_2m, s acting by conjugation
GRingPtr gaussian_over_s(const GroupPtr& D, int m) {
  auto H = generated_subgroup(D, {dihedral_rs(m, 0)});
  return hring_from_generators(H, zi(), {dihedral_rs(m, 0)}, {conj_z_i()}, "Z[i]");
}

GRingPtr gaussian_over_whole(const GroupPtr& G, const std::vector<Elem>& gens, const std::vector<bool>& conj) {
  std::vector<TransformPtr> ims;
  for (bool c : conj) ims.push_back(c ? conj_z_i() : nullptr);
  return hring_from_generators(whole_group(G), zi(), gens, ims, "Z[i]");
}

}  // namespace

TEST_CASE("actions on one-slot rings") {
  auto D = make_dihedral(3);
  auto R = gaussian_over_s(D, 3);
  CHECK(check_gring(*R).ok);
  auto D4 = make_dihedral(2);
  // s -> conj, r -> id is a homomorphism D4 -> Aut Z[i]
  CHECK_NOTHROW(gaussian_over_whole(D4, {1, 2}, {false, true}));
  // r -> conj, s -> conj also works on D4 (r^2 -> id)
  CHECK_NOTHROW(gaussian_over_whole(D4, {1, 2}, {true, true}));
  // on D6, r has order 3 and cannot act by conj
  CHECK_THROWS_AS(gaussian_over_whole(D, {1, 3}, {true, false}), RingError);
  auto Q = ring_lipschitz();
  auto H = generated_subgroup(D4, {2});
  auto E = esigma_hring(H, Q);
  CHECK(check_gring(*E).ok);
  CHECK(wiring_kind(E->act[2]) == MapKind::AntiHom);
}

TEST_CASE("tensor induction is a G-ring") {
  for (int m : {2, 3}) {
    auto D = make_dihedral(m);
    auto N = tensor_induce(gaussian_over_s(D, m));
    CHECK(N->size() == m);
    CHECK(check_gring(*N).ok);
    auto T = gaussian_over_whole(D, {1, dihedral_rs(m, 0)}, {false, true});
    for (auto mode : {NormMode::Flip, NormMode::Diagonal}) {
      auto F = norm_restrict_free(T, mode);
      CHECK(F->size() == 2 * m);
      CHECK(check_gring(*F).ok);
    }
  }
  auto Q = ring_lipschitz();
  auto D = make_dihedral(3);
  auto E = tensor_induce(esigma_hring(generated_subgroup(D, {3}), Q));
  CHECK(check_gring(*E).ok);
  CHECK(wiring_kind(E->act[3]) == MapKind::AntiHom);
  CHECK(wiring_kind(E->act[1]) == MapKind::Hom);
}

TEST_CASE("counits and the flip/diagonal comparison") {
  for (int m : {2, 3}) {
    auto D = make_dihedral(m);
    auto T = gaussian_over_whole(D, {1, dihedral_rs(m, 0)}, {false, true});
    auto Nf = norm_restrict_free(T, NormMode::Flip);
    auto Nd = norm_restrict_free(T, NormMode::Diagonal);
    auto ef = counit_free_on(Nf, T, NormMode::Flip);
    auto ed = counit_free_on(Nd, T, NormMode::Diagonal);
    CHECK(check_hom(ef).ok);
    CHECK(check_hom(ed).ok);
    GRingHom psi = psi_iso(T);
    psi.dom = Nf;
    psi.cod = Nd;
    CHECK(check_hom(psi).ok);
    CHECK(hom_equal(compose(ed, psi), ef));
    auto back = psi_inverse(T);
    back.dom = Nd;
    back.cod = Nf;
    CHECK(hom_equal(compose(back, psi), identity_hom(Nf)));
    // multiplication alone is not equivariant on the flip model
    GRingHom bad{Nf, T, ed.w, "mult"};
    CHECK(!check_hom(bad).ok);
  }
  auto Q = ring_lipschitz();
  auto D = make_dihedral(2);
  auto T = make_hring(whole_group(D), Q, std::vector<TransformPtr>(4, nullptr));
  long before = commutative_path_hits().load();
  CHECK_THROWS_AS(counit_free(T, NormMode::Flip), RingError);
  CHECK(commutative_path_hits().load() == before + 1);
}

TEST_CASE("xi is equivariant for the flip inner norm") {
  for (int m : {2, 3}) {
    auto D = make_dihedral(m);
    auto R = gaussian_over_s(D, m);
    auto res = xi_iso(R, NormMode::Flip);
    CHECK(res.equivariant);
    CHECK(check_hom(res.xi).ok);
    auto d = xi_iso(R, NormMode::Diagonal);
    CHECK(!d.equivariant);
    REQUIRE(d.witness);
    CHECK(d.witness->lhs_value != d.witness->rhs_value);
  }
}

TEST_CASE("xi witness on Sigma_3 with the transversal {id, (1,3), (2,3)}") {
  auto S = make_symmetric(3);
  const Elem id = S->parse("id"), t12 = S->parse("(1,2)"), t13 = S->parse("(1,3)"), t23 = S->parse("(2,3)");
  const Elem c123 = S->parse("(1,2,3)"), c132 = S->parse("(1,3,2)");
  auto H = generated_subgroup(S, {t12});
  auto R = hring_from_generators(H, zi(), {t12}, {conj_z_i()}, "Z[i]");
  Transversal T(H, {id, t13, t23});
  auto res = xi_iso(R, NormMode::Diagonal, T);
  REQUIRE(!res.equivariant);
  // search the witness of gamma = (2,3) explicitly
  auto src = res.xi.dom, tgt = res.xi.cod;
  Wiring lhs = compose(tgt->act[t23], res.xi.w);
  Wiring rhs = compose(res.xi.w, src->act[t23]);
  std::vector<std::pair<Elem, bool>> want_l{{t23, false}, {c132, false}, {c123, true},
                                            {t13, true},  {id, false},   {t12, false}};
  std::vector<std::pair<Elem, bool>> want_r{{t23, false}, {c132, false}, {c123, false},
                                            {t13, false}, {id, false},   {t12, false}};
  for (int k = 0; k < 6; ++k) {
    REQUIRE(lhs.out[k].size() == 1);
    CHECK(lhs.out[k][0].src == want_l[k].first);
    CHECK(!is_identity(lhs.out[k][0].t) == want_l[k].second);
    CHECK(rhs.out[k][0].src == want_r[k].first);
    CHECK(!is_identity(rhs.out[k][0].t) == want_r[k].second);
  }
  CHECK(!wiring_equal(lhs, rhs));
  auto flip = xi_iso(R, NormMode::Flip, T);
  CHECK(flip.equivariant);
  std::vector<SlotSource> p;
  for (auto& w : want_l) p.push_back({w.first, w.second});
  CHECK(format_pattern(*S, p, 2) == "(r[(2,3)] x r[(1,3,2)]) x (~r[(1,2,3)] x ~r[(1,3)]) x (r[id] x r[(1,2)])");
}

TEST_CASE("Weyl action") {
  auto D = make_dihedral(4);  // D8
  auto r2 = dihedral_r(4, 2);
  auto H = generated_subgroup(D, {r2});
  auto R = hring_from_generators(H, zi(), {r2}, {conj_z_i()}, "Z[i]");
  auto N = tensor_induce(R);
  for (Elem g : H.members()) CHECK(is_identity_wiring(weyl_action(N, g).w));
  for (Elem g = 0; g < D->order(); ++g) CHECK(check_hom(weyl_action(N, g)).ok);
  // with H acting trivially the Weyl maps compose as a group action
  auto N0 = tensor_induce(trivial_hring(H, zi()));
  for (Elem g = 0; g < D->order(); ++g)
    for (Elem h = 0; h < D->order(); ++h)
      CHECK(hom_equal(compose(weyl_action(N0, h), weyl_action(N0, g)), weyl_action(N0, D->mul(h, g))));
  // <r^2, s> in D8 with s -> conj and r^2 s -> id: conjugation by r swaps them
  auto K = generated_subgroup(D, {r2, dihedral_rs(4, 0)});
  auto RK = hring_from_generators(K, zi(), {r2, dihedral_rs(4, 0)}, {conj_z_i(), conj_z_i()}, "Z[i]");
  auto NK = tensor_induce(RK);
  CHECK_THROWS_AS(weyl_action(NK, dihedral_r(4, 1)), RingError);
  CHECK_NOTHROW(weyl_action(NK, dihedral_r(4, 2)));
  auto sw = conj_switch(NK, dihedral_r(4, 1));
  CHECK(check_hom(sw).ok);
  CHECK(check_gring(*sw.cod).ok);
}

TEST_CASE("conjugation switch") {
  auto S = make_symmetric(3);
  auto t12 = S->parse("(1,2)");
  auto H = generated_subgroup(S, {t12});
  auto R = hring_from_generators(H, zi(), {t12}, {conj_z_i()}, "Z[i]");
  auto N = tensor_induce(R);
  for (Elem g = 0; g < S->order(); ++g) {
    auto sw = conj_switch(N, g);
    CHECK(check_hom(sw).ok);
    CHECK(sw.cod->induced->K == conjugate_subgroup(H, g));
  }
  // pullbacks compose: c*_{g^-1} c*_{g'^-1} = c*_{(g g')^-1}
  for (Elem g = 0; g < S->order(); ++g)
    for (Elem g2 = 0; g2 < S->order(); ++g2) {
      auto a = pullback(conjugation(S, S->inv(g)), pullback(conjugation(S, S->inv(g2)), R));
      auto b = pullback(conjugation(S, S->inv(S->mul(g, g2))), R);
      CHECK(a->acting == b->acting);
      for (Elem x : a->acting.members()) CHECK(wiring_equal(a->act[x], b->act[x]));
    }
}

TEST_CASE("projection maps and orbit maps") {
  for (int m : {2, 3, 4}) {
    auto D = make_dihedral(m);
    auto R = gaussian_over_s(D, m);
    auto phi = dihedral_phi(m);
    auto H = generated_subgroup(D, {dihedral_rs(m, 1)});
    long before = commutative_path_hits().load();
    auto p = projection_maps(H, phi, R);
    CHECK(commutative_path_hits().load() > before);
    CHECK(check_hom(p.to_Hp).ok);
    CHECK(check_hom(p.to_H).ok);
    CHECK(check_gring(*p.to_H.cod).ok);
  }
  auto D = make_dihedral(3);
  auto R = gaussian_over_s(D, 3);
  auto N = tensor_induce(R);
  auto F = tensor_induce(restrict_to(R, trivial_subgroup(D)));
  // G/<s> -> G/e does not exist
  CHECK_THROWS_AS(orbit_map(N, F, 0), RingError);
  auto f = orbit_map(F, N, dihedral_r(3, 1));
  CHECK(check_hom(f).ok);
  // composite of orbit maps is the orbit map of the product
  auto g = orbit_map(F, F, dihedral_rs(3, 2));
  CHECK(hom_equal(compose(f, g), orbit_map(F, N, D->mul(dihedral_rs(3, 2), dihedral_r(3, 1)))));
}

TEST_CASE("diagonal translations need central elements") {
  auto D = make_dihedral(3);
  auto T = gaussian_over_whole(D, {1, 3}, {false, true});
  auto Nd = norm_restrict_free(T, NormMode::Diagonal);
  // the action factors through an abelian quotient, so s still translates equivariantly
  CHECK(check_hom(orbit_map(Nd, Nd, 3)).ok);
  // Sigma_3 permuting the idempotents of Z^3
  auto S = make_symmetric(3);
  auto Z3 = ring_split(3, 0);
  std::vector<TransformPtr> perms;
  for (Elem a = 0; a < 6; ++a) {
    IntMatrix m = IntMatrix::Zero(3, 3);
    auto p = symmetric_perm(3, a);
    for (int i = 0; i < 3; ++i) m(p[i], i) = BigInt(1);
    perms.push_back(transform_from_presentation(Z3, Z3, m, MapKind::Hom));
  }
  auto TS = make_hring(whole_group(S), Z3, perms, "Z^3");
  auto NS = norm_restrict_free(TS, NormMode::Diagonal);
  CHECK_THROWS_AS(orbit_map(NS, NS, S->parse("(1,2)")), RingError);
  auto NSf = norm_restrict_free(TS, NormMode::Flip);
  CHECK(check_hom(orbit_map(NSf, NSf, S->parse("(1,2)"))).ok);
  auto C = make_cyclic(4);
  auto Tc = gaussian_over_whole(C, {1}, {true});
  auto Ncd = norm_restrict_free(Tc, NormMode::Diagonal);
  auto Ncf = norm_restrict_free(Tc, NormMode::Flip);
  for (Elem c = 0; c < 4; ++c) {
    auto fd = orbit_map(Ncd, Ncd, c);
    auto ff = orbit_map(Ncf, Ncf, c);
    CHECK(check_hom(fd).ok);
    CHECK(check_hom(ff).ok);
    // Psi intertwines plain translation with the twisted one
    auto psi = psi_iso(Tc);
    psi.dom = Ncf;
    psi.cod = Ncd;
    CHECK(hom_equal(compose(psi, ff), compose(fd, psi)));
  }
}

TEST_CASE("naturality of the Weyl action and multiplicativity of the switch") {
  auto D = make_dihedral(4);
  auto r2 = dihedral_r(4, 2);
  auto H = generated_subgroup(D, {r2});
  auto R = hring_from_generators(H, zi(), {r2}, {conj_z_i()}, "Z[i]");
  auto Z = Ring::integers_mod(0);
  auto S = trivial_hring(H, Z);
  SmallMatrix inc(2, 1);
  inc << 1, 0;
  GRingHom f{S, R, Wiring{{Z}, {zi()}, {{Factor{0, make_transform(Z, zi(), inc, MapKind::Hom, "inc")}}}}, "inc"};
  REQUIRE(check_hom(f).ok);
  auto NS = tensor_induce(S), NR = tensor_induce(R);
  auto Nf = induce_hom(f, NS, NR);
  CHECK(check_hom(Nf).ok);
  for (Elem g = 0; g < D->order(); ++g)
    CHECK(hom_equal(compose(Nf, weyl_action(NS, g)), compose(weyl_action(NR, g), Nf)));

  auto S3 = make_symmetric(3);
  auto t12 = S3->parse("(1,2)");
  auto K = generated_subgroup(S3, {t12});
  auto RK = hring_from_generators(K, zi(), {t12}, {conj_z_i()}, "Z[i]");
  auto NK = tensor_induce(RK);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      auto inner = conj_switch(NK, b);
      auto outer = conj_switch(inner.cod, a);
      auto direct = conj_switch(NK, S3->mul(a, b));
      CHECK(outer.cod->induced->K == direct.cod->induced->K);
      CHECK(wiring_equal(compose(outer, inner).w, direct.w));
    }
  for (Elem a = 0; a < 6; ++a) {
    auto there = conj_switch(NK, a);
    auto back = conj_switch(there.cod, S3->inv(a));
    CHECK(wiring_equal(compose(back, there).w, identity_wiring(NK->slots)));
  }
}
