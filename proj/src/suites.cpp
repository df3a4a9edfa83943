#include "eloday/suites.hpp"

#include <functional>
#include <stdexcept>

#include "eloday/homology.hpp"

namespace eloday {

namespace {

struct Stop {};

class Ctx {
 public:
  explicit Ctx(SuiteResult& r) : r_(r) {}

  void check(bool ok, const std::string& what, const std::function<Json()>& detail = {}) {
    ++r_.checks;
    if (ok) return;
    r_.ok = false;
    r_.witness = Json{{"check", what}};
    if (detail) r_.witness["detail"] = detail();
    throw Stop{};
  }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

 private:
  SuiteResult& r_;
};

Json elem_json(const TensorSpace& V, const TensorElem& x) { return format_elem(V, x); }

Json diff_json(const Wiring& a, const Wiring& b) {
  auto d = compare(a, b);
  TensorSpace dom(a.dom), cod(a.cod);
  Json j{{"lhs_map", describe(a)}, {"rhs_map", describe(b)}};
  if (d.witness >= 0) {
    j["monomial"] = dom.format_mono(d.witness);
    j["lhs"] = elem_json(cod, d.lhs);
    j["rhs"] = elem_json(cod, d.rhs);
  }
  return j;
}

void check_equal(Ctx& c, const Wiring& a, const Wiring& b, const std::string& what) {
  c.check(wiring_equal(a, b), what, [&] { return diff_json(a, b); });
}

void check_report(Ctx& c, const Report& r, const std::string& what) {
  c.check(r.ok, what, [&] { return Json(r.message); });
}

std::vector<std::string> groups_or(const SuiteParams& p, std::vector<std::string> dflt) {
  if (p.group) return {*p.group};
  return dflt;
}

TransformPtr involution_of(const RingPtr& R, const std::string& label) {
  return make_transform(R, R, *R->involution(), R->is_commutative() ? MapKind::Hom : MapKind::AntiHom, label);
}

// t -> -t on Z[t]/(t^2 - 1)
TransformPtr sign_flip(const RingPtr& Zs) {
  IntMatrix m = IntMatrix::Identity(2, 2);
  m(1, 1) = BigInt(-1);
  return transform_from_presentation(Zs, Zs, m, MapKind::Hom, "t->-t");
}

// All H-actions on R sending each generator of H to the identity or to `bar`.
std::vector<GRingPtr> actions_through(const Subgroup& H, const RingPtr& R, const TransformPtr& bar) {
  auto sub = subgroup_as_group(H);
  std::vector<Elem> gens;
  for (Elem x : sub->generators()) gens.push_back(H.members()[x]);
  std::vector<GRingPtr> out;
  for (unsigned mask = 0; mask < (1u << gens.size()); ++mask) {
    std::vector<TransformPtr> ims;
    std::string name = R->name();
    for (size_t i = 0; i < gens.size(); ++i) {
      const bool on = (mask >> i) & 1u;
      ims.push_back(on ? bar : nullptr);
      if (on) name += " " + H.parent()->name(gens[i]) + ":" + bar->label;
    }
    try {
      out.push_back(hring_from_generators(H, R, gens, ims, name));
    } catch (const RingError&) {
    }
  }
  return out;
}

Coeffs basis_coeffs(const TensorSpace& V, const TensorElem& x) {
  Coeffs c(V.slot(0)->rank(), 0);
  for (auto& [m, v] : x) c[m] = v;
  V.slot(0)->reduce(c);
  return c;
}

// Generator-level evaluation of prod_g (g . t_g) (flip) or prod_g t_g (diagonal).
void check_counit_formula(Ctx& c, const GRingHom& eps, const GRingPtr& T, NormMode mode) {
  const auto& R = T->slots[0];
  const auto& A = T->acting;
  TensorSpace dom(eps.dom->slots), cod(eps.cod->slots);
  std::vector<int> d;
  for (long long m = 0; m < dom.dim(); ++m) {
    dom.digits(m, d);
    Coeffs want = R->one();
    for (int i = 0; i < A.order(); ++i) {
      Coeffs t = R->basis(d[i]);
      if (mode == NormMode::Flip) {
        const auto& w = T->act[A.members()[i]];
        if (!w.out.empty() && !w.out[0].empty() && w.out[0][0].t) t = eloday::apply(*w.out[0][0].t, t);
      }
      want = R->mul(want, t);
    }
    Coeffs got = basis_coeffs(cod, apply_mono(eps.w, dom, cod, m));
    c.check(R->equal(want, got), std::string(mode_name(mode)) + " counit formula on " + T->name, [&] {
      return Json{{"monomial", dom.format_mono(m)}, {"expected", R->format(want)}, {"got", R->format(got)}};
    });
  }
}

struct CounitCase {
  GRingPtr T, Nf, Nd;
  GRingHom ef, ed;
};

CounitCase counit_case(const GRingPtr& T) {
  CounitCase k;
  k.T = T;
  k.Nf = norm_restrict_free(T, NormMode::Flip);
  k.Nd = norm_restrict_free(T, NormMode::Diagonal);
  k.ef = counit_free_on(k.Nf, T, NormMode::Flip);
  k.ed = counit_free_on(k.Nd, T, NormMode::Diagonal);
  return k;
}

void suite_counit(Ctx& c, const SuiteParams& p) {
  for (auto& gname : groups_or(p, {"c2", "c3", "s3", "d4"})) {
    auto G = group_by_name(gname);
    for (auto& T : small_coefficient_rings(G)) {
      auto k = counit_case(T);
      check_counit_formula(c, k.ef, T, NormMode::Flip);
      check_counit_formula(c, k.ed, T, NormMode::Diagonal);
      check_report(c, check_hom(k.ef), "eps^f is an equivariant ring map for " + T->name + " over " + gname);
      check_report(c, check_hom(k.ed), "eps^d is an equivariant ring map for " + T->name + " over " + gname);
    }
  }
}

void suite_psi(Ctx& c, const SuiteParams& p) {
  for (auto& gname : groups_or(p, {"c2", "c3", "s3", "d4"})) {
    auto G = group_by_name(gname);
    for (auto& T : small_coefficient_rings(G)) {
      auto k = counit_case(T);
      GRingHom psi = psi_iso(T), back = psi_inverse(T);
      psi.dom = back.cod = k.Nf;
      psi.cod = back.dom = k.Nd;
      const std::string on = " for " + T->name + " over " + gname;
      check_report(c, check_hom(psi), "Psi is an equivariant ring map" + on);
      check_equal(c, compose(back, psi).w, identity_wiring(k.Nf->slots), "Psi^-1 Psi = 1" + on);
      check_equal(c, compose(psi, back).w, identity_wiring(k.Nd->slots), "Psi Psi^-1 = 1" + on);
      check_equal(c, compose(k.ed, psi).w, k.ef.w, "eps^d Psi = eps^f" + on);
    }
  }
}

void suite_xi(Ctx& c, const SuiteParams&) {
  auto zi = ring_gaussian();
  auto bar = involution_of(zi, "conj");
  auto S3 = make_symmetric(3);
  std::vector<Subgroup> Hs{generated_subgroup(S3, {S3->parse("(1,2)")})};
  for (int m : {2, 3}) {
    auto D = make_dihedral(m);
    Hs.push_back(generated_subgroup(D, {dihedral_rs(m, 0)}));
  }
  for (auto& H : Hs) {
    auto R = hring_from_generators(H, zi, {H.members()[1]}, {bar}, "Z[i]");
    auto res = xi_iso(R, NormMode::Flip);
    const std::string on = " on " + H.parent()->label() + " over " + H.label();
    c.check(res.equivariant, "xi is equivariant with flip inner norms" + on, [&] {
      Json j{{"gamma", H.parent()->name(res.witness->gamma)}};
      j["lhs"] = format_pattern(*H.parent(), res.witness->lhs, H.order());
      j["rhs"] = format_pattern(*H.parent(), res.witness->rhs, H.order());
      return j;
    });
    check_report(c, check_hom(res.xi), "xi is a ring map" + on);
  }
}

void suite_xi_diagonal(Ctx& c, const SuiteParams&) {
  auto zi = ring_gaussian();
  auto S = make_symmetric(3);
  const Elem id = S->parse("id"), t12 = S->parse("(1,2)"), t13 = S->parse("(1,3)"), t23 = S->parse("(2,3)");
  const Elem c123 = S->parse("(1,2,3)"), c132 = S->parse("(1,3,2)");
  auto H = generated_subgroup(S, {t12});
  auto R = hring_from_generators(H, zi, {t12}, {involution_of(zi, "conj")}, "Z[i]");
  Transversal T(H, {id, t13, t23});
  auto res = xi_iso(R, NormMode::Diagonal, T);
  c.check(!res.equivariant, "xi fails to be equivariant with diagonal inner norms");
  auto src = res.xi.dom, tgt = res.xi.cod;
  Wiring lhs = compose(tgt->act[t23], res.xi.w);
  Wiring rhs = compose(res.xi.w, src->act[t23]);
  auto pattern = [&](const Wiring& w) {
    std::vector<SlotSource> p;
    for (auto& fs : w.out) p.push_back(SlotSource{fs.size() == 1 ? fs[0].src : -1, fs.size() == 1 && !is_identity(fs[0].t)});
    return p;
  };
  std::vector<SlotSource> want_l{{t23, false}, {c132, false}, {c123, true}, {t13, true}, {id, false}, {t12, false}};
  std::vector<SlotSource> want_r{{t23, false}, {c132, false}, {c123, false}, {t13, false}, {id, false}, {t12, false}};
  auto gl = pattern(lhs), gr = pattern(rhs);
  auto same = [](const std::vector<SlotSource>& a, const std::vector<SlotSource>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].source != b[i].source || a[i].barred != b[i].barred) return false;
    return true;
  };
  const std::string L = format_pattern(*S, gl, 2), Rt = format_pattern(*S, gr, 2);
  c.note("gamma = (2,3): gamma o xi = " + L);
  c.note("gamma = (2,3): xi o gamma = " + Rt);
  auto detail = [&] {
    return Json{{"lhs", L}, {"rhs", Rt}, {"expected_lhs", format_pattern(*S, want_l, 2)},
                {"expected_rhs", format_pattern(*S, want_r, 2)}};
  };
  c.check(same(gl, want_l), "gamma o xi has the barred pattern of the displayed computation", detail);
  c.check(same(gr, want_r), "xi o gamma has the unbarred pattern of the displayed computation", detail);
  auto d = compare(lhs, rhs);
  c.check(!d.equal && d.witness >= 0, "the two sides differ on an explicit element");
  TensorSpace V(src->slots), W(tgt->slots);
  c.note("witness element " + V.format_mono(d.witness) + ": " + format_elem(W, d.lhs) + " vs " + format_elem(W, d.rhs));
  auto flip = xi_iso(R, NormMode::Flip, T);
  c.check(flip.equivariant, "the same transversal is fine with flip inner norms");
}

std::vector<GroupPtr> groups_up_to_12() {
  std::vector<GroupPtr> out;
  for (int n = 1; n <= 12; ++n) out.push_back(make_cyclic(n));
  for (int m = 2; m <= 6; ++m) out.push_back(make_dihedral(m));
  out.push_back(make_symmetric(3));
  out.push_back(group_by_name("a4"));
  return out;
}

// N(f) applied slot by slot.
GRingHom induced_slotwise(const GRingPtr& from, const GRingPtr& to, const TransformPtr& f) {
  Wiring w{from->slots, to->slots, {}};
  for (int k = 0; k < from->size(); ++k) w.out.push_back({Factor{k, f}});
  return GRingHom{from, to, w, "N(f)"};
}

void suite_weyl(Ctx& c, const SuiteParams& p) {
  auto Z = Ring::integers_mod(0);
  auto zi = ring_gaussian();
  auto bar = involution_of(zi, "conj");
  SmallMatrix inc(2, 1);
  inc << 1, 0;
  auto f = make_transform(Z, zi, inc, MapKind::Hom, "inc");
  std::vector<GroupPtr> groups;
  if (p.group)
    groups.push_back(group_by_name(*p.group));
  else
    groups = groups_up_to_12();
  long skipped = 0;
  for (auto& G : groups) {
    for (auto& H : all_subgroups(G)) {
      auto NS = tensor_induce(trivial_hring(H, Z));
      auto info = subgroup_tools(H);
      for (auto& R : actions_through(H, zi, bar)) {
        auto NR = tensor_induce(R);
        auto Nf = induced_slotwise(NS, NR, f);
        check_report(c, check_hom(Nf), "N(inc) is equivariant");
        for (Elem gamma : info.normalizer.members()) {
          GRingHom W;
          try {
            W = weyl_action(NR, gamma);
          } catch (const RingError&) {
            ++skipped;  // the precondition R(gamma h gamma^-1) = R(h) fails
            continue;
          }
          auto WS = weyl_action(NS, gamma);
          const std::string on = " for gamma = " + G->name(gamma) + ", H = " + H.label() + " in " + G->label() + ", " + R->name;
          for (Elem g = 0; g < G->order(); ++g)
            check_equal(c, compose(NR->act[g], W.w), compose(W.w, NR->act[g]),
                        "[gamma] commutes with " + G->name(g) + on);
          check_report(c, check_hom(W), "[gamma] is a ring map" + on);
          check_equal(c, compose(Nf, WS).w, compose(W, Nf).w, "[gamma] is natural in Z -> Z[i]" + on);
        }
      }
    }
  }
  c.note("classes without the Weyl precondition skipped: " + std::to_string(skipped));
}

void suite_switching(Ctx& c, const SuiteParams& p) {
  auto zi = ring_gaussian();
  auto bar = involution_of(zi, "conj");
  for (auto& gname : groups_or(p, {"s3", "d6"})) {
    auto G = group_by_name(gname);
    for (auto& H : all_subgroups(G)) {
      for (auto& R : actions_through(H, zi, bar)) {
        auto N = tensor_induce(R);
        const std::string on = " for H = " + H.label() + " in " + G->label() + ", " + R->name;
        for (Elem a = 0; a < G->order(); ++a) {
          auto sw = conj_switch(N, a);
          const std::string at = " at " + G->name(a) + on;
          check_report(c, check_hom(sw), "c_gamma is an equivariant ring map" + at);
          check_report(c, check_gring(*sw.cod), "the switched ring is a G-ring" + at);
          c.check(sw.cod->induced && sw.cod->induced->K == conjugate_subgroup(H, a), "c_gamma lands over gamma H gamma^-1" + at);
          auto back = conj_switch(sw.cod, G->inv(a));
          check_equal(c, compose(back, sw).w, identity_wiring(N->slots), "c_gamma^-1 c_gamma = 1" + at);
          for (Elem b = 0; b < G->order(); ++b) {
            auto inner = conj_switch(N, b);
            auto outer = conj_switch(inner.cod, a);
            auto direct = conj_switch(N, G->mul(a, b));
            check_equal(c, compose(outer, inner).w, direct.w,
                        "c_a c_b = c_ab for a = " + G->name(a) + ", b = " + G->name(b) + on);
          }
        }
      }
    }
  }
}

void check_simplicial(Ctx& c, const SimplicialGRing& S) {
  auto v = validate(S);
  c.check(v.ok, "simplicial identities and equivariance of " + S.name, [&] { return Json(v.message); });
}

void check_space(Ctx& c, const FinSimpGSet& X) {
  auto v = validate(X);
  c.check(v.ok, "simplicial G-set " + X.name, [&] { return Json(v.message); });
}

void suite_conjugate_isotropy(Ctx& c, const SuiteParams&) {
  auto Zs = ring_sign(0);
  auto sign = sign_flip(Zs);
  auto zi = ring_gaussian();
  auto X = build_permutohedron_skeleton(3, 3);
  check_space(c, X);
  auto H = X.mode.H;
  auto R = hring_from_generators(H, Zs, {H.members()[1]}, {sign}, "Z[t]");
  auto L = loday_one_isotropy(X, R);
  check_simplicial(c, L);
  const auto& G = X.G;
  for (size_t o = 0; o < X.levels[0].orbits.size(); ++o) {
    const auto& orb = X.levels[0].orbits[o];
    if (orb.isotropy.is_trivial()) continue;
    auto target = conj_switch(tensor_induce(R), orb.conj).cod;
    const auto& ring = L.orbit_rings[0][o];
    for (Elem g = 0; g < G->order(); ++g)
      check_equal(c, ring->act[g], target->act[g],
                  "orbit " + orb.label + " (isotropy " + orb.isotropy.label() + ") carries the switched ring");
  }
  auto sig = build_sigma_circle(4);
  check_simplicial(c, loday_one_isotropy(sig, esigma_hring(whole_group(sig.G), zi)));
  auto C3 = make_cyclic(3);
  auto cay = build_cayley(C3, {1}, 3);
  check_space(c, cay);
  check_simplicial(c, loday_free(cay, trivial_hring(whole_group(C3), zi), NormMode::Flip));
}

void suite_normal(Ctx& c, const SuiteParams&) {
  auto D8 = make_dihedral(4);
  auto H = generated_subgroup(D8, {dihedral_r(4, 1)});
  auto K = generated_subgroup(D8, {dihedral_r(4, 2)});
  auto Zs = ring_sign(0);
  auto R = hring_from_generators(H, Zs, {dihedral_r(4, 1)}, {sign_flip(Zs)}, "Z[t]");
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
  check_space(c, X);
  auto L = loday_normal_sub(X, R);
  check_simplicial(c, L);
  // G/e -> G/K -> G/H equals G/e -> G/H for both lifts of the middle map
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
  for (Elem cc : K.members()) {
    auto two = compose(orbit_map(RK, RH, D8->identity()), orbit_map(Re, RK, cc));
    check_equal(c, two.w, orbit_map(Re, RH, cc).w, "projection composite through G/K at c = " + D8->name(cc));
  }
  check_report(c, check_hom(orbit_map(Re, RK, D8->identity())), "G/e -> G/K is equivariant");
}

void suite_twosubgroups(Ctx& c, const SuiteParams&) {
  auto zi = ring_gaussian();
  for (int m = 1; m <= 4; ++m) {
    auto X = build_polygon(m, 3);
    check_space(c, X);
    auto Hs = X.mode.Hp;
    for (auto& R : {trivial_hring(Hs, zi), esigma_hring(Hs, zi)}) check_simplicial(c, loday_two_isotropy(X, R));
  }
  auto X = build_sigma_circle(3);
  auto R = esigma_hring(whole_group(X.G), zi);
  auto one = loday_one_isotropy(X, R);
  auto Y = X;
  Y.mode.kind = IsotropyKind::Two;
  Y.mode.Hp = Y.mode.H;
  Y.mode.phi = identity_iso(Y.G);
  auto two = loday_two_isotropy(Y, R);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i)
      check_equal(c, one.faces[n][i].w, two.faces[n][i].w, "H = H' reduces to one isotropy group, face d" + std::to_string(i));
  // the K4 swap in A4 is not inner
  auto S4 = make_symmetric(4);
  auto A4 = group_by_name("a4");
  auto img = [&](Elem x) {
    auto perm = symmetric_perm(4, S4->parse(A4->name(x)));
    auto t = symmetric_perm(4, S4->parse("(1,2)"));
    std::vector<int> out(4);
    for (int i = 0; i < 4; ++i) out[t[i]] = t[perm[i]];
    return A4->parse(S4->name(symmetric_elem(4, out)));
  };
  std::vector<Elem> map(A4->order());
  for (Elem x = 0; x < A4->order(); ++x) map[x] = img(x);
  GroupIso psi(A4, A4, map);
  c.check(!is_inner(psi), "conjugation by (1,2) is an outer automorphism of A4");
}

Coefficient coefficient_over(const CoefficientSpec& spec, const Subgroup& Hs) {
  auto R = coefficient_ring(spec, Hs);
  return Coefficient{spec.ring->is_commutative() ? CoeffKind::HpRingPhi : CoeffKind::ESigma, R, std::nullopt, spec.id};
}

CoefficientSpec builtin(const std::string& id) {
  CoefficientSpec s;
  s.id = id;
  s.action = ActionKind::Involution;
  if (id == "z4") {
    RingPresentation p = Ring::integers_mod(4)->presentation();
    p.involution = IntMatrix::Identity(1, 1);
    s.ring = Ring::make(p);
  } else if (id == "zi") {
    s.ring = ring_gaussian();
  } else {
    s.ring = ring_lipschitz();
  }
  return s;
}

void compare_levels(Ctx& c, const SimplicialGRing& L, const SimplicialGRing& B, int max_k, const std::string& on) {
  for (auto& K : all_subgroups(L.G)) {
    const std::string at = " at level " + K.label() + on;
    std::vector<FgAbelianGroup> a, b;
    std::string err;
    try {
      a = homology_table(L, K, max_k);
      b = homology_table(B, K, max_k);
    } catch (const AlgebraError& e) {
      err = e.what();
    }
    c.check(err.empty(), "homology computable through degree " + std::to_string(max_k) + at, [&] { return Json(err); });
    for (int k = 0; k <= max_k; ++k)
      c.check(a[k] == b[k], "H_" + std::to_string(k) + " of the Loday and bar sides agree" + at,
              [&] { return Json{{"loday", a[k].str()}, {"bar", b[k].str()}}; });
    auto o = oracle_h0(L, K);
    c.check(o == a[0], "oracle H_0 agrees" + at, [&] { return Json{{"oracle", o.str()}, {"table", a[0].str()}}; });
    c.note("H_0..H_" + std::to_string(max_k) + at + ":" + [&] {
      std::string s;
      for (auto& h : a) s += " " + h.str();
      return s;
    }());
  }
}

void realhh_pipeline(Ctx& c, const SuiteParams& p, const std::vector<CoefficientSpec>& specs, int m_lo, int m_hi,
                     bool esigma) {
  for (auto& spec : specs) {
    for (int m = m_lo; m <= m_hi; ++m) {
      auto D = make_dihedral(m);
      auto Hs = generated_subgroup(D, {dihedral_rs(m, 0)});
      auto coeff = coefficient_over(spec, Hs);
      if (esigma) {
        auto chk = esigma_check(spec.ring, spec.ring->one());
        c.check(chk.ok, "E_sigma data for " + spec.id, [&] { return Json(chk.message); });
      }
      const std::string on = " (m = " + std::to_string(m) + ", " + spec.id + ")";
      const long before = commutative_path_hits().load();
      auto res = real_hochschild(m, coeff, std::max(4, p.max_degree + 1));
      check_simplicial(c, res.L);
      check_simplicial(c, res.B);
      auto v = validate_levelwise_map(res.L, res.B, res.iso);
      c.check(v.ok, "the levelwise isomorphism commutes with faces and degeneracies" + on, [&] { return Json(v.message); });
      if (esigma || !spec.ring->is_commutative())
        c.check(commutative_path_hits().load() == before, "no commutative code path was entered" + on);
      if (p.homology) compare_levels(c, res.L, res.B, p.max_degree, on);
    }
  }
}

void suite_realhh(Ctx& c, const SuiteParams& p) {
  std::vector<CoefficientSpec> specs = p.coeff ? std::vector<CoefficientSpec>{*p.coeff}
                                               : std::vector<CoefficientSpec>{builtin("z4"), builtin("zi")};
  realhh_pipeline(c, p, specs, p.m ? p.m : 1, p.m ? p.m : 3, false);
}

void suite_esigma(Ctx& c, const SuiteParams& p) {
  std::vector<CoefficientSpec> specs = p.coeff ? std::vector<CoefficientSpec>{*p.coeff}
                                               : std::vector<CoefficientSpec>{builtin("quat")};
  realhh_pipeline(c, p, specs, p.m ? p.m : 1, p.m ? p.m : 2, true);
}

using SuiteFn = void (*)(Ctx&, const SuiteParams&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"counit", suite_counit},
      {"psi", suite_psi},
      {"xi", suite_xi},
      {"xi-diagonal-counterexample", suite_xi_diagonal},
      {"weyl", suite_weyl},
      {"switching", suite_switching},
      {"conjugate-isotropy", suite_conjugate_isotropy},
      {"normal", suite_normal},
      {"twosubgroups", suite_twosubgroups},
      {"realhh", suite_realhh},
      {"esigma", suite_esigma},
  };
  return r;
}

}  // namespace

std::vector<GRingPtr> small_coefficient_rings(const GroupPtr& G) {
  auto all = whole_group(G);
  std::vector<GRingPtr> out{trivial_hring(all, Ring::integers_mod(0)), trivial_hring(all, Ring::integers_mod(2))};
  auto zi = ring_gaussian();
  auto zs = ring_sign(0);
  for (auto& R : actions_through(all, zi, involution_of(zi, "conj"))) out.push_back(R);
  for (auto& R : actions_through(all, zs, sign_flip(zs))) out.push_back(R);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (auto& [k, f] : registry()) n.push_back(k);
    return n;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteParams& p) {
  for (auto& [k, f] : registry()) {
    if (k != name) continue;
    SuiteResult r;
    r.suite = name;
    Ctx c(r);
    try {
      f(c, p);
    } catch (const Stop&) {
    } catch (const std::exception& e) {
      r.ok = false;
      r.witness = Json{{"check", "suite raised an error"}, {"detail", e.what()}};
    }
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Json suite_to_json(const SuiteResult& r) {
  return Json{{"suite", r.suite}, {"status", r.ok ? "pass" : "fail"}, {"checks", r.checks}, {"notes", r.notes},
              {"witness", r.witness}};
}

}  // namespace eloday
