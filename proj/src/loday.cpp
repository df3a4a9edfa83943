#include "eloday/loday.hpp"

#include <sstream>

namespace eloday {

namespace {

Subgroup rebase(const Subgroup& K, const GroupPtr& G) { return Subgroup(G, K.members()); }

void require_same_group(const FinSimpGSet& X, const GRingPtr& R) {
  if (X.G->table() != R->G->table()) throw RingError("space and coefficients live over different groups");
}

void require_commutative(const GRing& R, const char* what) {
  ++commutative_path_hits();
  if (!R.is_commutative()) throw RingError(std::string(what) + " needs commutative coefficients; " + R.name + " is not");
}

// Transversal {t_j u_l}: t_j least-index for H in G, u_l least-index for K in H.
Transversal nested_transversal(const Subgroup& K, const Subgroup& H) {
  const auto& G = *H.parent();
  auto tH = canonical_transversal(H);
  std::vector<Elem> us;
  std::vector<char> seen(G.order(), 0);
  for (Elem h : H.members()) {
    if (seen[h]) continue;
    us.push_back(h);
    for (Elem k : K.members()) seen[G.mul(h, k)] = 1;
  }
  std::vector<Elem> reps;
  for (Elem t : tH.reps())
    for (Elem u : us) reps.push_back(G.mul(t, u));
  return Transversal(K, reps);
}

GRingPtr conj_base(const GRingPtr& R, Elem gamma) {
  if (gamma == R->G->identity()) return R;
  return pullback(conjugation(R->G, R->G->inv(gamma)), R);
}

std::string level_name(const std::string& space, int n) { return space + "_" + std::to_string(n); }

struct Assembly {
  const FinSimpGSet* X;
  std::vector<std::vector<GRingPtr>> rings;  // per level, per orbit
  bool positional = false;
};

std::vector<int> ring_offsets(const std::vector<GRingPtr>& rs) {
  std::vector<int> off;
  int o = 0;
  for (auto& r : rs) {
    off.push_back(o);
    o += r->size();
  }
  return off;
}

bool mirrored(const Factor& f) { return f.t && f.t->kind == MapKind::AntiHom; }

GRingHom assemble_map(const Assembly& A, const EqMap& f, int ns, int nt, const GRingPtr& Ls, const GRingPtr& Lt,
                      const std::string& name) {
  const auto& X = *A.X;
  const auto& rs = A.rings[ns];
  const auto& rt = A.rings[nt];
  auto offs = ring_offsets(rs), offt = ring_offsets(rt);
  struct Contribution {
    int orbit;
    Factor f;
  };
  std::vector<std::vector<Contribution>> in(Lt->size());
  for (size_t a = 0; a < rs.size(); ++a) {
    const auto& im = f.image[a];
    auto om = orbit_map(rs[a], rt[im.orbit], im.c);
    for (size_t q = 0; q < om.w.out.size(); ++q)
      for (auto& fac : om.w.out[q])
        in[offt[im.orbit] + q].push_back({static_cast<int>(a), Factor{fac.src + offs[a], fac.t}});
  }
  Wiring w;
  w.dom = Ls->slots;
  w.cod = Lt->slots;
  w.out.resize(Lt->size());
  for (size_t b = 0; b < rt.size(); ++b) {
    // the target's own place measured in the source level: back vertices sit at n + 1
    int p0 = X.levels[nt].orbits[b].position;
    if (p0 == nt + 1) p0 = ns + 1;
    for (int q = 0; q < rt[b]->size(); ++q) {
      auto& src = in[offt[b] + q];
      auto& dst = w.out[offt[b] + q];
      if (!A.positional) {
        for (auto& c : src) dst.push_back(c.f);
        continue;
      }
      auto pos = [&](const Contribution& c) { return X.levels[ns].orbits[c.orbit].position; };
      for (auto it = src.rbegin(); it != src.rend(); ++it)
        if (mirrored(it->f) && pos(*it) > p0) dst.push_back(it->f);
      for (auto& c : src)
        if (!mirrored(c.f) || pos(c) == p0) dst.push_back(c.f);
      for (auto it = src.rbegin(); it != src.rend(); ++it)
        if (mirrored(it->f) && pos(*it) < p0) dst.push_back(it->f);
    }
  }
  return GRingHom{Ls, Lt, std::move(w), name};
}

SimplicialGRing assemble(const Assembly& A, const std::string& name, bool multiplicative) {
  const auto& X = *A.X;
  SimplicialGRing S;
  S.G = A.rings[0][0]->G;
  S.N = X.N;
  S.name = name;
  S.multiplicative = multiplicative;
  S.orbit_rings = A.rings;
  for (int n = 0; n <= X.N; ++n) {
    auto L = std::make_shared<GRing>(*box(A.rings[n], level_name(name, n)));
    const auto& lv = X.levels[n];
    std::vector<SlotTag> tags;
    L->labels.clear();
    for (size_t a = 0; a < A.rings[n].size(); ++a) {
      const auto& r = *A.rings[n][a];
      int blocks, bs;
      if (r.induced) {
        blocks = r.induced->T.size();
        bs = r.induced->base->size();
      } else {
        blocks = r.G->order();
        bs = r.diagonal_of->size();
      }
      for (int i = 0; i < blocks; ++i) {
        Elem rep = r.induced ? r.induced->T.rep(i) : static_cast<Elem>(i);
        for (int s = 0; s < bs; ++s) {
          tags.push_back(SlotTag{static_cast<int>(a), i, s, rep});
          std::string lab = S.G->name(rep) + "." + lv.orbits[a].label;
          if (bs > 1) lab += ":" + std::to_string(s);
          L->labels.push_back(lab);
        }
      }
    }
    S.tags.push_back(std::move(tags));
    S.levels.push_back(L);
  }
  S.faces.assign(X.N + 1, {});
  S.degens.assign(X.N + 1, {});
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      S.faces[n].push_back(assemble_map(A, X.faces[n][i], n, n - 1, S.levels[n], S.levels[n - 1],
                                        "d" + std::to_string(i) + "@" + std::to_string(n)));
  for (int n = 0; n < X.N; ++n)
    for (int j = 0; j <= n; ++j)
      S.degens[n].push_back(assemble_map(A, X.degens[n][j], n, n + 1, S.levels[n], S.levels[n + 1],
                                         "s" + std::to_string(j) + "@" + std::to_string(n)));
  return S;
}

Assembly rings_for(const FinSimpGSet& X, const GRingPtr& R, NormMode mode) {
  Assembly A;
  A.X = &X;
  for (int n = 0; n <= X.N; ++n) {
    std::vector<GRingPtr> rs;
    for (auto& o : X.levels[n].orbits) rs.push_back(orbit_ring(X, o, R, mode));
    A.rings.push_back(std::move(rs));
  }
  return A;
}

}  // namespace

const char* coeff_kind_name(CoeffKind k) {
  switch (k) {
    case CoeffKind::GRing: return "commutative_G_ring";
    case CoeffKind::HRing: return "H_ring";
    case CoeffKind::HpRingPhi: return "Hprime_ring_with_phi";
    case CoeffKind::ESigma: return "esigma";
  }
  return "?";
}

GRingPtr orbit_ring(const FinSimpGSet& X, const Orbit& o, const GRingPtr& R, NormMode mode) {
  const auto& G = R->G;
  const auto& md = X.mode;
  switch (md.kind) {
    case IsotropyKind::Free:
      if (!R->acting.is_whole()) {
        // an H-ring over an all-free space
        if (!o.isotropy.is_trivial()) throw RingError("free orbit expected");
        return tensor_induce(restrict_to(R, trivial_subgroup(G)));
      }
      return norm_restrict_free(R, mode);
    case IsotropyKind::One:
      if (o.type == OrbitType::Free) return tensor_induce(restrict_to(R, trivial_subgroup(G)));
      return tensor_induce(conj_base(R, o.conj));
    case IsotropyKind::Two: {
      if (o.type == OrbitType::Free) return tensor_induce(restrict_to(R, trivial_subgroup(G)));
      if (o.type == OrbitType::Hp) return tensor_induce(conj_base(R, o.conj));
      GroupIso phi(G, G, md.phi.map());
      return tensor_induce(conj_base(pullback(phi, R), o.conj));
    }
    case IsotropyKind::Normal: {
      Subgroup H = rebase(md.H, G);
      if (o.type == OrbitType::H) return tensor_induce(R);
      Subgroup K = rebase(o.isotropy, G);
      return tensor_induce(restrict_to(R, K), nested_transversal(K, H));
    }
  }
  throw RingError("unknown isotropy mode");
}

SimplicialGRing loday_free(const FinSimpGSet& X, const GRingPtr& T, NormMode mode) {
  if (X.mode.kind != IsotropyKind::Free) throw RingError("loday_free needs a free simplicial G-set");
  for (auto& L : X.levels)
    for (auto& o : L.orbits)
      if (!o.isotropy.is_trivial()) throw RingError("loday_free: orbit " + o.label + " is not free");
  require_same_group(X, T);
  if (!T->acting.is_whole()) throw RingError("loday_free needs a G-ring");
  require_commutative(*T, "loday_free");
  auto A = rings_for(X, T, mode);
  return assemble(A, "L^" + std::string(mode_name(mode)) + "_" + X.name, true);
}

SimplicialGRing loday_one_isotropy(const FinSimpGSet& X, const GRingPtr& R) {
  require_same_group(X, R);
  if (X.mode.kind != IsotropyKind::One && X.mode.kind != IsotropyKind::Free)
    throw RingError("loday_one_isotropy needs a one-isotropy space");
  if (X.mode.kind == IsotropyKind::One && !(X.mode.H == R->acting))
    throw RingError("coefficients act through " + R->acting.label() + ", the space has isotropy " + X.mode.H.label());
  require_commutative(*R, "loday_one_isotropy");
  auto A = rings_for(X, R, NormMode::Flip);
  return assemble(A, "L_" + X.name, true);
}

SimplicialGRing loday_two_isotropy(const FinSimpGSet& X, const GRingPtr& R) {
  require_same_group(X, R);
  if (X.mode.kind != IsotropyKind::Two) throw RingError("loday_two_isotropy needs a two-isotropy space");
  if (!(X.mode.Hp == R->acting))
    throw RingError("coefficients act through " + R->acting.label() + ", expected " + X.mode.Hp.label());
  if (!(X.mode.phi.image(X.mode.H) == X.mode.Hp)) throw RingError("phi(H) differs from H'");
  auto v = validate(X);
  if (!v.ok) throw RingError("space: " + v.message);
  auto A = rings_for(X, R, NormMode::Flip);
  if (R->is_commutative()) {
    require_commutative(*R, "loday_two_isotropy");
    return assemble(A, "L_" + X.name, true);
  }
  for (auto& L : X.levels)
    for (auto& o : L.orbits)
      if (o.position < 0) throw RingError("noncommutative coefficients need positioned orbits");
  A.positional = true;
  return assemble(A, "L_" + X.name, false);
}

SimplicialGRing loday_normal_sub(const FinSimpGSet& X, const GRingPtr& R) {
  require_same_group(X, R);
  if (X.mode.kind != IsotropyKind::Normal) throw RingError("loday_normal_sub needs a normal-subgroup space");
  auto H = rebase(X.mode.H, R->G);
  if (!subgroup_tools(H).is_normal) throw RingError(H.label() + " is not normal");
  if (!(R->acting == H)) throw RingError("coefficients must act through " + H.label());
  for (auto& K : X.mode.Ks)
    if (!is_subgroup_of(rebase(K, R->G), H)) throw RingError(K.label() + " is not inside " + H.label());
  require_commutative(*R, "loday_normal_sub");
  auto A = rings_for(X, R, NormMode::Flip);
  return assemble(A, "L_" + X.name, true);
}

SimplicialGRing loday(const FinSimpGSet& X, const Coefficient& c, NormMode mode) {
  switch (X.mode.kind) {
    case IsotropyKind::Free:
      if (c.R->acting.is_whole()) return loday_free(X, c.R, mode);
      return loday_one_isotropy(X, c.R);
    case IsotropyKind::One: return loday_one_isotropy(X, c.R);
    case IsotropyKind::Two: return loday_two_isotropy(X, c.R);
    case IsotropyKind::Normal: return loday_normal_sub(X, c.R);
  }
  throw RingError("unknown isotropy mode");
}

BarData bar_data_from_homs(const GRingPtr& M, const GRingPtr& A, const GRingPtr& N, const GRingHom& f,
                           const GRingHom& g) {
  if (f.dom->slots != A->slots || f.cod->slots != M->slots) throw RingError("bar: A -> M has the wrong ends");
  if (g.dom->slots != A->slots || g.cod->slots != N->slots) throw RingError("bar: A -> N has the wrong ends");
  for (auto* h : {&f, &g}) {
    auto r = check_hom(*h, true);
    if (!r.ok) throw RingError("bar: structure map " + h->name + ": " + r.message);
  }
  BarData d{M, A, N, {}, {}};
  const int sM = M->size(), sA = A->size();
  d.right.dom = M->slots;
  d.right.dom.insert(d.right.dom.end(), A->slots.begin(), A->slots.end());
  d.right.cod = M->slots;
  d.right.out.resize(sM);
  for (int q = 0; q < sM; ++q) {
    d.right.out[q].push_back(Factor{q, nullptr});
    for (auto& fac : f.w.out[q]) d.right.out[q].push_back(Factor{sM + fac.src, fac.t});
  }
  d.left.dom = A->slots;
  d.left.dom.insert(d.left.dom.end(), N->slots.begin(), N->slots.end());
  d.left.cod = N->slots;
  d.left.out.resize(N->size());
  for (int q = 0; q < N->size(); ++q) {
    d.left.out[q] = g.w.out[q];
    d.left.out[q].push_back(Factor{sA + q, nullptr});
  }
  return d;
}

BarData esigma_bar_data(int m, const GRingPtr& R) {
  const auto& G = *R->G;
  if (G.order() != 2 * m) throw RingError("coefficients are not over D_" + std::to_string(2 * m));
  Elem s = dihedral_rs(m, 0), rs = dihedral_rs(m, 1);
  if (!(R->acting == generated_subgroup(R->G, {s}))) throw RingError("E_sigma coefficients must act through <s>");
  if (R->size() != 1) throw RingError("E_sigma coefficients have a single slot");
  auto Mr = tensor_induce(R);
  auto Ar = tensor_induce(restrict_to(R, trivial_subgroup(R->G)));
  auto Nr = tensor_induce(pullback(GroupIso(R->G, R->G, dihedral_phi(m).map()), R));
  const auto& bar_t = R->act[s].out[0][0].t;
  const auto& TM = Mr->induced->T;
  const auto& TN = Nr->induced->T;
  const auto& TA = Ar->induced->T;
  const int sM = Mr->size(), sA = Ar->size();
  BarData d{Mr, Ar, Nr, {}, {}};
  d.right.dom = Mr->slots;
  d.right.dom.insert(d.right.dom.end(), Ar->slots.begin(), Ar->slots.end());
  d.right.cod = Mr->slots;
  d.right.out.resize(sM);
  for (int i = 0; i < TM.size(); ++i) {
    Elem t = TM.rep(i);
    d.right.out[i] = {Factor{sM + TA.coset_of(G.mul(t, s)), bar_t}, Factor{i, nullptr}, Factor{sM + TA.coset_of(t), nullptr}};
  }
  d.left.dom = Ar->slots;
  d.left.dom.insert(d.left.dom.end(), Nr->slots.begin(), Nr->slots.end());
  d.left.cod = Nr->slots;
  d.left.out.resize(Nr->size());
  for (int k = 0; k < TN.size(); ++k) {
    Elem t = TN.rep(k);
    d.left.out[k] = {Factor{TA.coset_of(t), nullptr}, Factor{sA + k, nullptr}, Factor{TA.coset_of(G.mul(t, rs)), bar_t}};
  }
  return d;
}

SimplicialGRing bar(const BarData& d, int N, bool multiplicative) {
  if (N < 0) throw RingError("truncation must be nonnegative");
  validate_wiring(d.right);
  validate_wiring(d.left);
  const int sM = d.M->size(), sA = d.A->size(), sN = d.N->size();
  if (static_cast<int>(d.right.cod.size()) != sM || static_cast<int>(d.right.dom.size()) != sM + sA)
    throw RingError("bar: right action has the wrong shape");
  if (static_cast<int>(d.left.cod.size()) != sN || static_cast<int>(d.left.dom.size()) != sA + sN)
    throw RingError("bar: left action has the wrong shape");
  SimplicialGRing S;
  S.G = d.M->G;
  S.N = N;
  S.multiplicative = multiplicative;
  S.name = "B(" + d.M->name + ", " + d.A->name + ", " + d.N->name + ")";
  for (int n = 0; n <= N; ++n) {
    std::vector<GRingPtr> parts{d.M};
    for (int k = 0; k < n; ++k) parts.push_back(d.A);
    parts.push_back(d.N);
    auto L = std::make_shared<GRing>(*box(parts, "B_" + std::to_string(n)));
    L->labels.clear();
    std::vector<SlotTag> tags;
    for (size_t p = 0; p < parts.size(); ++p) {
      std::string pre = p == 0 ? "M" : p == parts.size() - 1 ? "N" : "A" + std::to_string(p);
      for (int q = 0; q < parts[p]->size(); ++q) {
        L->labels.push_back(pre + "." + (q < static_cast<int>(parts[p]->labels.size()) ? parts[p]->labels[q] : std::to_string(q)));
        tags.push_back(SlotTag{static_cast<int>(p), q, q, S.G->identity()});
      }
    }
    S.levels.push_back(L);
    S.tags.push_back(std::move(tags));
    S.orbit_rings.push_back(parts);
  }
  auto A_off = [&](int k) { return sM + (k - 1) * sA; };  // k = 1..n
  auto N_off = [&](int n) { return sM + n * sA; };
  S.faces.assign(N + 1, {});
  S.degens.assign(N + 1, {});
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      Wiring w;
      w.dom = S.levels[n]->slots;
      w.cod = S.levels[n - 1]->slots;
      w.out.resize(w.cod.size());
      if (i == 0) {
        for (int q = 0; q < sM; ++q) w.out[q].push_back(Factor{q, nullptr});
        for (int k = 1; k < n; ++k)
          for (int q = 0; q < sA; ++q) w.out[A_off(k) + q].push_back(Factor{A_off(k) + q, nullptr});
        for (int q = 0; q < sN; ++q)
          for (auto& f : d.left.out[q])
            w.out[N_off(n - 1) + q].push_back(Factor{f.src < sA ? A_off(n) + f.src : N_off(n) + f.src - sA, f.t});
      } else if (i == n) {
        for (int q = 0; q < sM; ++q)
          for (auto& f : d.right.out[q]) w.out[q].push_back(Factor{f.src < sM ? f.src : A_off(1) + f.src - sM, f.t});
        for (int k = 2; k <= n; ++k)
          for (int q = 0; q < sA; ++q) w.out[A_off(k - 1) + q].push_back(Factor{A_off(k) + q, nullptr});
        for (int q = 0; q < sN; ++q) w.out[N_off(n - 1) + q].push_back(Factor{N_off(n) + q, nullptr});
      } else {
        const int p = n - i;
        for (int q = 0; q < sM; ++q) w.out[q].push_back(Factor{q, nullptr});
        for (int k = 1; k <= n; ++k) {
          int kt = k <= p ? k : k - 1;
          for (int q = 0; q < sA; ++q) w.out[A_off(kt) + q].push_back(Factor{A_off(k) + q, nullptr});
        }
        for (int q = 0; q < sN; ++q) w.out[N_off(n - 1) + q].push_back(Factor{N_off(n) + q, nullptr});
      }
      S.faces[n].push_back(GRingHom{S.levels[n], S.levels[n - 1], std::move(w),
                                    "d" + std::to_string(i) + "@" + std::to_string(n)});
    }
  for (int n = 0; n < N; ++n)
    for (int i = 0; i <= n; ++i) {
      const int p = n + 1 - i;  // inserted A position in level n + 1
      Wiring w;
      w.dom = S.levels[n]->slots;
      w.cod = S.levels[n + 1]->slots;
      w.out.resize(w.cod.size());
      for (int q = 0; q < sM; ++q) w.out[q].push_back(Factor{q, nullptr});
      for (int k = 1; k <= n; ++k) {
        int kt = k < p ? k : k + 1;
        for (int q = 0; q < sA; ++q) w.out[A_off(kt) + q].push_back(Factor{A_off(k) + q, nullptr});
      }
      for (int q = 0; q < sN; ++q) w.out[N_off(n + 1) + q].push_back(Factor{N_off(n) + q, nullptr});
      S.degens[n].push_back(GRingHom{S.levels[n], S.levels[n + 1], std::move(w),
                                     "s" + std::to_string(i) + "@" + std::to_string(n)});
    }
  return S;
}

RealHHResult real_hochschild(int m, const Coefficient& c, int N) {
  if (c.kind != CoeffKind::HpRingPhi && c.kind != CoeffKind::ESigma)
    throw RingError("real_hochschild takes a ring over <s> (" + std::string(coeff_kind_name(c.kind)) + " given)");
  const auto& R = c.R;
  if (R->G->order() != 2 * m) throw RingError("coefficients are not over D_" + std::to_string(2 * m));
  if (c.kind == CoeffKind::ESigma && R->is_commutative() == false) {
    // E_sigma data: the generator acts by an anti-involution
    const auto& w = R->act[dihedral_rs(m, 0)];
    if (w.out.size() != 1 || w.out[0].size() != 1 || !w.out[0][0].t || w.out[0][0].t->kind != MapKind::AntiHom)
      throw RingError("E_sigma coefficients need s to act by an anti-involution");
  }
  auto X = build_polygon(m, N);
  RealHHResult out;
  out.L = loday_two_isotropy(X, R);
  BarData d;
  if (R->is_commutative() && c.kind != CoeffKind::ESigma) {
    auto pm = projection_maps(generated_subgroup(R->G, {dihedral_rs(m, 1)}), GroupIso(R->G, R->G, dihedral_phi(m).map()), R);
    d = bar_data_from_homs(pm.to_Hp.cod, pm.to_Hp.dom, pm.to_H.cod, pm.to_Hp, pm.to_H);
  } else {
    d = esigma_bar_data(m, R);
  }
  out.B = bar(d, N, R->is_commutative());
  for (int n = 0; n <= N; ++n) {
    if (out.L.levels[n]->slots != out.B.levels[n]->slots) throw RingError("Loday and bar levels have different shapes");
    out.iso.push_back(GRingHom{out.L.levels[n], out.B.levels[n], identity_wiring(out.L.levels[n]->slots),
                               "iso@" + std::to_string(n)});
  }
  return out;
}

ESigmaReport esigma_check(const RingPtr& A, const Coeffs& unit_fixed, std::optional<SmallMatrix> iota) {
  ESigmaReport r;
  r.commutative = A->is_commutative();
  const int n = A->rank();
  auto fail = [&](std::string msg, int i, int j) {
    r.ok = false;
    r.message = std::move(msg);
    if (i >= 0) r.witness = std::make_pair(i, j);
    return r;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        auto lhs = A->mul(A->mul(A->basis(i), A->basis(j)), A->basis(k));
        auto rhs = A->mul(A->basis(i), A->mul(A->basis(j), A->basis(k)));
        if (!A->equal(lhs, rhs)) return fail("not associative on " + A->basis_name(i) + "," + A->basis_name(j) + "," + A->basis_name(k), i, j);
      }
  if (!iota) iota = A->involution();
  if (!iota) return fail("no involution", -1, -1);
  if (iota->rows() != n || iota->cols() != n) return fail("involution has the wrong shape", -1, -1);
  Transform t{A, A, *iota, MapKind::Additive, "iota"};
  auto io = [&](const Coeffs& x) { return eloday::apply(t, x); };
  for (int i = 0; i < n; ++i) {
    if (!A->equal(io(io(A->basis(i))), A->basis(i)))
      return fail("involution does not square to the identity on " + A->basis_name(i), i, i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto lhs = io(A->mul(A->basis(i), A->basis(j)));
      auto rhs = A->mul(io(A->basis(j)), io(A->basis(i)));
      if (!A->equal(lhs, rhs))
        return fail("involution does not reverse the product of " + A->basis_name(i) + " and " + A->basis_name(j), i, j);
    }
  if (!A->equal(unit_fixed, A->one())) return fail("the designated fixed element does not restrict to the unit", -1, -1);
  if (!A->equal(io(unit_fixed), unit_fixed)) return fail("the designated unit is not fixed", -1, -1);
  std::ostringstream os;
  os << A->name() << ": associative, anti-involution, fixed unit";
  if (!r.commutative) os << " (noncommutative, allowed)";
  os << "; bimodule actions m.a = bar(a_gs) m_g a_g and a.n = a_g n_g bar(a_grs)";
  r.message = os.str();
  return r;
}

namespace {

std::optional<std::string> cmp(const Wiring& a, const Wiring& b, const std::string& what) {
  auto d = compare(a, b);
  if (!d.decided) return what + ": undecided";
  if (!d.equal) {
    TensorSpace S(a.dom), C(a.cod);
    return what + " fails on " + S.format_mono(d.witness) + ": " + format_elem(C, d.lhs) + " versus " +
           format_elem(C, d.rhs);
  }
  return std::nullopt;
}

}  // namespace

SimplicialCheck validate(const SimplicialGRing& S) {
  auto fail = [](std::string m) { return SimplicialCheck{false, std::move(m)}; };
  auto tag = [](const char* a, int i, const char* b, int j, int n) {
    return std::string(a) + std::to_string(i) + " " + b + std::to_string(j) + " on level " + std::to_string(n);
  };
  for (int n = 0; n <= S.N; ++n) {
    auto rc = check_gring(*S.levels[n], !S.multiplicative);
    if (!rc.ok) return fail("level " + std::to_string(n) + ": " + rc.message);
  }
  for (int n = 1; n <= S.N; ++n)
    for (auto& f : S.faces[n]) {
      auto r = check_hom(f, S.multiplicative);
      if (!r.ok) return fail(f.name + ": " + r.message);
    }
  for (int n = 0; n < S.N; ++n)
    for (auto& f : S.degens[n]) {
      auto r = check_hom(f, S.multiplicative);
      if (!r.ok) return fail(f.name + ": " + r.message);
    }
  auto& d = S.faces;
  auto& s = S.degens;
  for (int n = 2; n <= S.N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (auto e = cmp(compose(d[n - 1][i].w, d[n][j].w), compose(d[n - 1][j - 1].w, d[n][i].w), tag("d", i, "d", j, n)))
          return fail(*e);
  for (int n = 0; n + 2 <= S.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (auto e = cmp(compose(s[n + 1][i].w, s[n][j].w), compose(s[n + 1][j + 1].w, s[n][i].w), tag("s", i, "s", j, n)))
          return fail(*e);
  for (int n = 0; n < S.N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        Wiring lhs = compose(d[n + 1][i].w, s[n][j].w);
        Wiring rhs;
        if (i == j || i == j + 1)
          rhs = identity_wiring(S.levels[n]->slots);
        else if (i < j)
          rhs = compose(s[n - 1][j - 1].w, d[n][i].w);
        else
          rhs = compose(s[n - 1][j].w, d[n][i - 1].w);
        if (auto e = cmp(lhs, rhs, tag("d", i, "s", j, n))) return fail(*e);
      }
  return {};
}

SimplicialCheck validate_levelwise_map(const SimplicialGRing& S, const SimplicialGRing& T,
                                       const std::vector<GRingHom>& f) {
  auto fail = [](std::string m) { return SimplicialCheck{false, std::move(m)}; };
  if (static_cast<int>(f.size()) != S.N + 1 || S.N != T.N) return fail("one map per level required");
  for (int n = 0; n <= S.N; ++n) {
    auto r = check_hom(f[n], S.multiplicative && T.multiplicative);
    if (!r.ok) return fail("level " + std::to_string(n) + ": " + r.message);
  }
  for (int n = 1; n <= S.N; ++n)
    for (int i = 0; i <= n; ++i)
      if (auto e = cmp(compose(f[n - 1].w, S.faces[n][i].w), compose(T.faces[n][i].w, f[n].w),
                       "d" + std::to_string(i) + " on level " + std::to_string(n)))
        return fail(*e);
  for (int n = 0; n < S.N; ++n)
    for (int j = 0; j <= n; ++j)
      if (auto e = cmp(compose(f[n + 1].w, S.degens[n][j].w), compose(T.degens[n][j].w, f[n].w),
                       "s" + std::to_string(j) + " on level " + std::to_string(n)))
        return fail(*e);
  return {};
}

}  // namespace eloday
