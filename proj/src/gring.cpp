#include "eloday/gring.hpp"

#include <sstream>

namespace eloday {

namespace {

// Copies the factors of `w` into `out` with source slots shifted by `src_off`,
// target slots shifted by `dst_off`.
void splice(const Wiring& w, int src_off, int dst_off, std::vector<std::vector<Factor>>& out) {
  for (size_t q = 0; q < w.out.size(); ++q)
    for (auto& f : w.out[q]) out[dst_off + q].push_back(Factor{f.src + src_off, f.t});
}

Wiring empty_wiring(const std::vector<RingPtr>& dom, const std::vector<RingPtr>& cod) {
  Wiring w;
  w.dom = dom;
  w.cod = cod;
  w.out.assign(cod.size(), {});
  return w;
}

std::string slot_text(const GRing& R, int i) {
  return i < static_cast<int>(R.labels.size()) ? R.labels[i] : std::to_string(i);
}

std::vector<std::string> block_labels(const FiniteGroup& G, const std::vector<Elem>& reps, const GRing& base) {
  std::vector<std::string> out;
  for (Elem g : reps)
    for (int q = 0; q < base.size(); ++q)
      out.push_back(base.size() == 1 && slot_text(base, 0) == "0" ? G.name(g) : G.name(g) + ":" + slot_text(base, q));
  return out;
}

bool same_slots(const std::vector<RingPtr>& a, const std::vector<RingPtr>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].get() != b[i].get()) return false;
  return true;
}

}  // namespace

const Wiring& GRing::action(Elem g) const {
  if (!acting.contains(g)) throw RingError("element " + G->name(g) + " does not act on " + name);
  return act[g];
}

bool GRing::is_commutative() const {
  for (auto& s : slots)
    if (!s->is_commutative()) return false;
  return true;
}

Report check_gring(const GRing& R, bool slotwise) {
  const auto& G = *R.G;
  if (static_cast<int>(R.act.size()) != G.order()) return Report::fail("one action wiring per group element required");
  if (R.acting.parent().get() != R.G.get()) return Report::fail("acting subgroup belongs to another group");
  for (Elem g : R.acting.members()) {
    const auto& w = R.act[g];
    try {
      validate_wiring(w);
    } catch (const RingError& e) {
      return Report::fail("action of " + G.name(g) + ": " + e.what());
    }
    if (!same_slots(w.dom, R.slots) || !same_slots(w.cod, R.slots))
      return Report::fail("action of " + G.name(g) + " has the wrong slots");
    bool ok = wiring_kind(w) != MapKind::Additive;
    if (!ok && slotwise) {
      ok = true;
      for (auto& fs : w.out)
        ok = ok && fs.size() == 1 && (!fs[0].t || fs[0].t->kind != MapKind::Additive);
    }
    if (!ok)
      return Report::fail("action of " + G.name(g) + " is neither multiplicative nor anti-multiplicative");
  }
  if (!wiring_equal(R.act[G.identity()], identity_wiring(R.slots))) return Report::fail("identity does not act trivially");
  for (Elem g : R.acting.members())
    for (Elem h : R.acting.members()) {
      auto d = compare(compose(R.act[g], R.act[h]), R.act[G.mul(g, h)]);
      if (!d.decided) return Report::fail("action law undecided");
      if (!d.equal)
        return Report::fail("action law fails for " + G.name(g) + ", " + G.name(h) + " on " +
                            R.space().format_mono(d.witness));
    }
  return {};
}

GRingPtr make_hring(const Subgroup& H, RingPtr R, const std::vector<TransformPtr>& transforms, std::string name) {
  if (static_cast<int>(transforms.size()) != H.order()) throw RingError("one transform per subgroup element required");
  auto out = std::make_shared<GRing>();
  out->G = H.parent();
  out->acting = H;
  out->slots = {R};
  out->labels = {"0"};
  out->name = name.empty() ? R->name() : std::move(name);
  out->act.assign(out->G->order(), Wiring{});
  for (int i = 0; i < H.order(); ++i) {
    TransformPtr t = is_identity(transforms[i]) ? nullptr : transforms[i];
    if (t && (t->dom.get() != R.get() || t->cod.get() != R.get())) throw RingError("action transform on the wrong ring");
    out->act[H.members()[i]] = Wiring{{R}, {R}, {{Factor{0, t}}}};
  }
  auto rep = check_gring(*out);
  if (!rep.ok) throw RingError("not an action: " + rep.message);
  return out;
}

GRingPtr hring_from_generators(const Subgroup& H, RingPtr R, const std::vector<Elem>& gens,
                               const std::vector<TransformPtr>& images, std::string name) {
  const auto& G = *H.parent();
  if (gens.size() != images.size()) throw RingError("one image per generator required");
  std::vector<TransformPtr> img(G.order());
  std::vector<char> known(G.order(), 0);
  std::vector<Elem> queue{G.identity()};
  known[G.identity()] = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Elem x = queue[qi];
    for (size_t k = 0; k < gens.size(); ++k) {
      if (!H.contains(gens[k])) throw RingError("generator outside the subgroup");
      Elem y = G.mul(x, gens[k]);
      TransformPtr t = compose(img[x], images[k]);
      if (known[y]) {
        if (!transform_equal(img[y], t, R)) throw RingError("generator images do not define an action");
        continue;
      }
      known[y] = 1;
      img[y] = t;
      queue.push_back(y);
    }
  }
  std::vector<TransformPtr> ts;
  for (Elem h : H.members()) {
    if (!known[h]) throw RingError("generators do not generate the subgroup");
    ts.push_back(img[h]);
  }
  return make_hring(H, R, ts, std::move(name));
}

GRingPtr trivial_hring(const Subgroup& H, RingPtr R) {
  return make_hring(H, R, std::vector<TransformPtr>(H.order(), nullptr));
}

GRingPtr esigma_hring(const Subgroup& D2, RingPtr R) {
  if (D2.order() != 2) throw RingError("the involution action needs a subgroup of order 2");
  if (!R->involution()) throw RingError("ring " + R->name() + " has no involution");
  auto bar = make_transform(R, R, *R->involution(), R->is_commutative() ? MapKind::Hom : MapKind::AntiHom, "bar");
  std::vector<TransformPtr> ts(2);
  ts[D2.position(D2.parent()->identity())] = nullptr;
  ts[1 - D2.position(D2.parent()->identity())] = bar;
  return make_hring(D2, R, ts, R->name());
}

GRingPtr restrict_to(const GRingPtr& R, const Subgroup& K) {
  if (!is_subgroup_of(K, R->acting)) throw RingError("restriction to a non-subgroup");
  auto out = std::make_shared<GRing>(*R);
  out->acting = K;
  out->name = "i_" + K.label() + " " + R->name;
  for (Elem g = 0; g < R->G->order(); ++g)
    if (!K.contains(g)) out->act[g] = Wiring{};
  return out;
}

GRingPtr pullback(const GroupIso& phi, const GRingPtr& R) {
  if (phi.domain().get() != R->G.get() && phi.domain()->table() != R->G->table())
    throw RingError("pullback along a map of another group");
  auto out = std::make_shared<GRing>(*R);
  out->induced.reset();
  out->diagonal_of.reset();
  out->acting = phi.inverse().image(R->acting);
  out->name = "pull(" + R->name + ")";
  out->act.assign(R->G->order(), Wiring{});
  for (Elem h : out->acting.members()) out->act[h] = R->act[phi(h)];
  return out;
}

GRingPtr box(const std::vector<GRingPtr>& parts, const std::string& name) {
  if (parts.empty()) throw RingError("box of nothing");
  auto out = std::make_shared<GRing>();
  out->G = parts[0]->G;
  out->acting = parts[0]->acting;
  for (auto& p : parts) {
    if (!(p->acting == out->acting)) throw RingError("box factors act through different subgroups");
    out->slots.insert(out->slots.end(), p->slots.begin(), p->slots.end());
    for (int q = 0; q < p->size(); ++q) out->labels.push_back(p->name + "." + slot_text(*p, q));
  }
  out->name = name;
  if (name.empty())
    for (size_t i = 0; i < parts.size(); ++i) out->name += (i ? " [] " : "") + parts[i]->name;
  out->act.assign(out->G->order(), Wiring{});
  for (Elem g : out->acting.members()) {
    Wiring w = empty_wiring(out->slots, out->slots);
    int off = 0;
    for (auto& p : parts) {
      splice(p->act[g], off, off, w.out);
      off += p->size();
    }
    out->act[g] = std::move(w);
  }
  return out;
}

GRingPtr tensor_induce(const GRingPtr& R, std::optional<Transversal> T) {
  const auto& H = R->acting;
  Transversal tr = T ? *T : canonical_transversal(H);
  if (!(tr.subgroup() == H)) throw RingError("transversal for the wrong subgroup");
  const auto& G = *R->G;
  const int ns = R->size();
  auto out = std::make_shared<GRing>();
  out->G = R->G;
  out->acting = whole_group(R->G);
  for (int i = 0; i < tr.size(); ++i) out->slots.insert(out->slots.end(), R->slots.begin(), R->slots.end());
  out->labels = block_labels(G, tr.reps(), *R);
  out->name = "N_" + H.label() + " " + R->name;
  out->act.assign(G.order(), Wiring{});
  for (Elem g = 0; g < G.order(); ++g) {
    Wiring w = empty_wiring(out->slots, out->slots);
    for (int i = 0; i < tr.size(); ++i) {
      Elem x = G.mul(g, tr.rep(i));
      int j = tr.coset_of(x);
      splice(R->act[tr.h_part(x)], i * ns, j * ns, w.out);
    }
    out->act[g] = std::move(w);
  }
  out->induced = Induction{H, R, tr};
  return out;
}

const char* mode_name(NormMode m) { return m == NormMode::Flip ? "flip" : "diagonal"; }

GRingPtr norm_restrict_free(const GRingPtr& T, NormMode mode) {
  const auto& A = T->acting;
  const auto& G = *T->G;
  if (mode == NormMode::Flip) {
    auto out = tensor_induce(restrict_to(T, trivial_subgroup(T->G)));
    if (A.is_whole()) {
      auto o = std::make_shared<GRing>(*out);
      o->name = "N^f " + T->name;
      return o;
    }
    // norm over a proper subgroup: slots indexed by its members
    auto o = std::make_shared<GRing>();
    o->G = T->G;
    o->acting = A;
    const int ns = T->size();
    for (int i = 0; i < A.order(); ++i) o->slots.insert(o->slots.end(), T->slots.begin(), T->slots.end());
    o->labels = block_labels(G, A.members(), *T);
    o->name = "N^f_" + A.label() + " " + T->name;
    o->act.assign(G.order(), Wiring{});
    for (Elem g : A.members()) {
      Wiring w = empty_wiring(o->slots, o->slots);
      for (int i = 0; i < A.order(); ++i)
        splice(identity_wiring(T->slots), i * ns, A.position(G.mul(g, A.members()[i])) * ns, w.out);
      o->act[g] = std::move(w);
    }
    return o;
  }
  auto o = std::make_shared<GRing>();
  o->G = T->G;
  o->acting = A;
  const int ns = T->size();
  for (int i = 0; i < A.order(); ++i) o->slots.insert(o->slots.end(), T->slots.begin(), T->slots.end());
  o->labels = block_labels(G, A.members(), *T);
  o->name = "N^d" + (A.is_whole() ? std::string() : "_" + A.label()) + " " + T->name;
  o->act.assign(G.order(), Wiring{});
  for (Elem g : A.members()) {
    Wiring w = empty_wiring(o->slots, o->slots);
    for (int i = 0; i < A.order(); ++i) splice(T->act[g], i * ns, A.position(G.mul(g, A.members()[i])) * ns, w.out);
    o->act[g] = std::move(w);
  }
  o->diagonal_of = T;
  return o;
}

Report check_hom(const GRingHom& f, bool require_multiplicative) {
  try {
    validate_wiring(f.w);
  } catch (const RingError& e) {
    return Report::fail(e.what());
  }
  if (!same_slots(f.w.dom, f.dom->slots) || !same_slots(f.w.cod, f.cod->slots))
    return Report::fail("wiring slots do not match the rings");
  if (!(f.dom->acting == f.cod->acting)) return Report::fail("source and target are acted on by different subgroups");
  if (require_multiplicative && wiring_kind(f.w) != MapKind::Hom) return Report::fail("map is not multiplicative");
  const auto& G = *f.dom->G;
  for (Elem g : f.dom->acting.members()) {
    auto d = compare(compose(f.cod->act[g], f.w), compose(f.w, f.dom->act[g]));
    if (!d.decided) return Report::fail("equivariance undecided");
    if (!d.equal) {
      auto S = f.dom->space(), C = f.cod->space();
      return Report::fail("not equivariant under " + G.name(g) + ": on " + S.format_mono(d.witness) + " got " +
                          format_elem(C, d.lhs) + " versus " + format_elem(C, d.rhs));
    }
  }
  return {};
}

bool hom_equal(const GRingHom& a, const GRingHom& b) { return wiring_equal(a.w, b.w); }

GRingHom compose(const GRingHom& outer, const GRingHom& inner) {
  if (!same_slots(outer.dom->slots, inner.cod->slots)) throw RingError("G-ring maps do not compose");
  return GRingHom{inner.dom, outer.cod, compose(outer.w, inner.w), outer.name + " o " + inner.name};
}

GRingHom identity_hom(const GRingPtr& R) { return GRingHom{R, R, identity_wiring(R->slots), "id"}; }

std::atomic<long>& commutative_path_hits() {
  static std::atomic<long> n{0};
  return n;
}

namespace {

void require_commutative(const GRing& T, const char* what) {
  ++commutative_path_hits();
  if (!T.is_commutative()) throw RingError(std::string(what) + " needs commutative coefficients");
}

}  // namespace

GRingHom counit_free_on(const GRingPtr& N, const GRingPtr& T, NormMode mode) {
  require_commutative(*T, "the counit");
  const auto& A = T->acting;
  const int ns = T->size();
  if (N->size() != A.order() * ns) throw RingError("counit: source is not a norm of the target");
  Wiring w = empty_wiring(N->slots, T->slots);
  for (int i = 0; i < A.order(); ++i) {
    if (mode == NormMode::Diagonal)
      splice(identity_wiring(T->slots), i * ns, 0, w.out);
    else
      splice(T->act[A.members()[i]], i * ns, 0, w.out);
  }
  return GRingHom{N, T, std::move(w), mode == NormMode::Flip ? "eps^f" : "eps^d"};
}

GRingHom counit_free(const GRingPtr& T, NormMode mode) { return counit_free_on(norm_restrict_free(T, mode), T, mode); }

namespace {

GRingHom psi_between(const GRingPtr& T, const GRingPtr& from, const GRingPtr& to, bool inverse) {
  require_commutative(*T, "the flip/diagonal comparison");
  const auto& A = T->acting;
  const auto& G = *T->G;
  const int ns = T->size();
  Wiring w = empty_wiring(from->slots, to->slots);
  for (int i = 0; i < A.order(); ++i) {
    Elem g = A.members()[i];
    splice(T->act[inverse ? G.inv(g) : g], i * ns, i * ns, w.out);
  }
  return GRingHom{from, to, std::move(w), inverse ? "Psi^-1" : "Psi"};
}

}  // namespace

GRingHom psi_iso(const GRingPtr& T) {
  return psi_between(T, norm_restrict_free(T, NormMode::Flip), norm_restrict_free(T, NormMode::Diagonal), false);
}

GRingHom psi_inverse(const GRingPtr& T) {
  return psi_between(T, norm_restrict_free(T, NormMode::Diagonal), norm_restrict_free(T, NormMode::Flip), true);
}

namespace {

std::vector<SlotSource> pattern_of(const Wiring& w, const GRing& src, int ns) {
  (void)src;
  std::vector<SlotSource> p;
  for (auto& fs : w.out) {
    if (fs.size() != 1) throw RingError("pattern: target slot without a single source");
    p.push_back(SlotSource{fs[0].src / ns, !is_identity(fs[0].t)});
  }
  return p;
}

}  // namespace

XiResult xi_iso(const GRingPtr& R, NormMode inner, std::optional<Transversal> T) {
  const auto& H = R->acting;
  const auto& G = *R->G;
  const int ns = R->size();
  Transversal tr = T ? *T : canonical_transversal(H);
  auto src = tensor_induce(restrict_to(R, trivial_subgroup(R->G)));
  auto inner_ring = norm_restrict_free(R, inner);
  auto tgt = tensor_induce(inner_ring, tr);
  Wiring w = empty_wiring(src->slots, tgt->slots);
  for (Elem g = 0; g < G.order(); ++g) {
    int i = tr.coset_of(g);
    int l = H.position(tr.h_part(g));
    for (int q = 0; q < ns; ++q) w.out[(i * H.order() + l) * ns + q].push_back(Factor{g * ns + q, nullptr});
  }
  XiResult res;
  res.xi = GRingHom{src, tgt, w, std::string("xi (inner ") + mode_name(inner) + ")"};
  for (Elem gamma = 0; gamma < G.order(); ++gamma) {
    Wiring lhs = compose(tgt->act[gamma], w);
    Wiring rhs = compose(w, src->act[gamma]);
    auto d = compare(lhs, rhs);
    if (!d.decided) throw RingError("xi equivariance undecided");
    if (d.equal) continue;
    res.equivariant = false;
    XiWitness wit;
    wit.gamma = gamma;
    wit.lhs = pattern_of(lhs, *src, ns);
    wit.rhs = pattern_of(rhs, *src, ns);
    wit.mono = d.witness;
    wit.lhs_value = d.lhs;
    wit.rhs_value = d.rhs;
    res.witness = wit;
    break;
  }
  return res;
}

std::string format_pattern(const FiniteGroup& G, const std::vector<SlotSource>& p, int block) {
  std::ostringstream os;
  for (size_t k = 0; k < p.size(); ++k) {
    if (k % block == 0) os << (k ? " x (" : "(");
    else os << " x ";
    os << (p[k].barred ? "~r" : "r") << "[" << G.name(p[k].source) << "]";
    if (k % block == static_cast<size_t>(block) - 1) os << ")";
  }
  return os.str();
}

GRingHom orbit_map(const GRingPtr& src, const GRingPtr& tgt, Elem c) {
  const auto& G = *src->G;
  if (src->diagonal_of || tgt->diagonal_of) {
    if (src->diagonal_of != tgt->diagonal_of) throw RingError("orbit map between different diagonal norms");
    const auto& Tr = src->diagonal_of;
    const auto& A = Tr->acting;
    if (!A.is_whole()) throw RingError("diagonal orbit map needs a norm over the whole group");
    for (Elem g : A.members()) {
      auto d = compare(Tr->act[G.mul(g, c)], Tr->act[G.mul(c, g)]);
      if (!d.decided || !d.equal)
        throw RingError("diagonal model: right translation by " + G.name(c) +
                        " is not equivariant (the element must act centrally)");
    }
    const int ns = Tr->size();
    Wiring w = empty_wiring(src->slots, tgt->slots);
    for (Elem g = 0; g < G.order(); ++g) splice(Tr->act[c], g * ns, G.mul(g, c) * ns, w.out);
    return GRingHom{src, tgt, std::move(w), "diag(" + G.name(c) + ")"};
  }
  if (!src->induced || !tgt->induced) throw RingError("orbit maps need tensor-induced rings");
  const auto& S = *src->induced;
  const auto& Tt = *tgt->induced;
  if (!same_slots(S.base->slots, Tt.base->slots)) throw RingError("orbit map: coefficient rings differ");
  for (Elem k : S.K.members()) {
    Elem k2 = G.mul(G.mul(G.inv(c), k), c);
    if (!Tt.K.contains(k2))
      throw RingError("no equivariant map G/" + S.K.label() + " -> G/" + Tt.K.label() + " sending e to " + G.name(c));
    auto d = compare(S.base->act[k], Tt.base->act[k2]);
    if (!d.decided || !d.equal)
      throw RingError("orbit map by " + G.name(c) + " is not compatible with the coefficient actions (" + G.name(k) +
                      " versus " + G.name(k2) + ")");
  }
  const int ns = S.base->size();
  Wiring w = empty_wiring(src->slots, tgt->slots);
  for (int i = 0; i < S.T.size(); ++i) {
    Elem x = G.mul(S.T.rep(i), c);
    int j = Tt.T.coset_of(x);
    splice(Tt.base->act[Tt.T.h_part(x)], i * ns, j * ns, w.out);
  }
  return GRingHom{src, tgt, std::move(w), "orb(" + G.name(c) + ")"};
}

GRingHom weyl_action(const GRingPtr& R, Elem gamma) {
  if (!R->induced) throw RingError("the Weyl action needs a tensor-induced ring");
  const auto& H = R->induced->K;
  const auto& G = *R->G;
  if (!(conjugate_subgroup(H, gamma) == H)) throw RingError(G.name(gamma) + " does not normalize " + H.label());
  Elem g0 = gamma;
  for (Elem h : H.members()) g0 = std::min(g0, G.mul(gamma, h));
  for (Elem h : H.members()) {
    auto d = compare(R->induced->base->act[G.conj(g0, h)], R->induced->base->act[h]);
    if (!d.decided || !d.equal)
      throw RingError("coefficient action is not invariant under conjugation by " + G.name(g0) +
                      "; use the conjugation switch instead");
  }
  auto f = orbit_map(R, R, G.inv(g0));
  f.name = "weyl(" + G.name(g0) + ")";
  return f;
}

GRingHom conj_switch(const GRingPtr& R, Elem gamma) {
  if (!R->induced) throw RingError("the conjugation switch needs a tensor-induced ring");
  const auto& G = *R->G;
  auto pulled = pullback(conjugation(R->G, G.inv(gamma)), R->induced->base);
  auto tgt = tensor_induce(pulled);
  auto f = orbit_map(R, tgt, G.inv(gamma));
  f.name = "switch(" + G.name(gamma) + ")";
  return f;
}

ProjectionPair projection_maps(const Subgroup& H, const GroupIso& phi, const GRingPtr& R) {
  require_commutative(*R, "the projection maps");
  const auto& Hp = R->acting;
  if (!(phi.image(H) == Hp)) throw RingError("phi must carry H onto the acting subgroup H'");
  auto G = R->G;
  auto src = tensor_induce(restrict_to(R, trivial_subgroup(G)));
  auto toHp = tensor_induce(R);
  auto pulled = restrict_to(pullback(phi, R), H);
  auto toH = tensor_induce(pulled);
  ProjectionPair p{orbit_map(src, toHp, G->identity()), orbit_map(src, toH, G->identity())};
  p.to_Hp.name = "proj_H'";
  p.to_H.name = "proj_H";
  return p;
}

GRingHom induce_hom(const GRingHom& f, const GRingPtr& a, const GRingPtr& b) {
  if (!a->induced || !b->induced) throw RingError("induce_hom needs tensor-induced rings");
  if (a->induced->T.reps() != b->induced->T.reps()) throw RingError("induce_hom: transversals differ");
  const int na = f.dom->size(), nb = f.cod->size();
  Wiring w = empty_wiring(a->slots, b->slots);
  for (int i = 0; i < a->induced->T.size(); ++i) splice(f.w, i * na, i * nb, w.out);
  return GRingHom{a, b, std::move(w), "N(" + f.name + ")"};
}

}  // namespace eloday
