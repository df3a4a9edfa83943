#pragma once

#include <atomic>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eloday/fingroup.hpp"
#include "eloday/ring.hpp"
#include "eloday/wiring.hpp"

namespace eloday {

struct GRing;
using GRingPtr = std::shared_ptr<const GRing>;

// Data remembered by a tensor-induced ring: slot block i carries the base ring
// at the coset T.rep(i) K.
struct Induction {
  Subgroup K;
  GRingPtr base;
  Transversal T;
};

// A tensor product of normalized rings with an action of a subgroup of G by
// (anti)automorphisms, one wiring per acting element.
struct GRing {
  GroupPtr G;
  Subgroup acting;
  std::vector<RingPtr> slots;
  std::vector<std::string> labels;
  std::vector<Wiring> act;  // indexed by element of G, unused outside `acting`
  std::string name;
  std::optional<Induction> induced;
  // Set for the diagonal model of N_e^G T: T itself.
  GRingPtr diagonal_of;

  int size() const { return static_cast<int>(slots.size()); }
  const Wiring& action(Elem g) const;
  TensorSpace space() const { return TensorSpace(slots); }
  bool is_commutative() const;
};

struct Report {
  bool ok = true;
  std::string message;
  static Report fail(std::string m) { return {false, std::move(m)}; }
};

// Identity, homomorphism law on all pairs, each action map an automorphism or anti-automorphism.
// `slotwise` accepts actions that permute slots with an (anti)automorphism on each slot, the
// shape of the action on tensor products of noncommutative rings.
Report check_gring(const GRing& R, bool slotwise = false);

// One-slot H-ring; transforms[i] is the action of H.members()[i].
GRingPtr make_hring(const Subgroup& H, RingPtr R, const std::vector<TransformPtr>& transforms, std::string name = "");
// Extends generator images to all of H; throws RingError if they do not define an action.
GRingPtr hring_from_generators(const Subgroup& H, RingPtr R, const std::vector<Elem>& gens,
                               const std::vector<TransformPtr>& images, std::string name = "");
GRingPtr trivial_hring(const Subgroup& H, RingPtr R);
// The order-2 element of a two-element subgroup acts by the ring's involution (anti-automorphism).
GRingPtr esigma_hring(const Subgroup& D2, RingPtr R);

GRingPtr restrict_to(const GRingPtr& R, const Subgroup& K);
// (phi^* R)(h) = R(phi(h)) for h in phi^-1(R.acting); phi an automorphism of G.
GRingPtr pullback(const GroupIso& phi, const GRingPtr& R);
// Tensor product with block-diagonal action.
GRingPtr box(const std::vector<GRingPtr>& parts, const std::string& name = "");

// g (x_i r_i) = (x)_{j_i} (g_{j_i}^-1 g g_i) r_i; the canonical transversal unless one is given.
GRingPtr tensor_induce(const GRingPtr& R, std::optional<Transversal> T = std::nullopt);

enum class NormMode { Flip, Diagonal };
const char* mode_name(NormMode m);

// |G|-fold tensor power of a G-ring, slots in element order.
GRingPtr norm_restrict_free(const GRingPtr& T, NormMode mode);

struct GRingHom {
  GRingPtr dom, cod;
  Wiring w;
  std::string name;
};

Report check_hom(const GRingHom& f, bool require_multiplicative = true);
bool hom_equal(const GRingHom& a, const GRingHom& b);
GRingHom compose(const GRingHom& outer, const GRingHom& inner);
GRingHom identity_hom(const GRingPtr& R);

// Number of calls into code paths that need commutative coefficients.
std::atomic<long>& commutative_path_hits();

// eps^d = multiplication (diagonal), eps^f = product of g t_g (flip). Requires T commutative.
GRingHom counit_free(const GRingPtr& T, NormMode mode);
GRingHom counit_free_on(const GRingPtr& N, const GRingPtr& T, NormMode mode);
// Psi: flip model -> diagonal model, slot g gets g t_g.
GRingHom psi_iso(const GRingPtr& T);
GRingHom psi_inverse(const GRingPtr& T);

struct SlotSource {
  Elem source;  // group element indexing the source slot
  bool barred;  // a nontrivial H-element acts on it
};

struct XiWitness {
  Elem gamma = 0;
  std::vector<SlotSource> lhs, rhs;  // gamma o xi and xi o gamma, per target slot
  long long mono = -1;
  TensorElem lhs_value, rhs_value;
};

struct XiResult {
  GRingHom xi;
  bool equivariant = true;
  std::optional<XiWitness> witness;
};

// xi: N_e^G i_e R -> N_H^G N_e^H (R restricted), inner norm in the given mode.
XiResult xi_iso(const GRingPtr& R_over_H, NormMode inner, std::optional<Transversal> T = std::nullopt);
std::string format_pattern(const FiniteGroup& G, const std::vector<SlotSource>& p, int block);

// Equivariant map of orbits G/K -> G/K', eK -> cK' (needs c^-1 K c within K'),
// induced on tensor-induced rings; target slots hit by nobody receive 1.
GRingHom orbit_map(const GRingPtr& src, const GRingPtr& tgt, Elem c);

// Requires gamma in N_G(H) and R(gamma^-1 h gamma) = R(h); uses the least element of gamma H.
GRingHom weyl_action(const GRingPtr& induced, Elem gamma);
GRingHom conj_switch(const GRingPtr& induced, Elem gamma);

struct ProjectionPair {
  GRingHom to_Hp;  // N_e^G R -> N_{H'}^G R
  GRingHom to_H;   // N_e^G R -> N_H^G phi^* R
};

ProjectionPair projection_maps(const Subgroup& H, const GroupIso& phi, const GRingPtr& R_over_Hp);

// Image of a single slot element (placed at slot 0 of block 0) in a tensor-induced ring,
// the adjoint-style unit map used by the Weyl naturality argument.
GRingHom induce_hom(const GRingHom& f, const GRingPtr& induced_dom, const GRingPtr& induced_cod);

}  // namespace eloday
