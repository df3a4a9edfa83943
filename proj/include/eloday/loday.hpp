#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eloday/gring.hpp"
#include "eloday/simpgset.hpp"

namespace eloday {

// Where a tensor slot of a level comes from: slot `base_slot` of block `coset`
// of the ring attached to `orbit`, i.e. of the simplex rep * x_orbit.
struct SlotTag {
  int orbit;
  int coset;
  int base_slot;
  Elem rep;
};

struct SimplicialGRing {
  GroupPtr G;
  int N = 0;
  std::vector<GRingPtr> levels;                 // 0..N
  std::vector<std::vector<GRingHom>> faces;     // faces[n][i], n >= 1
  std::vector<std::vector<GRingHom>> degens;    // degens[n][j], n < N
  std::vector<std::vector<SlotTag>> tags;       // per level, per slot
  std::vector<std::vector<GRingPtr>> orbit_rings;
  // False for bimodule-type structure maps over noncommutative coefficients.
  bool multiplicative = true;
  std::string name;
};

enum class CoeffKind { GRing, HRing, HpRingPhi, ESigma };
const char* coeff_kind_name(CoeffKind k);

struct Coefficient {
  CoeffKind kind = CoeffKind::GRing;
  GRingPtr R;  // acting through G, H, H' or D2 according to kind
  std::optional<GroupIso> phi;
  std::string id;
};

// Free mode: every orbit G/e gets the |G|-fold tensor power of T.
SimplicialGRing loday_free(const FinSimpGSet& X, const GRingPtr& T, NormMode mode);
// Orbits G/e get N_e^G of R restricted, orbits conjugate to G/H get the conjugation-switched N_H^G R.
SimplicialGRing loday_one_isotropy(const FinSimpGSet& X, const GRingPtr& R);
// R over H'; orbits of type H get N_H^G phi^* R. Noncommutative R with an
// anti-involution is allowed when every orbit carries a position (graph spaces).
SimplicialGRing loday_two_isotropy(const FinSimpGSet& X, const GRingPtr& R);
// R over the normal subgroup H; orbit G/K gets N_e^G-style induction along the
// nested transversal {t_j u_l} (t_j for H in G, u_l for K in H).
SimplicialGRing loday_normal_sub(const FinSimpGSet& X, const GRingPtr& R);
SimplicialGRing loday(const FinSimpGSet& X, const Coefficient& c, NormMode mode = NormMode::Flip);

// Ring attached to one orbit of X by the mode rules above.
GRingPtr orbit_ring(const FinSimpGSet& X, const Orbit& o, const GRingPtr& R, NormMode mode);

// Two-sided bar construction. `right` : M (x) A -> M and `left` : A (x) N -> N
// are given as wirings on the concatenated slots.
struct BarData {
  GRingPtr M, A, N;
  Wiring right, left;
};

// Actions through ring maps f : A -> M, g : A -> N (commutative case).
BarData bar_data_from_homs(const GRingPtr& M, const GRingPtr& A, const GRingPtr& N, const GRingHom& f,
                           const GRingHom& g);
// Level n is M (x) A^n (x) N; d_0 acts on N, d_n acts on M.
SimplicialGRing bar(const BarData& data, int N, bool multiplicative = true);

struct RealHHResult {
  SimplicialGRing L, B;
  std::vector<GRingHom> iso;  // L_n -> B_n
};

// R: a ring over <s> in D_2m (kind HpRingPhi, or ESigma for a ring with anti-involution).
RealHHResult real_hochschild(int m, const Coefficient& R, int N);

struct ESigmaReport {
  bool ok = true;
  bool commutative = false;
  std::string message;
  std::optional<std::pair<int, int>> witness;  // basis pair breaking a law
};

// `iota` in the ring's cyclic basis; defaults to the ring's own involution.
ESigmaReport esigma_check(const RingPtr& A, const Coeffs& unit_fixed, std::optional<SmallMatrix> iota = std::nullopt);

// Right action M (x) A -> M and left action A (x) N -> N for M = N_<s>, A = N_e, N = N_<rs> phi^* R
// of an E_sigma coefficient: m.a = bar(a_{g s}) m_g a_g and a.n = a_g n_g bar(a_{g r s}).
BarData esigma_bar_data(int m, const GRingPtr& R_over_s);

struct SimplicialCheck {
  bool ok = true;
  std::string message;
};

// Simplicial identities as exact wiring equalities, equivariance of every map.
SimplicialCheck validate(const SimplicialGRing& S);
// f_n : S_n -> T_n commuting with all faces and degeneracies, each equivariant.
SimplicialCheck validate_levelwise_map(const SimplicialGRing& S, const SimplicialGRing& T,
                                       const std::vector<GRingHom>& f);

}  // namespace eloday
