#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <optional>
#include <vector>

#include "eloday/exactalg.hpp"
#include "eloday/loday.hpp"
#include "eloday/sparse_elim.hpp"

namespace eloday {

// Size guard for levels and chain groups handled by the sparse kernels.
struct HomologyLimits {
  long long max_monomials = 1LL << 22;
  long long max_generators = 4'000'000;
  long long dense_entries = 4'000'000;  // residual block of the sparse elimination
  int dense_dim = 400;                  // chain groups for explicit cycle bases
  long long dense_fixed_dim = 4096;     // levels whose K-action is not monomial
  long long fill_budget = kDefaultFillBudget;
};

// K-fixed part of one simplicial level. The level's additive group is the sum
// over monomials m of Z/ord(m); each K-orbit of monomials carries at most one
// fixed generator c0 * sum_m w_m m, of additive order `order` (0 = Z).
struct FixedLevel {
  Subgroup K;
  int n = 0;
  TensorSpace V;
  std::vector<long long> base, c0, order;
  std::vector<char> degenerate;
  // Orbit members and unit weights, generator g in [offset[g], offset[g+1]); empty for trivial K.
  std::vector<long long> offset, members, weights;
  std::vector<int> gen_of;  // base monomial -> generator, else -1
  // Non-monomial actions: explicit generators, coordinates = (Q x / qscale) mod order,
  // Q stored by monomial; no generator is flagged degenerate.
  bool dense = false;
  std::vector<TensorElem> dense_vectors;
  std::vector<std::vector<std::pair<int, BigInt>>> qcol;
  BigInt qscale;

  int size() const { return static_cast<int>(base.size()); }
  TensorElem vector(int g) const;
  // Coordinates of a K-fixed element (read at the orbit bases).
  std::vector<std::pair<int, long long>> coordinates(const TensorElem& x) const;
};

FixedLevel fixed_level(const SimplicialGRing& S, const Subgroup& K, int n, const HomologyLimits& lim = {});

struct LevelComplex {
  Subgroup K;
  std::vector<FixedLevel> levels;
  // Unnormalized complex on all fixed generators; boundary[n] : C_n -> C_{n-1}, boundary[0] empty.
  std::vector<SparseMatrix> boundary;
  // Normalized complex: C_n modulo the degenerate subcomplex, on the nondegenerate generators.
  std::vector<std::vector<int>> norm_gens;   // normalized index -> generator
  std::vector<std::vector<int>> norm_index;  // generator -> normalized index or -1
  std::vector<SparseMatrix> norm_boundary;

  int top() const { return static_cast<int>(levels.size()) - 1; }
  std::vector<long long> orders(int n, bool normalized) const;
};

// Levels 0..top (default: the truncation).
LevelComplex moore(const SimplicialGRing& S, const Subgroup& K, int top = -1, const HomologyLimits& lim = {});
// Throws AlgebraError when some boundary composite is nonzero.
void check_boundary_squares(const LevelComplex& C);

FgAbelianGroup complex_homology(const LevelComplex& C, int k, bool normalized = true, const HomologyLimits& lim = {});

// Requires max_k <= S.N - 1.
std::vector<FgAbelianGroup> homology_table(const SimplicialGRing& S, const Subgroup& K, int max_k,
                                           const HomologyLimits& lim = {});
std::vector<FgAbelianGroup> homology_table_unnormalized(const SimplicialGRing& S, const Subgroup& K, int max_k,
                                                        const HomologyLimits& lim = {});

// H_k as cycles modulo boundaries on a minimal generating set (one generator per
// nonunit elementary divisor). Normalized chain coordinates throughout.
struct HomologyPresentation {
  PresentedGroup group;
  IntMatrix cycles;  // C_k x group.ngens, representing cycles
  IntMatrix basis;   // Z-basis of the cycle lattice (torsion multiples included)
  IntMatrix reduce;  // basis coordinates -> group coordinates
  // Class of a cycle given in chain coordinates.
  IntVector class_of(const IntVector& z) const;
};

HomologyPresentation homology_presentation(const LevelComplex& C, int k, const HomologyLimits& lim = {});

class MackeyH {
 public:
  MackeyH(const SimplicialGRing& S, int k, const HomologyLimits& lim = {});

  int degree() const { return k_; }
  const std::vector<Subgroup>& subgroups() const { return subs_; }
  // One entry per conjugacy class of subgroups.
  const std::vector<int>& class_reps() const { return reps_; }
  int index_of(const Subgroup& K) const;
  const FgAbelianGroup& value(int i) const { return values_[i]; }
  const HomologyPresentation& presentation(int i) const { return pres_[i]; }
  const LevelComplex& complex(int i) const { return *cx_[i]; }

  // Restriction K -> L, transfer L -> K (L <= K), conjugation L -> g L g^-1.
  AbHom res(int K, int L) const;
  AbHom tr(int L, int K) const;
  AbHom conj(Elem g, int L) const;

 private:
  AbHom chain_map_hom(int from, int to, const std::vector<std::vector<std::pair<int, long long>>>& images) const;
  const SimplicialGRing* S_;
  int k_;
  HomologyLimits lim_;
  std::vector<Subgroup> subs_;
  std::vector<int> reps_;
  std::vector<std::shared_ptr<LevelComplex>> cx_;
  std::vector<FgAbelianGroup> values_;
  std::vector<HomologyPresentation> pres_;
  mutable std::map<std::tuple<int, int, int>, AbHom> cache_;  // (kind, a, b)
};

struct MackeyCheck {
  bool ok = true;
  std::string message;
};

// res o tr double-coset formula for all J, L <= K and conjugations being isomorphisms.
MackeyCheck check_double_coset(const MackeyH& M);
bool is_isomorphism(const AbHom& f);

// coker(d_0 - d_1) on the K-fixed parts of levels 1 -> 0, with its own fixed-point computation.
FgAbelianGroup oracle_h0(const SimplicialGRing& S, const Subgroup& K);

}  // namespace eloday
