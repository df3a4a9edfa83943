#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eloday/ring.hpp"

namespace eloday {

// Tensor product of normalized rings; monomials are mixed-radix indices with
// slot 0 most significant.
class TensorSpace {
 public:
  TensorSpace() = default;
  explicit TensorSpace(std::vector<RingPtr> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  const std::vector<RingPtr>& slots() const { return slots_; }
  const RingPtr& slot(int i) const { return slots_[i]; }
  // Number of monomials; throws RingError past 2^62.
  long long dim() const { return dim_; }
  long long stride(int i) const { return stride_[i]; }
  int digit(long long mono, int i) const { return static_cast<int>((mono / stride_[i]) % slots_[i]->rank()); }
  void digits(long long mono, std::vector<int>& out) const;
  long long index(const std::vector<int>& digits) const;
  // Additive order of a monomial: gcd of the slot basis orders (0 = free).
  long long order(long long mono) const;
  std::string format_mono(long long mono) const;

 private:
  std::vector<RingPtr> slots_;
  std::vector<long long> stride_;
  long long dim_ = 1;
};

// Sparse element: (monomial, coefficient) pairs sorted by monomial, nonzero
// coefficients reduced by the monomial order.
using TensorElem = std::vector<std::pair<long long, long long>>;

void tensor_add(const TensorSpace& V, TensorElem& acc, const TensorElem& x, long long scale = 1);
TensorElem tensor_normalize(const TensorSpace& V, TensorElem x);
std::string format_elem(const TensorSpace& V, const TensorElem& x);

// One factor feeding a target slot: source slot src, transformed by t (null = identity).
struct Factor {
  int src;
  TransformPtr t;
};

// A map between tensor products: target slot j receives the product, in list
// order, of its factors; an empty list means 1. Every source slot is used once.
struct Wiring {
  std::vector<RingPtr> dom, cod;
  std::vector<std::vector<Factor>> out;
};

Wiring identity_wiring(const std::vector<RingPtr>& slots);
// Throws RingError on bad slot references or mismatched rings.
void validate_wiring(const Wiring& w);
Wiring compose(const Wiring& outer, const Wiring& inner);
// Hom if every transform is a Hom and merges only happen in commutative slots;
// AntiHom if every transform is an AntiHom and nothing merges; else Additive.
MapKind wiring_kind(const Wiring& w);
bool wiring_uses_noncommutative_merge(const Wiring& w);
// True if every transform sends basis elements to unit multiples of basis elements.
bool wiring_is_monomial(const Wiring& w);
bool is_identity_wiring(const Wiring& w);
std::string describe(const Wiring& w);

TensorElem apply_mono(const Wiring& w, const TensorSpace& dom, const TensorSpace& cod, long long mono);
TensorElem apply(const Wiring& w, const TensorSpace& dom, const TensorSpace& cod, const TensorElem& x);

struct WiringDiff {
  bool equal = true;
  bool decided = true;
  long long witness = -1;  // source monomial
  TensorElem lhs, rhs;
};

// Decides equality component by component; unequal components are extended to a
// full witness by unit monomials and confirmed on the whole map.
WiringDiff compare(const Wiring& a, const Wiring& b, long long exhaustive_limit = 1LL << 22);
bool wiring_equal(const Wiring& a, const Wiring& b);

}  // namespace eloday
