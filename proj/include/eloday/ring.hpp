#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eloday/exactalg.hpp"

namespace eloday {

// Coordinates in a ring's cyclic basis, each reduced modulo its additive order.
using Coeffs = std::vector<long long>;

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input form: Z^n modulo the columns of relations, products given on generator pairs.
struct RingPresentation {
  std::string name;
  std::vector<std::string> generators;
  IntMatrix relations;                      // n x r
  std::vector<std::vector<IntVector>> mult; // mult[i][j] = g_i g_j
  IntVector unit;
  std::optional<IntMatrix> involution;      // column j = image of g_j
  std::optional<bool> commutative;          // claimed flag, checked
};

// A finitely generated ring normalized to a cyclic basis b_0 = 1, b_1, ... with
// additive orders o_k (0 for a free summand).
class Ring {
 public:
  static std::shared_ptr<const Ring> make(const RingPresentation& p);
  // Z/n for n >= 2, Z for n = 0.
  static std::shared_ptr<const Ring> integers_mod(long long n);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  long long order(int k) const { return orders_[k]; }
  const std::vector<long long>& orders() const { return orders_; }
  bool is_commutative() const { return commutative_; }
  bool all_free() const;
  // Common prime additive order of every basis element, or 0.
  long long prime_order() const;
  const std::string& basis_name(int k) const { return basis_names_[k]; }

  Coeffs zero() const { return Coeffs(rank(), 0); }
  Coeffs one() const;
  Coeffs basis(int k) const;
  const Coeffs& product(int i, int j) const { return table_[i * rank() + j]; }
  Coeffs mul(const Coeffs& a, const Coeffs& b) const;
  Coeffs add(const Coeffs& a, const Coeffs& b) const;
  Coeffs scale(long long c, const Coeffs& a) const;
  void reduce(Coeffs& v) const;
  long long reduce(int k, long long v) const;
  bool equal(const Coeffs& a, const Coeffs& b) const;
  bool is_zero(const Coeffs& a) const;

  // Involution in the cyclic basis, if the presentation supplied one.
  const std::optional<SmallMatrix>& involution() const { return involution_; }
  PresentedGroup additive() const;
  // Presentation coordinates to basis coordinates and back.
  Coeffs from_presentation(const IntVector& x) const;
  IntVector to_presentation(const Coeffs& c) const;
  const RingPresentation& presentation() const { return pres_; }
  std::string format(const Coeffs& c) const;

 private:
  Ring() = default;
  std::string name_;
  std::vector<long long> orders_;
  std::vector<Coeffs> table_;
  std::vector<std::string> basis_names_;
  bool commutative_ = true;
  std::optional<SmallMatrix> involution_;
  IntMatrix to_basis_, from_basis_;
  RingPresentation pres_;
};

using RingPtr = std::shared_ptr<const Ring>;

enum class MapKind { Hom, AntiHom, Additive };

const char* kind_name(MapKind k);

// An additive map between normalized rings: column j is the image of basis j.
struct Transform {
  RingPtr dom, cod;
  SmallMatrix m;
  MapKind kind = MapKind::Hom;
  std::string label;
};

using TransformPtr = std::shared_ptr<const Transform>;

// Validates well-definedness and, for Hom/AntiHom, (anti)multiplicativity and unitality.
TransformPtr make_transform(RingPtr dom, RingPtr cod, SmallMatrix m, MapKind kind, std::string label = "");
TransformPtr identity_transform(const RingPtr& R);
// Either argument may be null, meaning the identity.
TransformPtr compose(const TransformPtr& outer, const TransformPtr& inner);
bool is_identity(const TransformPtr& t);
Coeffs apply(const Transform& t, const Coeffs& x);
bool transform_equal(const TransformPtr& a, const TransformPtr& b, const RingPtr& dom);
MapKind compose_kind(MapKind outer, MapKind inner);

struct RingCheck {
  bool ok = true;
  std::string message;
};

// Associativity, unit, flag consistency, involution axioms on basis elements.
RingCheck check_ring(const Ring& R);
RingCheck check_transform(const Transform& t);

// Commonly used coefficient rings.
RingPtr ring_sign(long long n);                 // Z/n[t]/(t^2 - 1), n = 0 for Z
RingPtr ring_gaussian();                        // Z[i] with complex conjugation
RingPtr ring_group_ring_z2_c2();                // Z/2[C2]
RingPtr ring_lipschitz();                       // Z<1,i,j,k> with quaternion conjugation
RingPtr ring_upper_triangular_f2();             // upper triangular 2x2 over Z/2, transpose-style involution
RingPtr ring_dual_numbers(long long p);         // Z/p[x]/(x^2)
RingPtr ring_split(int n, long long q);         // (Z/q)^n with componentwise product, q = 0 for Z

// Column j is the image of presentation generator j, in presentation coordinates.
TransformPtr transform_from_presentation(RingPtr dom, RingPtr cod, const IntMatrix& m, MapKind kind,
                                         std::string label = "");

}  // namespace eloday
