#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "eloday/bigint.hpp"

namespace eloday {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<BigInt>;
using IntVector = DenseVector<BigInt>;
using SmallMatrix = DenseMatrix<long long>;

struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// U M V = D with U, V unimodular and D diagonal with d1 | d2 | ... (nonnegative).
template <typename Scalar>
struct SmithForm {
  DenseMatrix<Scalar> U, D, V;
  int rank = 0;
  std::vector<Scalar> diagonal() const;
};

// Pivot: least nonzero absolute value, ties broken by row-major position.
// The 64-bit instantiation throws OverflowError instead of wrapping.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form_impl(DenseMatrix<Scalar> M, bool with_transforms);

template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& M,
                                                     bool with_transforms = true) {
  return smith_normal_form_impl<typename Derived::Scalar>(M.eval(), with_transforms);
}

// Elementary divisors of an exact matrix; tries 64-bit arithmetic first.
std::vector<BigInt> elementary_divisors(const IntMatrix& M);

IntMatrix to_int_matrix(const SmallMatrix& M);
std::optional<SmallMatrix> to_small_matrix(const IntMatrix& M);
BigInt determinant(const IntMatrix& M);
bool is_unimodular(const IntMatrix& M);
// Throws AlgebraError unless M is unimodular.
IntMatrix unimodular_inverse(const IntMatrix& M);

// Columns form a Z-basis of ker M.
IntMatrix kernel_basis(const IntMatrix& M);

// Z-lattice in echelon form: basis vectors sorted by strictly increasing pivot
// (first nonzero) position with positive pivot entries.
class Lattice {
 public:
  explicit Lattice(int dim) : dim_(dim) {}
  void insert(IntVector v);
  void insert_columns(const IntMatrix& M);
  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  IntMatrix basis() const;
  // Coordinates of v in the basis, or nullopt if v lies outside the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool contains(const IntVector& v) const { return coordinates(v).has_value(); }

 private:
  int dim_;
  std::vector<IntVector> basis_;
  std::vector<int> pivot_;
};

IntMatrix image_basis(const IntMatrix& M);
// Some x with A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);

// solve_integer for many right-hand sides against one A.
class IntegerSolver {
 public:
  explicit IntegerSolver(const IntMatrix& A);
  std::optional<IntVector> solve(const IntVector& b) const;

 private:
  SmithForm<BigInt> snf_;
  long cols_;
};

class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(int free_rank, std::vector<BigInt> torsion);

  int free_rank() const { return free_rank_; }
  const std::vector<BigInt>& torsion() const { return torsion_; }
  bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
  std::string str() const;
  friend bool operator==(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_ == b.torsion_;
  }
  friend bool operator!=(const FgAbelianGroup& a, const FgAbelianGroup& b) { return !(a == b); }

 private:
  int free_rank_ = 0;
  std::vector<BigInt> torsion_;
};

// Z^n modulo the column span of rel.
struct PresentedGroup {
  int ngens = 0;
  IntMatrix rel;

  PresentedGroup() : rel(0, 0) {}
  PresentedGroup(int n, IntMatrix r);
  static PresentedGroup free(int n);
  static PresentedGroup cyclic(const std::vector<BigInt>& orders);  // 0 means Z
  static PresentedGroup from(const FgAbelianGroup& A);
  FgAbelianGroup canonical() const;
  bool is_zero_element(const IntVector& v) const;
};

struct AbHom {
  PresentedGroup domain, codomain;
  IntMatrix matrix;       // codomain.ngens x domain.ngens
  IntMatrix certificate;  // matrix * domain.rel = codomain.rel * certificate
};

// Throws AlgebraError if matrix does not carry relations into relations.
AbHom make_hom(const PresentedGroup& dom, const PresentedGroup& cod, const IntMatrix& matrix);
bool hom_equal(const AbHom& f, const AbHom& g);
AbHom hom_compose(const AbHom& outer, const AbHom& inner);

// Generator (i, j) has index i * B.ngens + j.
PresentedGroup tensor(const PresentedGroup& A, const PresentedGroup& B);

struct FixedResult {
  PresentedGroup fixed;
  IntMatrix inclusion;  // A.ngens x fixed.ngens
};

FixedResult fixed_subgroup(const PresentedGroup& A, const std::vector<IntMatrix>& endos);

struct ChainComplex {
  std::vector<PresentedGroup> groups;  // degrees 0..N
  std::vector<IntMatrix> boundary;     // boundary[k] : C_k -> C_{k-1}; boundary[0] is empty

  int top() const { return static_cast<int>(groups.size()) - 1; }
  // Throws AlgebraError if some boundary is ill-defined or the square is nonzero.
  void validate() const;
};

FgAbelianGroup homology(const ChainComplex& C, int k);

}  // namespace eloday
