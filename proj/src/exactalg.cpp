#include "eloday/exactalg.hpp"

#include <algorithm>
#include <sstream>

namespace eloday {

namespace {

template <typename S>
struct Ops;

template <>
struct Ops<long long> {
  static long long add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow");
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow");
    return r;
  }
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow");
    return r;
  }
  static long long neg(long long a) { return sub(0, a); }
  static long long abs(long long a) { return a < 0 ? neg(a) : a; }
  static bool zero(long long a) { return a == 0; }
  static long long fdiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static bool divides(long long d, long long a) { return d == 0 ? a == 0 : a % d == 0; }
};

template <>
struct Ops<BigInt> {
  static BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
  static BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
  static BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
  static BigInt neg(const BigInt& a) { return -a; }
  static BigInt abs(const BigInt& a) { return eloday::abs(a); }
  static bool zero(const BigInt& a) { return a.is_zero(); }
  static BigInt fdiv(const BigInt& a, const BigInt& b) { return floor_div(a, b); }
  static bool divides(const BigInt& d, const BigInt& a) { return eloday::divides(d, a); }
};

// row_i -= q row_j
template <typename S>
void row_axpy(DenseMatrix<S>& M, int i, int j, const S& q, int from = 0) {
  using O = Ops<S>;
  for (int c = from; c < M.cols(); ++c)
    if (!O::zero(M(j, c))) M(i, c) = O::sub(M(i, c), O::mul(q, M(j, c)));
}

template <typename S>
void col_axpy(DenseMatrix<S>& M, int i, int j, const S& q, int from = 0) {
  using O = Ops<S>;
  for (int r = from; r < M.rows(); ++r)
    if (!O::zero(M(r, j))) M(r, i) = O::sub(M(r, i), O::mul(q, M(r, j)));
}

}  // namespace

template <typename Scalar>
std::vector<Scalar> SmithForm<Scalar>::diagonal() const {
  std::vector<Scalar> d;
  for (int i = 0; i < std::min<int>(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

template <typename Scalar>
SmithForm<Scalar> smith_normal_form_impl(DenseMatrix<Scalar> M, bool with_transforms) {
  using O = Ops<Scalar>;
  const int r = static_cast<int>(M.rows()), c = static_cast<int>(M.cols());
  SmithForm<Scalar> out;
  if (with_transforms) {
    out.U = DenseMatrix<Scalar>::Identity(r, r);
    out.V = DenseMatrix<Scalar>::Identity(c, c);
  }
  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    M.row(a).swap(M.row(b));
    if (with_transforms) out.U.row(a).swap(out.U.row(b));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    M.col(a).swap(M.col(b));
    if (with_transforms) out.V.col(a).swap(out.V.col(b));
  };
  int t = 0;
  for (; t < std::min(r, c); ++t) {
    // least nonzero |entry| in the trailing block, row-major ties
    int pi = -1, pj = -1;
    Scalar best{};
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j)
        if (!O::zero(M(i, j))) {
          Scalar a = O::abs(M(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < r; ++i) {
        if (O::zero(M(i, t))) continue;
        Scalar q = O::fdiv(M(i, t), M(t, t));
        row_axpy(M, i, t, q, t);
        if (with_transforms) row_axpy(out.U, i, t, q);
        if (!O::zero(M(i, t))) dirty = true;
      }
      for (int j = t + 1; j < c; ++j) {
        if (O::zero(M(t, j))) continue;
        Scalar q = O::fdiv(M(t, j), M(t, t));
        col_axpy(M, j, t, q, t);
        if (with_transforms) col_axpy(out.V, j, t, q);
        if (!O::zero(M(t, j))) dirty = true;
      }
      if (dirty) {
        // move the least remainder in row t or column t into the pivot
        int bi = t, bj = t;
        Scalar b = O::abs(M(t, t));
        for (int i = t + 1; i < r; ++i)
          if (!O::zero(M(i, t)) && O::abs(M(i, t)) < b) {
            b = O::abs(M(i, t));
            bi = i;
            bj = t;
          }
        for (int j = t + 1; j < c; ++j)
          if (!O::zero(M(t, j)) && O::abs(M(t, j)) < b) {
            b = O::abs(M(t, j));
            bi = t;
            bj = j;
          }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      int bad = -1;
      for (int i = t + 1; i < r && bad < 0; ++i)
        for (int j = t + 1; j < c; ++j)
          if (!O::divides(M(t, t), M(i, j))) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(M, t, bad, Scalar(-1), t);
      if (with_transforms) row_axpy(out.U, t, bad, Scalar(-1));
    }
    if (M(t, t) < Scalar(0)) {
      M.row(t) = -M.row(t);
      if (with_transforms) out.U.row(t) = -out.U.row(t);
    }
  }
  out.rank = t;
  out.D = std::move(M);
  return out;
}

template struct SmithForm<long long>;
template struct SmithForm<BigInt>;
template SmithForm<long long> smith_normal_form_impl<long long>(SmallMatrix, bool);
template SmithForm<BigInt> smith_normal_form_impl<BigInt>(IntMatrix, bool);

IntMatrix to_int_matrix(const SmallMatrix& M) {
  IntMatrix out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) out(i, j) = BigInt(M(i, j));
  return out;
}

std::optional<SmallMatrix> to_small_matrix(const IntMatrix& M) {
  SmallMatrix out(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
      if (!M(i, j).fits_int64()) return std::nullopt;
      out(i, j) = M(i, j).to_int64();
    }
  return out;
}

std::vector<BigInt> elementary_divisors(const IntMatrix& M) {
  if (auto small = to_small_matrix(M)) {
    try {
      auto S = smith_normal_form(*small, false);
      std::vector<BigInt> d;
      for (long long v : S.diagonal()) d.push_back(BigInt(v));
      return d;
    } catch (const OverflowError&) {
    }
  }
  return smith_normal_form(M, false).diagonal();
}

BigInt determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw AlgebraError("determinant of a non-square matrix");
  // Bareiss fraction-free elimination
  IntMatrix A = M;
  const int n = static_cast<int>(A.rows());
  if (n == 0) return BigInt(1);
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (A(k, k).is_zero()) {
      int p = k + 1;
      while (p < n && A(p, k).is_zero()) ++p;
      if (p == n) return BigInt(0);
      A.row(k).swap(A.row(p));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) A(i, j) = div_exact(A(i, j) * A(k, k) - A(i, k) * A(k, j), prev);
    prev = A(k, k);
  }
  return sign > 0 ? A(n - 1, n - 1) : -A(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& M) {
  if (M.rows() != M.cols()) return false;
  auto d = elementary_divisors(M);
  for (auto& x : d)
    if (x != BigInt(1)) return false;
  return true;
}

IntMatrix kernel_basis(const IntMatrix& M) {
  auto S = smith_normal_form(M, true);
  int c = static_cast<int>(M.cols());
  return S.V.rightCols(c - S.rank);
}

void Lattice::insert(IntVector v) {
  if (v.size() != dim_) throw AlgebraError("lattice vector has the wrong dimension");
  for (;;) {
    int p = 0;
    while (p < dim_ && v(p).is_zero()) ++p;
    if (p == dim_) return;
    auto it = std::lower_bound(pivot_.begin(), pivot_.end(), p);
    size_t k = static_cast<size_t>(it - pivot_.begin());
    if (it == pivot_.end() || *it != p) {
      if (v(p) < BigInt(0)) v = -v;
      pivot_.insert(it, p);
      basis_.insert(basis_.begin() + static_cast<long>(k), std::move(v));
      return;
    }
    IntVector& b = basis_[k];
    const BigInt a = b(p), c = v(p);
    if (divides(a, c)) {
      v -= div_exact(c, a) * b;
      continue;
    }
    // extended gcd: g = x a + y c
    mpz_class g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.mpz().get_mpz_t(), c.mpz().get_mpz_t());
    BigInt G(g), X(x), Y(y);
    IntVector nb = X * b + Y * v;
    IntVector nv = div_exact(c, G) * b - div_exact(a, G) * v;
    b = std::move(nb);
    v = std::move(nv);
  }
}

void Lattice::insert_columns(const IntMatrix& M) {
  for (Eigen::Index j = 0; j < M.cols(); ++j) insert(M.col(j));
}

IntMatrix Lattice::basis() const {
  IntMatrix B(dim_, rank());
  for (int k = 0; k < rank(); ++k) B.col(k) = basis_[k];
  return B;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  IntVector rest = v;
  IntVector x = IntVector::Constant(rank(), BigInt(0));
  for (int k = 0; k < rank(); ++k) {
    const BigInt& piv = basis_[k](pivot_[k]);
    if (!divides(piv, rest(pivot_[k]))) return std::nullopt;
    x(k) = div_exact(rest(pivot_[k]), piv);
    if (!x(k).is_zero()) rest -= x(k) * basis_[k];
  }
  for (int i = 0; i < dim_; ++i)
    if (!rest(i).is_zero()) return std::nullopt;
  return x;
}

IntMatrix image_basis(const IntMatrix& M) {
  Lattice L(static_cast<int>(M.rows()));
  L.insert_columns(M);
  return L.basis();
}

IntegerSolver::IntegerSolver(const IntMatrix& A) : snf_(smith_normal_form(A, true)), cols_(A.cols()) {}

std::optional<IntVector> IntegerSolver::solve(const IntVector& b) const {
  // A = U^-1 D V^-1, so A x = b iff D y = U b with x = V y.
  IntVector ub = snf_.U * b;
  IntVector y = IntVector::Constant(cols_, BigInt(0));
  for (int i = 0; i < ub.size(); ++i) {
    if (i < snf_.rank) {
      if (!divides(snf_.D(i, i), ub(i))) return std::nullopt;
      y(i) = div_exact(ub(i), snf_.D(i, i));
    } else if (!ub(i).is_zero()) {
      return std::nullopt;
    }
  }
  return IntVector(snf_.V * y);
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) { return IntegerSolver(A).solve(b); }

FgAbelianGroup::FgAbelianGroup(int free_rank, std::vector<BigInt> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0) throw AlgebraError("negative free rank");
  for (size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < BigInt(2)) throw AlgebraError("torsion coefficients must be at least 2");
    if (i > 0 && !divides(torsion_[i - 1], torsion_[i])) throw AlgebraError("torsion must form a divisibility chain");
  }
}

std::string FgAbelianGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << "^" << free_rank_;
    first = false;
  }
  for (auto& t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

PresentedGroup::PresentedGroup(int n, IntMatrix r) : ngens(n), rel(std::move(r)) {
  if (rel.rows() != n) throw AlgebraError("relation matrix has the wrong number of rows");
}

PresentedGroup PresentedGroup::free(int n) { return PresentedGroup(n, IntMatrix(n, 0)); }

PresentedGroup PresentedGroup::cyclic(const std::vector<BigInt>& orders) {
  int n = static_cast<int>(orders.size());
  std::vector<int> cols;
  for (int i = 0; i < n; ++i)
    if (!orders[i].is_zero()) cols.push_back(i);
  IntMatrix R = IntMatrix::Zero(n, static_cast<long>(cols.size()));
  for (size_t k = 0; k < cols.size(); ++k) R(cols[k], static_cast<long>(k)) = orders[cols[k]];
  return PresentedGroup(n, R);
}

PresentedGroup PresentedGroup::from(const FgAbelianGroup& A) {
  std::vector<BigInt> orders(A.free_rank(), BigInt(0));
  orders.insert(orders.end(), A.torsion().begin(), A.torsion().end());
  return cyclic(orders);
}

FgAbelianGroup PresentedGroup::canonical() const {
  auto d = elementary_divisors(rel);
  int rk = 0;
  std::vector<BigInt> tors;
  for (auto& x : d) {
    if (x.is_zero()) continue;
    ++rk;
    if (x != BigInt(1)) tors.push_back(x);
  }
  return FgAbelianGroup(ngens - rk, tors);
}

bool PresentedGroup::is_zero_element(const IntVector& v) const {
  bool all_zero = true;
  for (int i = 0; i < v.size(); ++i) all_zero = all_zero && v(i).is_zero();
  if (all_zero) return true;
  Lattice L(ngens);
  L.insert_columns(rel);
  return L.contains(v);
}

AbHom make_hom(const PresentedGroup& dom, const PresentedGroup& cod, const IntMatrix& matrix) {
  if (matrix.rows() != cod.ngens || matrix.cols() != dom.ngens) throw AlgebraError("hom matrix has wrong shape");
  AbHom f{dom, cod, matrix, IntMatrix::Zero(cod.rel.cols(), dom.rel.cols())};
  if (dom.rel.cols() == 0) return f;
  IntMatrix img = matrix * dom.rel;
  IntegerSolver solver(cod.rel);
  for (Eigen::Index j = 0; j < img.cols(); ++j) {
    auto y = solver.solve(img.col(j));
    if (!y) throw AlgebraError("matrix does not carry relations into relations");
    f.certificate.col(j) = *y;
  }
  return f;
}

bool hom_equal(const AbHom& f, const AbHom& g) {
  if (f.matrix.rows() != g.matrix.rows() || f.matrix.cols() != g.matrix.cols()) return false;
  IntMatrix d = f.matrix - g.matrix;
  Lattice L(f.codomain.ngens);
  L.insert_columns(f.codomain.rel);
  for (Eigen::Index j = 0; j < d.cols(); ++j)
    if (!L.contains(d.col(j))) return false;
  return true;
}

AbHom hom_compose(const AbHom& outer, const AbHom& inner) {
  return make_hom(inner.domain, outer.codomain, IntMatrix(outer.matrix * inner.matrix));
}

PresentedGroup tensor(const PresentedGroup& A, const PresentedGroup& B) {
  int na = A.ngens, nb = B.ngens;
  long nrel = A.rel.cols() * nb + B.rel.cols() * na;
  IntMatrix R = IntMatrix::Zero(na * nb, nrel);
  long col = 0;
  for (Eigen::Index k = 0; k < A.rel.cols(); ++k)
    for (int j = 0; j < nb; ++j, ++col)
      for (int i = 0; i < na; ++i) R(i * nb + j, col) = A.rel(i, k);
  for (Eigen::Index k = 0; k < B.rel.cols(); ++k)
    for (int i = 0; i < na; ++i, ++col)
      for (int j = 0; j < nb; ++j) R(i * nb + j, col) = B.rel(j, k);
  return PresentedGroup(na * nb, R);
}

FixedResult fixed_subgroup(const PresentedGroup& A, const std::vector<IntMatrix>& endos) {
  const int n = A.ngens;
  const long nr = A.rel.cols();
  for (auto& s : endos) make_hom(A, A, s);
  const long ns = static_cast<long>(endos.size());
  // x is fixed iff (s - 1) x = R y_s for every s.
  IntMatrix big = IntMatrix::Zero(n * ns, n + nr * ns);
  for (long k = 0; k < ns; ++k) {
    big.block(k * n, 0, n, n) = endos[k] - IntMatrix::Identity(n, n);
    big.block(k * n, n + k * nr, n, nr) = -A.rel;
  }
  Lattice L(n);
  if (ns == 0) {
    L.insert_columns(IntMatrix::Identity(n, n));
  } else {
    IntMatrix K = kernel_basis(big);
    L.insert_columns(K.topRows(n));
  }
  L.insert_columns(A.rel);
  IntMatrix B = L.basis();
  IntMatrix rel(B.cols(), nr);
  for (long j = 0; j < nr; ++j) {
    auto x = L.coordinates(A.rel.col(j));
    if (!x) throw AlgebraError("internal: relation outside the fixed lattice");
    rel.col(j) = *x;
  }
  return FixedResult{PresentedGroup(static_cast<int>(B.cols()), rel), B};
}

void ChainComplex::validate() const {
  if (boundary.size() != groups.size()) throw AlgebraError("chain complex needs one boundary slot per degree");
  for (int k = 1; k <= top(); ++k) {
    const auto& d = boundary[k];
    if (d.rows() != groups[k - 1].ngens || d.cols() != groups[k].ngens)
      throw AlgebraError("boundary " + std::to_string(k) + " has the wrong shape");
    make_hom(groups[k], groups[k - 1], d);
    if (k >= 2) {
      IntMatrix sq = boundary[k - 1] * d;
      for (Eigen::Index j = 0; j < sq.cols(); ++j)
        if (!groups[k - 2].is_zero_element(sq.col(j)))
          throw AlgebraError("boundary squared is nonzero in degree " + std::to_string(k));
    }
  }
}

FgAbelianGroup homology(const ChainComplex& C, int k) {
  if (k < 0 || k > C.top()) throw AlgebraError("homology degree out of range");
  C.validate();
  const auto& Ck = C.groups[k];
  const int n = Ck.ngens;
  // cycles: x with d x in the relations of C_{k-1}
  Lattice Z(n);
  if (k == 0) {
    Z.insert_columns(IntMatrix::Identity(n, n));
  } else {
    const auto& d = C.boundary[k];
    const auto& R = C.groups[k - 1].rel;
    IntMatrix big(d.rows(), n + R.cols());
    big << d, R;
    IntMatrix K = kernel_basis(big);
    Z.insert_columns(K.topRows(n));
  }
  // boundaries plus relations of C_k, in cycle coordinates
  std::vector<IntVector> gens;
  for (Eigen::Index j = 0; j < Ck.rel.cols(); ++j) gens.push_back(Ck.rel.col(j));
  if (k + 1 <= C.top()) {
    const auto& d = C.boundary[k + 1];
    for (Eigen::Index j = 0; j < d.cols(); ++j) gens.push_back(d.col(j));
  }
  IntMatrix coords(Z.rank(), static_cast<long>(gens.size()));
  for (size_t j = 0; j < gens.size(); ++j) {
    auto x = Z.coordinates(gens[j]);
    if (!x) throw AlgebraError("internal: boundary outside the cycles");
    coords.col(static_cast<long>(j)) = *x;
  }
  return PresentedGroup(Z.rank(), coords).canonical();
}

IntMatrix unimodular_inverse(const IntMatrix& M) {
  if (!is_unimodular(M)) throw AlgebraError("matrix is not unimodular");
  const long n = M.rows();
  IntMatrix inv(n, n);
  IntegerSolver solver(M);
  for (long j = 0; j < n; ++j) {
    IntVector e = IntVector::Constant(n, BigInt(0));
    e(j) = BigInt(1);
    auto x = solver.solve(e);
    if (!x) throw AlgebraError("matrix is not unimodular");
    inv.col(j) = *x;
  }
  return inv;
}

}  // namespace eloday
