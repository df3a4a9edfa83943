#include "eloday/ring.hpp"

#include <numeric>
#include <sstream>

namespace eloday {

namespace {

long long mod_reduce(long long v, long long o) {
  if (o == 0) return v;
  v %= o;
  return v < 0 ? v + o : v;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("ring coefficient overflow");
  return r;
}

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("ring coefficient overflow");
  return r;
}

IntVector unit_vec(int n, int i) {
  IntVector v = IntVector::Constant(n, BigInt(0));
  v(i) = BigInt(1);
  return v;
}

// Solve e b = a modulo c (c = 0 means over Z).
BigInt solve_congruence(const BigInt& e, const BigInt& a, const BigInt& c) {
  if (c.is_zero()) {
    if (e.is_zero()) {
      if (!a.is_zero()) throw RingError("internal: unit does not split off");
      return BigInt(0);
    }
    return div_exact(a, e);
  }
  mpz_class g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), e.mpz().get_mpz_t(), c.mpz().get_mpz_t());
  BigInt G(g);
  if (!divides(G, a)) throw RingError("internal: unit does not split off");
  return floor_mod(BigInt(x) * div_exact(a, G), c);
}

}  // namespace

const char* kind_name(MapKind k) {
  switch (k) {
    case MapKind::Hom:
      return "hom";
    case MapKind::AntiHom:
      return "antihom";
    default:
      return "additive";
  }
}

std::shared_ptr<const Ring> Ring::make(const RingPresentation& p) {
  const int n = static_cast<int>(p.generators.size());
  if (p.relations.rows() != n) throw RingError("relation matrix must have one row per generator");
  if (static_cast<int>(p.mult.size()) != n) throw RingError("multiplication table must be n x n");
  for (auto& row : p.mult) {
    if (static_cast<int>(row.size()) != n) throw RingError("multiplication table must be n x n");
    for (auto& v : row)
      if (v.size() != n) throw RingError("product vectors must have one entry per generator");
  }
  if (p.unit.size() != n) throw RingError("unit vector has the wrong length");
  auto R = std::shared_ptr<Ring>(new Ring());
  R->name_ = p.name;
  R->pres_ = p;

  // Step 1: cyclic decomposition of the additive group.
  auto S = smith_normal_form(p.relations, true);
  IntMatrix Uinv = unimodular_inverse(S.U);
  std::vector<int> keep;
  std::vector<BigInt> ord;
  for (int i = 0; i < n; ++i) {
    BigInt d = i < S.rank ? S.D(i, i) : BigInt(0);
    if (d == BigInt(1)) continue;
    keep.push_back(i);
    ord.push_back(d);
  }
  const int k = static_cast<int>(keep.size());
  if (k == 0) throw RingError("the zero ring is not supported");
  IntMatrix Ck(k, n), Ckinv(n, k);  // presentation -> cyclic, cyclic -> presentation
  for (int a = 0; a < k; ++a) {
    Ck.row(a) = S.U.row(keep[a]);
    Ckinv.col(a) = Uinv.col(keep[a]);
  }
  auto cyc_reduce = [&](IntVector v) {
    for (int a = 0; a < k; ++a)
      if (!ord[a].is_zero()) v(a) = floor_mod(v(a), ord[a]);
    return v;
  };
  IntVector u = cyc_reduce(Ck * p.unit);

  // Step 2: quotient by the unit, lift its generators, complement of <1>.
  IntMatrix P = IntMatrix::Zero(k, k + 1);
  for (int a = 0; a < k; ++a) P(a, a) = ord[a];
  P.col(k) = u;
  auto Q = smith_normal_form(P, true);
  IntMatrix Qinv = unimodular_inverse(Q.U);
  BigInt unit_order(0);
  {
    // order of u: least c > 0 with c u = 0, or 0
    BigInt c(0);
    bool finite = true;
    for (int a = 0; a < k; ++a) {
      if (u(a).is_zero()) continue;
      if (ord[a].is_zero()) {
        finite = false;
        break;
      }
      BigInt oa = div_exact(ord[a], gcd(ord[a], u(a)));
      c = c.is_zero() ? oa : div_exact(c * oa, gcd(c, oa));
    }
    bool any = false;
    for (int a = 0; a < k; ++a) any = any || !u(a).is_zero();
    if (!any) throw RingError("unit is zero");
    unit_order = finite ? c : BigInt(0);
  }
  std::vector<IntVector> newb{u};
  std::vector<BigInt> neword{unit_order};
  for (int j = 0; j < k; ++j) {
    BigInt e = j < Q.rank ? Q.D(j, j) : BigInt(0);
    if (e == BigInt(1)) continue;
    IntVector w = Qinv.col(j);
    BigInt a = !e.is_zero() ? BigInt(Q.V(k, j)) : BigInt(0);
    BigInt b = solve_congruence(e, a, unit_order);
    newb.push_back(cyc_reduce(w - b * u));
    neword.push_back(e);
  }
  const int r = static_cast<int>(newb.size());
  IntMatrix B(k, r);
  for (int a = 0; a < r; ++a) B.col(a) = newb[a];
  // inverse: coordinates of each cyclic generator in the new basis
  IntMatrix Bfull(k, r + k);
  Bfull << B, P.leftCols(k);
  IntMatrix Binv(r, k);
  for (int a = 0; a < k; ++a) {
    auto x = solve_integer(Bfull, unit_vec(k, a));
    if (!x) throw RingError("internal: normalized basis does not span");
    Binv.col(a) = x->head(r);
  }
  R->orders_.resize(r);
  for (int a = 0; a < r; ++a) {
    if (!neword[a].fits_int64()) throw RingError("additive order too large");
    R->orders_[a] = neword[a].to_int64();
  }
  R->to_basis_ = Binv * Ck;
  R->from_basis_ = Ckinv * B;

  // Step 3: structure constants.
  auto pres_mul = [&](const IntVector& x, const IntVector& y) {
    IntVector z = IntVector::Constant(n, BigInt(0));
    for (int i = 0; i < n; ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!y(j).is_zero()) z += (x(i) * y(j)) * p.mult[i][j];
    }
    return z;
  };
  R->table_.resize(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      R->table_[i * r + j] = R->from_presentation(pres_mul(R->from_basis_.col(i), R->from_basis_.col(j)));
  for (int a = 0; a < r; ++a) {
    std::ostringstream os;
    if (a == 0) {
      os << "1";
    } else {
      IntVector v = R->from_basis_.col(a);
      bool first = true;
      for (int i = 0; i < n; ++i) {
        if (v(i).is_zero()) continue;
        if (!first && v(i) > BigInt(0)) os << "+";
        if (v(i) == BigInt(-1))
          os << "-";
        else if (v(i) != BigInt(1))
          os << v(i);
        os << p.generators[i];
        first = false;
      }
    }
    R->basis_names_.push_back(os.str());
  }
  R->commutative_ = true;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!R->equal(R->product(i, j), R->product(j, i))) R->commutative_ = false;
  if (p.involution) {
    if (p.involution->rows() != n || p.involution->cols() != n) throw RingError("involution must be n x n");
    SmallMatrix iv(r, r);
    for (int a = 0; a < r; ++a) {
      Coeffs c = R->from_presentation(*p.involution * R->from_basis_.col(a));
      for (int b = 0; b < r; ++b) iv(b, a) = c[b];
    }
    R->involution_ = iv;
  }
  auto chk = check_ring(*R);
  if (!chk.ok) throw RingError(p.name + ": " + chk.message);
  if (p.commutative && *p.commutative != R->commutative_)
    throw RingError(p.name + ": commutative flag does not match the multiplication table");
  return R;
}

std::shared_ptr<const Ring> Ring::integers_mod(long long n) {
  RingPresentation p;
  p.name = n == 0 ? "Z" : "Z/" + std::to_string(n);
  p.generators = {"1"};
  p.relations = n == 0 ? IntMatrix(1, 0) : IntMatrix::Constant(1, 1, BigInt(n));
  p.mult = {{IntVector::Constant(1, BigInt(1))}};
  p.unit = IntVector::Constant(1, BigInt(1));
  return make(p);
}

bool Ring::all_free() const {
  for (auto o : orders_)
    if (o != 0) return false;
  return true;
}

long long Ring::prime_order() const {
  long long p = orders_[0];
  if (p < 2) return 0;
  for (auto o : orders_)
    if (o != p) return 0;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return 0;
  return p;
}

Coeffs Ring::one() const { return basis(0); }

Coeffs Ring::basis(int k) const {
  Coeffs c(rank(), 0);
  c[k] = 1;
  reduce(c);
  return c;
}

Coeffs Ring::mul(const Coeffs& a, const Coeffs& b) const {
  const int r = rank();
  Coeffs out(r, 0);
  for (int i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < r; ++j) {
      if (b[j] == 0) continue;
      long long s = checked_mul(a[i], b[j]);
      const Coeffs& p = table_[i * r + j];
      for (int t = 0; t < r; ++t)
        if (p[t]) out[t] = reduce(t, checked_add(out[t], checked_mul(s, p[t])));
    }
  }
  return out;
}

Coeffs Ring::add(const Coeffs& a, const Coeffs& b) const {
  Coeffs out(rank());
  for (int t = 0; t < rank(); ++t) out[t] = reduce(t, checked_add(a[t], b[t]));
  return out;
}

Coeffs Ring::scale(long long c, const Coeffs& a) const {
  Coeffs out(rank());
  for (int t = 0; t < rank(); ++t) out[t] = reduce(t, checked_mul(c, a[t]));
  return out;
}

void Ring::reduce(Coeffs& v) const {
  for (int t = 0; t < rank(); ++t) v[t] = mod_reduce(v[t], orders_[t]);
}

long long Ring::reduce(int k, long long v) const { return mod_reduce(v, orders_[k]); }

bool Ring::equal(const Coeffs& a, const Coeffs& b) const {
  for (int t = 0; t < rank(); ++t)
    if (mod_reduce(a[t] - b[t], orders_[t]) != 0) return false;
  return true;
}

bool Ring::is_zero(const Coeffs& a) const {
  for (int t = 0; t < rank(); ++t)
    if (mod_reduce(a[t], orders_[t]) != 0) return false;
  return true;
}

PresentedGroup Ring::additive() const {
  std::vector<BigInt> o;
  for (auto x : orders_) o.push_back(BigInt(x));
  return PresentedGroup::cyclic(o);
}

Coeffs Ring::from_presentation(const IntVector& x) const {
  IntVector y = to_basis_ * x;
  Coeffs c(rank());
  for (int t = 0; t < rank(); ++t) {
    BigInt v = orders_[t] ? floor_mod(y(t), BigInt(orders_[t])) : y(t);
    c[t] = v.to_int64();
  }
  return c;
}

IntVector Ring::to_presentation(const Coeffs& c) const {
  IntVector v(rank());
  for (int t = 0; t < rank(); ++t) v(t) = BigInt(c[t]);
  return from_basis_ * v;
}

std::string Ring::format(const Coeffs& c) const {
  std::ostringstream os;
  bool first = true;
  for (int t = 0; t < rank(); ++t) {
    if (c[t] == 0) continue;
    if (!first) os << " + ";
    if (c[t] != 1 || t == 0) os << c[t];
    if (t > 0) os << (c[t] != 1 ? "*" : "") << basis_names_[t];
    first = false;
  }
  return first ? "0" : os.str();
}

MapKind compose_kind(MapKind outer, MapKind inner) {
  if (outer == MapKind::Additive || inner == MapKind::Additive) return MapKind::Additive;
  return outer == inner ? MapKind::Hom : MapKind::AntiHom;
}

Coeffs apply(const Transform& t, const Coeffs& x) {
  const int rd = t.dom->rank(), rc = t.cod->rank();
  Coeffs out(rc, 0);
  for (int j = 0; j < rd; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < rc; ++i)
      if (t.m(i, j)) out[i] = t.cod->reduce(i, checked_add(out[i], checked_mul(x[j], t.m(i, j))));
  }
  return out;
}

RingCheck check_transform(const Transform& t) {
  const auto& D = *t.dom;
  const auto& C = *t.cod;
  std::ostringstream os;
  if (t.m.rows() != C.rank() || t.m.cols() != D.rank()) return {false, "transform matrix has the wrong shape"};
  for (int j = 0; j < D.rank(); ++j) {
    Coeffs col(C.rank());
    for (int i = 0; i < C.rank(); ++i) col[i] = t.m(i, j);
    if (D.order(j) && !C.is_zero(C.scale(D.order(j), col))) {
      os << "image of " << D.basis_name(j) << " is not killed by its order " << D.order(j);
      return {false, os.str()};
    }
  }
  if (t.kind == MapKind::Additive) return {};
  if (!C.equal(eloday::apply(t, D.one()), C.one())) return {false, "transform does not preserve 1"};
  for (int i = 0; i < D.rank(); ++i)
    for (int j = 0; j < D.rank(); ++j) {
      Coeffs lhs = eloday::apply(t, D.product(i, j));
      Coeffs a = eloday::apply(t, D.basis(i)), b = eloday::apply(t, D.basis(j));
      Coeffs rhs = t.kind == MapKind::Hom ? C.mul(a, b) : C.mul(b, a);
      if (!C.equal(lhs, rhs)) {
        os << "transform is not " << (t.kind == MapKind::Hom ? "multiplicative" : "anti-multiplicative") << " on ("
           << D.basis_name(i) << ", " << D.basis_name(j) << ")";
        return {false, os.str()};
      }
    }
  return {};
}

TransformPtr make_transform(RingPtr dom, RingPtr cod, SmallMatrix m, MapKind kind, std::string label) {
  auto t = std::make_shared<Transform>();
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  t->m = std::move(m);
  t->kind = kind;
  t->label = std::move(label);
  for (int i = 0; i < t->m.rows(); ++i)
    for (int j = 0; j < t->m.cols(); ++j) t->m(i, j) = t->cod->reduce(i, t->m(i, j));
  auto chk = check_transform(*t);
  if (!chk.ok) throw RingError((t->label.empty() ? "" : t->label + ": ") + chk.message);
  return t;
}

TransformPtr identity_transform(const RingPtr& R) {
  return make_transform(R, R, SmallMatrix::Identity(R->rank(), R->rank()), MapKind::Hom, "id");
}

TransformPtr compose(const TransformPtr& outer, const TransformPtr& inner) {
  if (!outer) return inner;
  if (!inner) return outer;
  if (inner->cod.get() != outer->dom.get()) throw RingError("transforms do not compose");
  auto t = std::make_shared<Transform>();
  t->dom = inner->dom;
  t->cod = outer->cod;
  t->kind = compose_kind(outer->kind, inner->kind);
  t->m = SmallMatrix(outer->cod->rank(), inner->dom->rank());
  for (int j = 0; j < inner->dom->rank(); ++j) {
    Coeffs col = eloday::apply(*outer, eloday::apply(*inner, inner->dom->basis(j)));
    for (int i = 0; i < outer->cod->rank(); ++i) t->m(i, j) = col[i];
  }
  if (!outer->label.empty() || !inner->label.empty()) t->label = outer->label + "." + inner->label;
  if (t->dom.get() == t->cod.get() && t->m == SmallMatrix::Identity(t->dom->rank(), t->dom->rank()))
    return nullptr;
  return t;
}

bool is_identity(const TransformPtr& t) {
  if (!t) return true;
  if (t->dom.get() != t->cod.get()) return false;
  return t->m == SmallMatrix::Identity(t->dom->rank(), t->dom->rank());
}

bool transform_equal(const TransformPtr& a, const TransformPtr& b, const RingPtr& dom) {
  for (int j = 0; j < dom->rank(); ++j) {
    Coeffs x = dom->basis(j);
    Coeffs ya = a ? eloday::apply(*a, x) : x;
    Coeffs yb = b ? eloday::apply(*b, x) : x;
    const RingPtr& cod = a ? a->cod : (b ? b->cod : dom);
    if (!cod->equal(ya, yb)) return false;
  }
  return true;
}

RingCheck check_ring(const Ring& R) {
  const int r = R.rank();
  std::ostringstream os;
  for (int k = 0; k < r; ++k)
    if (R.order(k)) {
      // products must respect the additive orders
      for (int j = 0; j < r; ++j) {
        if (!R.is_zero(R.scale(R.order(k), R.product(k, j))) || !R.is_zero(R.scale(R.order(k), R.product(j, k)))) {
          os << "multiplication is not well defined on " << R.basis_name(k);
          return {false, os.str()};
        }
      }
    }
  for (int i = 0; i < r; ++i) {
    if (!R.equal(R.product(0, i), R.basis(i)) || !R.equal(R.product(i, 0), R.basis(i)))
      return {false, "unit is not two-sided on " + R.basis_name(i)};
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        Coeffs lhs = R.mul(R.product(i, j), R.basis(k));
        Coeffs rhs = R.mul(R.basis(i), R.product(j, k));
        if (!R.equal(lhs, rhs)) {
          os << "multiplication is not associative on (" << R.basis_name(i) << ", " << R.basis_name(j) << ", "
             << R.basis_name(k) << ")";
          return {false, os.str()};
        }
      }
  if (R.involution()) {
    auto raw = std::make_shared<Transform>();
    // non-owning view, only used to apply the matrix
    std::shared_ptr<const Ring> self(&R, [](const Ring*) {});
    raw->dom = self;
    raw->cod = self;
    raw->m = *R.involution();
    raw->kind = MapKind::AntiHom;
    auto chk = check_transform(*raw);
    if (!chk.ok) return {false, "involution: " + chk.message};
    for (int i = 0; i < r; ++i)
      if (!R.equal(eloday::apply(*raw, eloday::apply(*raw, R.basis(i))), R.basis(i)))
        return {false, "involution does not square to the identity on " + R.basis_name(i)};
  }
  return {};
}

namespace {

RingPresentation base_presentation(std::string name, std::vector<std::string> gens, std::vector<long> orders) {
  RingPresentation p;
  p.name = std::move(name);
  p.generators = std::move(gens);
  int n = static_cast<int>(p.generators.size());
  std::vector<int> cols;
  for (int i = 0; i < n; ++i)
    if (orders[i]) cols.push_back(i);
  p.relations = IntMatrix::Zero(n, static_cast<long>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) p.relations(cols[c], static_cast<long>(c)) = BigInt(orders[cols[c]]);
  p.mult.assign(n, std::vector<IntVector>(n, IntVector::Constant(n, BigInt(0))));
  p.unit = unit_vec(n, 0);
  return p;
}

void set_product(RingPresentation& p, int i, int j, std::vector<long> v) {
  for (size_t t = 0; t < v.size(); ++t) p.mult[i][j](static_cast<long>(t)) = BigInt(v[t]);
}

IntMatrix small_to_int(std::initializer_list<std::initializer_list<long>> rows) {
  int r = static_cast<int>(rows.size());
  IntMatrix M(r, r);
  int i = 0;
  for (auto& row : rows) {
    int j = 0;
    for (long v : row) M(i, j++) = BigInt(v);
    ++i;
  }
  return M;
}

}  // namespace

RingPtr ring_sign(long long n) {
  auto p = base_presentation(n == 0 ? "Z[t]/(t^2-1)" : "Z/" + std::to_string(n) + "[t]/(t^2-1)", {"1", "t"},
                             {static_cast<long>(n), static_cast<long>(n)});
  set_product(p, 0, 0, {1, 0});
  set_product(p, 0, 1, {0, 1});
  set_product(p, 1, 0, {0, 1});
  set_product(p, 1, 1, {1, 0});
  return Ring::make(p);
}

RingPtr ring_gaussian() {
  auto p = base_presentation("Z[i]", {"1", "i"}, {0, 0});
  set_product(p, 0, 0, {1, 0});
  set_product(p, 0, 1, {0, 1});
  set_product(p, 1, 0, {0, 1});
  set_product(p, 1, 1, {-1, 0});
  p.involution = small_to_int({{1, 0}, {0, -1}});
  return Ring::make(p);
}

RingPtr ring_group_ring_z2_c2() {
  auto p = base_presentation("Z/2[C2]", {"1", "u"}, {2, 2});
  set_product(p, 0, 0, {1, 0});
  set_product(p, 0, 1, {0, 1});
  set_product(p, 1, 0, {0, 1});
  set_product(p, 1, 1, {1, 0});
  p.involution = small_to_int({{1, 0}, {0, 1}});
  return Ring::make(p);
}

RingPtr ring_lipschitz() {
  auto p = base_presentation("Z<i,j,k>", {"1", "i", "j", "k"}, {0, 0, 0, 0});
  // i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j
  const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      std::vector<long> v(4, 0);
      v[idx[a][b]] = sgn[a][b];
      set_product(p, a, b, v);
    }
  p.involution = small_to_int({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}});
  return Ring::make(p);
}

RingPtr ring_upper_triangular_f2() {
  // basis 1 = e11 + e22, a = e11, b = e12 with a^2 = a, ab = b, ba = 0, b^2 = 0
  auto p = base_presentation("T2(F2)", {"1", "a", "b"}, {2, 2, 2});
  for (int j = 0; j < 3; ++j) {
    std::vector<long> v(3, 0);
    v[j] = 1;
    set_product(p, 0, j, v);
    set_product(p, j, 0, v);
  }
  set_product(p, 1, 1, {0, 1, 0});
  set_product(p, 1, 2, {0, 0, 1});
  set_product(p, 2, 1, {0, 0, 0});
  set_product(p, 2, 2, {0, 0, 0});
  // X -> J X^T J swaps e11 and e22 and fixes e12: a -> 1 - a, b -> b
  p.involution = small_to_int({{1, 1, 0}, {0, -1, 0}, {0, 0, 1}});
  return Ring::make(p);
}

RingPtr ring_dual_numbers(long long q) {
  auto p = base_presentation("Z/" + std::to_string(q) + "[x]/(x^2)", {"1", "x"},
                             {static_cast<long>(q), static_cast<long>(q)});
  set_product(p, 0, 0, {1, 0});
  set_product(p, 0, 1, {0, 1});
  set_product(p, 1, 0, {0, 1});
  set_product(p, 1, 1, {0, 0});
  return Ring::make(p);
}

RingPtr ring_split(int n, long long q) {
  if (n < 1) throw RingError("split ring needs n >= 1");
  std::vector<std::string> gens;
  for (int i = 0; i < n; ++i) gens.push_back("e" + std::to_string(i + 1));
  std::string base = q ? "Z/" + std::to_string(q) : "Z";
  auto p = base_presentation(base + "^" + std::to_string(n), gens, std::vector<long>(n, static_cast<long>(q)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<long> v(n, 0);
      if (a == b) v[a] = 1;
      set_product(p, a, b, v);
    }
  p.unit = IntVector::Constant(n, BigInt(1));
  return Ring::make(p);
}

TransformPtr transform_from_presentation(RingPtr dom, RingPtr cod, const IntMatrix& m, MapKind kind,
                                         std::string label) {
  const auto& pd = dom->presentation();
  if (m.cols() != static_cast<long>(pd.generators.size()) ||
      m.rows() != static_cast<long>(cod->presentation().generators.size()))
    throw RingError("transform matrix has the wrong shape");
  SmallMatrix out(cod->rank(), dom->rank());
  for (int k = 0; k < dom->rank(); ++k) {
    IntVector img = m * dom->to_presentation(dom->basis(k));
    Coeffs c = cod->from_presentation(img);
    for (int a = 0; a < cod->rank(); ++a) out(a, k) = c[a];
  }
  return make_transform(std::move(dom), std::move(cod), std::move(out), kind, std::move(label));
}

}  // namespace eloday
