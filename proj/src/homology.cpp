#include "eloday/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace eloday {

namespace {

long long fmod_ll(long long v, long long o) {
  if (o == 0) return v;
  v %= o;
  return v < 0 ? v + o : v;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_inverse(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = fmod_ll(a, p);
  while (nr) {
    const long long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  return fmod_ll(t, p);
}

std::vector<Elem> subgroup_generators(const Subgroup& K) {
  std::vector<Elem> gens;
  Subgroup span = trivial_subgroup(K.parent());
  for (Elem k : K.members())
    if (!span.contains(k)) {
      gens.push_back(k);
      span = generated_subgroup(K.parent(), gens);
    }
  return gens;
}

// Slots of level n left empty by s_j, after checking s_j only inserts units.
std::vector<std::vector<int>> insertion_slots(const SimplicialGRing& S, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  for (size_t j = 0; j < S.degens[n - 1].size(); ++j) {
    const Wiring& w = S.degens[n - 1][j].w;
    std::vector<int> empty;
    for (size_t t = 0; t < w.out.size(); ++t) {
      if (w.out[t].empty()) {
        empty.push_back(static_cast<int>(t));
        continue;
      }
      if (w.out[t].size() > 1) throw AlgebraError("degeneracy s_" + std::to_string(j) + " merges slots");
    }
    if (!wiring_is_monomial(w))
      throw AlgebraError("degeneracy s_" + std::to_string(j) + " on level " + std::to_string(n - 1) +
                         " is not a monomial insertion");
    out.push_back(std::move(empty));
  }
  return out;
}

SparseMatrix restrict_matrix(const SparseMatrix& M, const std::vector<int>& cols, const std::vector<int>& row_index,
                             int nrows) {
  SparseMatrix R;
  R.rows = nrows;
  R.cols.reserve(cols.size());
  for (int c : cols) {
    std::vector<std::pair<int, long long>> col;
    for (auto& [r, v] : M.cols[c])
      if (row_index[r] >= 0) col.push_back({row_index[r], v});
    R.cols.push_back(std::move(col));
  }
  return R;
}

IntMatrix dense_of(const SparseMatrix& M) { return M.dense(); }

IntMatrix diag_orders(const std::vector<long long>& o) {
  std::vector<int> nz;
  for (size_t i = 0; i < o.size(); ++i)
    if (o[i]) nz.push_back(static_cast<int>(i));
  IntMatrix D = IntMatrix::Zero(static_cast<long>(o.size()), static_cast<long>(nz.size()));
  for (size_t k = 0; k < nz.size(); ++k) D(nz[k], static_cast<long>(k)) = BigInt(o[nz[k]]);
  return D;
}

PresentedGroup cyclic_of(const std::vector<long long>& o) {
  std::vector<BigInt> b;
  for (long long x : o) b.emplace_back(x);
  return PresentedGroup::cyclic(b);
}

IntMatrix hcat(const IntMatrix& A, const IntMatrix& B) {
  IntMatrix C(A.rows(), A.cols() + B.cols());
  C << A, B;
  return C;
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<Elem> m;
  for (Elem x : A.members())
    if (B.contains(x)) m.push_back(x);
  return Subgroup(A.parent(), m);
}

}  // namespace

// ---------------------------------------------------------------- fixed levels

TensorElem FixedLevel::vector(int g) const {
  if (dense) return dense_vectors[g];
  if (members.empty()) return {{base[g], c0[g]}};
  TensorElem x;
  const long long o = V.order(base[g]);
  for (long long i = offset[g]; i < offset[g + 1]; ++i) x.push_back({members[i], fmod_ll(c0[g] * weights[i], o)});
  return tensor_normalize(V, std::move(x));
}

std::vector<std::pair<int, long long>> FixedLevel::coordinates(const TensorElem& x) const {
  std::vector<std::pair<int, long long>> out;
  if (dense) {
    std::vector<BigInt> acc(base.size(), BigInt(0));
    for (auto& [m, c] : x)
      for (auto& [g, q] : qcol[m]) acc[g] += q * BigInt(c);
    for (int g = 0; g < size(); ++g) {
      if (acc[g].is_zero()) continue;
      if (!divides(qscale, acc[g])) throw AlgebraError("element is not fixed");
      BigInt v = div_exact(acc[g], qscale);
      if (order[g]) v = floor_mod(v, BigInt(order[g]));
      if (!v.is_zero()) out.push_back({g, v.to_int64()});
    }
    return out;
  }
  for (auto& [m, c] : x) {
    int g = gen_of[m];
    if (g < 0) continue;
    if (c % c0[g] != 0) throw AlgebraError("element is not fixed at monomial " + V.format_mono(m));
    long long v = fmod_ll(c / c0[g], order[g]);
    if (v) out.push_back({g, v});
  }
  return out;
}

namespace {

void dense_fixed_level(FixedLevel& F, const GRing& L, const HomologyLimits& lim) {
  const long long dim = F.V.dim();
  if (dim > lim.dense_fixed_dim)
    throw AlgebraError("action on level " + std::to_string(F.n) + " is not monomial and the level has " +
                       std::to_string(dim) + " monomials, over the dense limit " + std::to_string(lim.dense_fixed_dim));
  const int d = static_cast<int>(dim);
  std::vector<long long> mono(d);
  for (int m = 0; m < d; ++m) mono[m] = F.V.order(m);
  F.dense = true;
  F.qcol.assign(static_cast<size_t>(d), {});
  long long p = mono.empty() ? 0 : mono[0];
  for (long long o : mono)
    if (o != p) p = 0;
  if (p > 1 && is_prime(p)) {
    // kernel of the stacked (g - 1) over F_p in reduced echelon form; the free
    // monomials read off the coordinates
    std::vector<std::vector<long long>> rows;
    for (Elem g : subgroup_generators(F.K)) {
      std::vector<std::vector<long long>> E(d, std::vector<long long>(d, 0));
      for (int m = 0; m < d; ++m) {
        for (auto& [m2, c] : apply_mono(L.action(g), F.V, F.V, m)) E[m2][m] = fmod_ll(c, p);
        E[m][m] = fmod_ll(E[m][m] - 1, p);
      }
      for (auto& r : E) rows.push_back(std::move(r));
    }
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (int c = 0; c < d && rank < rows.size(); ++c) {
      size_t r = rank;
      while (r < rows.size() && rows[r][c] == 0) ++r;
      if (r == rows.size()) continue;
      std::swap(rows[r], rows[rank]);
      const long long inv = mod_inverse(rows[rank][c], p);
      for (auto& v : rows[rank]) v = v * inv % p;
      for (size_t q = 0; q < rows.size(); ++q) {
        if (q == rank || rows[q][c] == 0) continue;
        const long long f = rows[q][c];
        for (int x = c; x < d; ++x) rows[q][x] = fmod_ll(rows[q][x] - f * rows[rank][x], p);
      }
      pivot_col.push_back(c);
      ++rank;
    }
    std::vector<char> is_pivot(d, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    F.qscale = BigInt(1);
    for (int fcol = 0; fcol < d; ++fcol) {
      if (is_pivot[fcol]) continue;
      TensorElem x{{fcol, 1}};
      for (size_t r = 0; r < pivot_col.size(); ++r)
        if (rows[r][fcol]) x.push_back({pivot_col[r], fmod_ll(-rows[r][fcol], p)});
      const int g = F.size();
      F.dense_vectors.push_back(tensor_normalize(F.V, std::move(x)));
      F.base.push_back(-1);
      F.c0.push_back(1);
      F.order.push_back(p);
      F.degenerate.push_back(0);
      F.qcol[fcol].push_back({g, BigInt(1)});
    }
    return;
  }
  std::vector<IntMatrix> endos;
  for (Elem g : subgroup_generators(F.K)) {
    IntMatrix E = IntMatrix::Zero(d, d);
    for (int m = 0; m < d; ++m)
      for (auto& [m2, c] : apply_mono(L.action(g), F.V, F.V, m)) E(static_cast<long>(m2), m) = BigInt(c);
    endos.push_back(E);
  }
  auto fr = fixed_subgroup(cyclic_of(mono), endos);
  const long f = fr.inclusion.cols();
  // cyclic decomposition U rel V = D of the fixed group
  auto rs = smith_normal_form(fr.fixed.rel, true);
  IntMatrix gens = fr.inclusion * unimodular_inverse(rs.U);
  // inclusion has full column rank: a = V2 D2^-1 (U2 x)_top
  auto is = smith_normal_form(fr.inclusion, true);
  BigInt l(1);
  for (int i = 0; i < is.rank; ++i) l = div_exact(l, gcd(l, is.D(i, i))) * is.D(i, i);
  IntMatrix top = is.U.topRows(is.rank);
  for (int i = 0; i < is.rank; ++i) top.row(i) *= div_exact(l, is.D(i, i));
  IntMatrix Q = rs.U * (is.V.leftCols(is.rank) * top);
  F.qscale = l;
  for (long i = 0; i < f; ++i) {
    const BigInt ord = i < rs.rank ? rs.D(i, i) : BigInt(0);
    if (ord == BigInt(1)) continue;
    const int g = F.size();
    TensorElem x;
    for (int m = 0; m < d; ++m) {
      BigInt v = gens(m, i);
      if (mono[m]) v = floor_mod(v, BigInt(mono[m]));
      if (!v.is_zero()) x.push_back({m, v.to_int64()});
    }
    F.dense_vectors.push_back(tensor_normalize(F.V, std::move(x)));
    F.base.push_back(-1);
    F.c0.push_back(1);
    F.order.push_back(ord.to_int64());
    F.degenerate.push_back(0);
    for (int m = 0; m < d; ++m)
      if (!Q(i, m).is_zero()) F.qcol[m].push_back({g, Q(i, m)});
  }
}

}  // namespace

FixedLevel fixed_level(const SimplicialGRing& S, const Subgroup& K, int n, const HomologyLimits& lim) {
  if (n < 0 || n > S.N) throw AlgebraError("level " + std::to_string(n) + " beyond the truncation");
  const GRing& L = *S.levels[n];
  if (!is_subgroup_of(K, L.acting)) throw AlgebraError("subgroup " + K.label() + " does not act on level " + std::to_string(n));
  FixedLevel F;
  F.K = K;
  F.n = n;
  F.V = L.space();
  const long long dim = F.V.dim();
  if (dim > lim.max_monomials)
    throw AlgebraError("level " + std::to_string(n) + " has " + std::to_string(dim) + " monomials, over the limit " +
                       std::to_string(lim.max_monomials));
  const auto ins = insertion_slots(S, n);
  auto is_degenerate = [&](long long m) {
    for (auto& E : ins) {
      bool all0 = true;
      for (int t : E)
        if (F.V.digit(m, t) != 0) {
          all0 = false;
          break;
        }
      if (all0) return true;
    }
    return false;
  };
  F.gen_of.assign(static_cast<size_t>(dim), -1);
  auto add_gen = [&](long long b, long long c0, long long ord) {
    if (static_cast<long long>(F.base.size()) >= lim.max_generators)
      throw AlgebraError("level " + std::to_string(n) + " has more than " + std::to_string(lim.max_generators) +
                         " fixed generators");
    F.gen_of[b] = static_cast<int>(F.base.size());
    F.base.push_back(b);
    F.c0.push_back(c0);
    F.order.push_back(ord);
    F.degenerate.push_back(is_degenerate(b) ? 1 : 0);
  };
  if (K.is_trivial()) {
    for (long long m = 0; m < dim; ++m) {
      long long o = F.V.order(m);
      if (o != 1) add_gen(m, 1, o);
    }
    return F;
  }
  std::vector<const Wiring*> acts;
  for (Elem g : subgroup_generators(K)) {
    acts.push_back(&L.action(g));
    if (!wiring_is_monomial(*acts.back())) {
      dense_fixed_level(F, L, lim);
      return F;
    }
  }
  std::vector<char> seen(static_cast<size_t>(dim), 0);
  std::vector<long long> w(static_cast<size_t>(dim), 0), orbit;
  F.offset.push_back(0);
  for (long long m0 = 0; m0 < dim; ++m0) {
    if (seen[m0]) continue;
    const long long o = F.V.order(m0);
    orbit.assign(1, m0);
    seen[m0] = 1;
    w[m0] = 1;
    long long g = o;
    bool clash = false;
    for (size_t q = 0; q < orbit.size(); ++q) {
      const long long m = orbit[q];
      for (const Wiring* a : acts) {
        TensorElem y = apply_mono(*a, F.V, F.V, m);
        if (o == 1) {
          if (y.size() > 1) throw AlgebraError("group action is not monomial");
          if (!y.empty() && !seen[y[0].first]) {
            seen[y[0].first] = 1;
            orbit.push_back(y[0].first);
          }
          continue;
        }
        if (y.size() != 1) throw AlgebraError("group action is not monomial at " + F.V.format_mono(m));
        auto [m2, u] = y[0];
        if (F.V.order(m2) != o) throw AlgebraError("group action changes the additive order of a monomial");
        long long val = fmod_ll(u * w[m], o);
        if (!seen[m2]) {
          seen[m2] = 1;
          w[m2] = val;
          orbit.push_back(m2);
        } else if (val != w[m2]) {
          if (o == 0)
            clash = true;
          else
            g = std::gcd(g, fmod_ll(val - w[m2], o));
        }
      }
    }
    if (o == 1 || (o == 0 && clash) || (o > 0 && g == 1)) continue;
    std::sort(orbit.begin(), orbit.end());
    add_gen(m0, o == 0 ? 1 : o / g, o == 0 ? 0 : g);
    for (long long m : orbit) {
      F.members.push_back(m);
      F.weights.push_back(w[m]);
    }
    F.offset.push_back(static_cast<long long>(F.members.size()));
  }
  return F;
}

// ---------------------------------------------------------------- complexes

std::vector<long long> LevelComplex::orders(int n, bool normalized) const {
  const auto& F = levels[n];
  if (!normalized) return F.order;
  std::vector<long long> o;
  for (int g : norm_gens[n]) o.push_back(F.order[g]);
  return o;
}

LevelComplex moore(const SimplicialGRing& S, const Subgroup& K, int top, const HomologyLimits& lim) {
  if (top < 0) top = S.N;
  if (top > S.N) throw AlgebraError("complex requested beyond the truncation");
  LevelComplex C;
  C.K = K;
  for (int n = 0; n <= top; ++n) C.levels.push_back(fixed_level(S, K, n, lim));
  C.boundary.resize(top + 1);
  C.norm_boundary.resize(top + 1);
  C.norm_gens.resize(top + 1);
  C.norm_index.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    const auto& F = C.levels[n];
    C.norm_index[n].assign(F.size(), -1);
    for (int g = 0; g < F.size(); ++g)
      if (!F.degenerate[g]) {
        C.norm_index[n][g] = static_cast<int>(C.norm_gens[n].size());
        C.norm_gens[n].push_back(g);
      }
  }
  C.boundary[0].rows = 0;
  C.norm_boundary[0].rows = 0;
  for (int n = 1; n <= top; ++n) {
    const auto& F = C.levels[n];
    const auto& T = C.levels[n - 1];
    SparseMatrix& B = C.boundary[n];
    B.rows = T.size();
    B.cols.resize(F.size());
    TensorElem acc;
    for (int g = 0; g < F.size(); ++g) {
      TensorElem x = F.vector(g);
      acc.clear();
      for (int i = 0; i <= n; ++i) {
        const Wiring& w = S.faces[n][i].w;
        for (auto& [m, c] : x) {
          TensorElem y = apply_mono(w, F.V, T.V, m);
          for (auto& [m2, c2] : y) acc.push_back({m2, (i % 2 ? -c2 : c2) * c});
        }
      }
      B.cols[g] = T.coordinates(tensor_normalize(T.V, std::move(acc)));
      acc = {};
    }
    C.norm_boundary[n] = restrict_matrix(B, C.norm_gens[n], C.norm_index[n - 1],
                                         static_cast<int>(C.norm_gens[n - 1].size()));
  }
  return C;
}

void check_boundary_squares(const LevelComplex& C) {
  for (int normalized = 0; normalized < 2; ++normalized) {
    const auto& Bs = normalized ? C.norm_boundary : C.boundary;
    for (int n = 2; n <= C.top(); ++n) {
      const auto o = C.orders(n - 2, normalized != 0);
      for (size_t c = 0; c < Bs[n].cols.size(); ++c) {
        std::vector<std::pair<int, long long>> acc;
        for (auto& [mid, v] : Bs[n].cols[c])
          for (auto& [r, u] : Bs[n - 1].cols[mid]) acc.push_back({r, v * u});
        std::sort(acc.begin(), acc.end());
        for (size_t i = 0; i < acc.size();) {
          size_t j = i;
          long long s = 0;
          while (j < acc.size() && acc[j].first == acc[i].first) s += acc[j++].second;
          if (fmod_ll(s, o[acc[i].first]) != 0)
            throw AlgebraError(std::string(normalized ? "normalized" : "unnormalized") + " boundary squares to " +
                               "nonzero in degree " + std::to_string(n) + " at generator " + std::to_string(c));
          i = j;
        }
      }
    }
  }
}

FgAbelianGroup complex_homology(const LevelComplex& C, int k, bool normalized, const HomologyLimits& lim) {
  if (k < 0 || k + 1 > C.top())
    throw AlgebraError("degree bound exceeded: H_" + std::to_string(k) + " needs level " + std::to_string(k + 1) +
                       " but the complex stops at " + std::to_string(C.top()));
  const auto& Bs = normalized ? C.norm_boundary : C.boundary;
  std::vector<long long> all;
  for (int n = std::max(0, k - 1); n <= k + 1; ++n) {
    auto o = C.orders(n, normalized);
    all.insert(all.end(), o.begin(), o.end());
  }
  const long long nk = static_cast<long long>(C.orders(k, normalized).size());
  const bool free = std::all_of(all.begin(), all.end(), [](long long o) { return o == 0; });
  long long prime = all.empty() ? 0 : all[0];
  const bool same_prime =
      is_prime(prime) && std::all_of(all.begin(), all.end(), [&](long long o) { return o == prime; });
  auto rank_of = [&](const SparseMatrix& M, long long p) {
    return eliminate_rows(M.cols, M.rows, p, lim.dense_entries, false, lim.fill_budget);
  };
  if (free || same_prime) {
    const long long p = free ? 0 : prime;
    long rk_in = k >= 1 ? rank_of(Bs[k], p).rank : 0;
    auto out = rank_of(Bs[k + 1], p);
    long long r = nk - rk_in - out.rank;
    if (free) {
      std::sort(out.divisors.begin(), out.divisors.end());
      return FgAbelianGroup(static_cast<int>(r), out.divisors);
    }
    return FgAbelianGroup(0, std::vector<BigInt>(static_cast<size_t>(r), BigInt(p)));
  }
  long long sizes = 0;
  for (int n = std::max(0, k - 1); n <= k + 1; ++n) sizes += static_cast<long long>(C.orders(n, normalized).size());
  if (sizes > 3LL * lim.dense_dim)
    throw AlgebraError("mixed-torsion chain groups around degree " + std::to_string(k) + " are too large (" +
                       std::to_string(sizes) + " generators) for dense homology");
  ChainComplex CC;
  if (k >= 1) CC.groups.push_back(cyclic_of(C.orders(k - 1, normalized)));
  CC.groups.push_back(cyclic_of(C.orders(k, normalized)));
  CC.groups.push_back(cyclic_of(C.orders(k + 1, normalized)));
  CC.boundary.push_back(IntMatrix(0, 0));
  if (k >= 1) CC.boundary.push_back(dense_of(Bs[k]));
  CC.boundary.push_back(dense_of(Bs[k + 1]));
  return homology(CC, k >= 1 ? 1 : 0);
}

namespace {

std::vector<FgAbelianGroup> table(const SimplicialGRing& S, const Subgroup& K, int max_k, bool normalized,
                                  const HomologyLimits& lim) {
  if (max_k < 0) return {};
  if (max_k > S.N - 1)
    throw AlgebraError("degree bound exceeded: H_" + std::to_string(max_k) + " needs truncation at least " +
                       std::to_string(max_k + 1) + ", have " + std::to_string(S.N));
  LevelComplex C = moore(S, K, max_k + 1, lim);
  std::vector<FgAbelianGroup> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(complex_homology(C, k, normalized, lim));
  return out;
}

}  // namespace

std::vector<FgAbelianGroup> homology_table(const SimplicialGRing& S, const Subgroup& K, int max_k,
                                           const HomologyLimits& lim) {
  return table(S, K, max_k, true, lim);
}

std::vector<FgAbelianGroup> homology_table_unnormalized(const SimplicialGRing& S, const Subgroup& K, int max_k,
                                                        const HomologyLimits& lim) {
  return table(S, K, max_k, false, lim);
}

namespace {

// Relations R on the lattice basis B, rewritten on the Smith generators.
HomologyPresentation minimized(IntMatrix B, const IntMatrix& R) {
  HomologyPresentation P;
  const long z = B.cols();
  auto snf = smith_normal_form(R, true);
  IntMatrix Uinv = unimodular_inverse(snf.U);
  std::vector<long> kept;
  std::vector<BigInt> tors;
  for (long i = 0; i < z; ++i) {
    BigInt d = i < snf.D.rows() && i < snf.D.cols() ? snf.D(i, i) : BigInt(0);
    if (d == BigInt(1)) continue;
    kept.push_back(i);
    tors.push_back(d);
  }
  const long g = static_cast<long>(kept.size());
  P.reduce = IntMatrix(g, z);
  IntMatrix cols(z, g);
  for (long j = 0; j < g; ++j) {
    P.reduce.row(j) = snf.U.row(kept[j]);
    cols.col(j) = Uinv.col(kept[j]);
  }
  P.group = PresentedGroup::cyclic(tors);
  P.cycles = B * cols;
  P.basis = std::move(B);
  return P;
}

}  // namespace

IntVector HomologyPresentation::class_of(const IntVector& z) const {
  Lattice L(static_cast<int>(basis.rows()));
  L.insert_columns(basis);
  auto x = L.coordinates(z);
  if (!x) throw AlgebraError("vector is not a cycle");
  return reduce * *x;
}

HomologyPresentation homology_presentation(const LevelComplex& C, int k, const HomologyLimits& lim) {
  if (k < 0 || k + 1 > C.top()) throw AlgebraError("degree bound exceeded for H_" + std::to_string(k));
  const auto ok = C.orders(k, true);
  const int nk = static_cast<int>(ok.size());
  if (k == 0) {
    auto rows = C.norm_boundary[1].cols;
    for (int i = 0; i < nk; ++i)
      if (ok[i]) rows.push_back({{i, ok[i]}});
    auto e = eliminate_rows(std::move(rows), nk, 0, lim.dense_entries, true, lim.fill_budget);
    std::set<std::vector<std::pair<int, long long>>> uniq(e.kept.begin(), e.kept.end());
    IntMatrix R = IntMatrix::Zero(nk, static_cast<long>(uniq.size()));
    long c = 0;
    for (auto& row : uniq) {
      for (auto& [i, v] : row) R(i, c) = BigInt(v);
      ++c;
    }
    if (R.cols() > nk) R = image_basis(R);
    return minimized(IntMatrix::Identity(nk, nk), R);
  }
  const auto okm = C.orders(k - 1, true);
  const auto okp = C.orders(k + 1, true);
  if (nk > lim.dense_dim || static_cast<int>(okm.size()) > lim.dense_dim ||
      static_cast<long long>(okp.size()) * nk > lim.dense_entries)
    throw AlgebraError("explicit cycles for H_" + std::to_string(k) + " need a dense complex; sizes " +
                       std::to_string(okm.size()) + ", " + std::to_string(nk) + ", " + std::to_string(okp.size()));
  IntMatrix big = hcat(dense_of(C.norm_boundary[k]), diag_orders(okm));
  IntMatrix ker = kernel_basis(big);
  Lattice Z(nk);
  Z.insert_columns(ker.topRows(nk));
  IntMatrix rels = hcat(dense_of(C.norm_boundary[k + 1]), diag_orders(ok));
  IntMatrix R(Z.rank(), rels.cols());
  for (long j = 0; j < rels.cols(); ++j) {
    auto x = Z.coordinates(rels.col(j));
    if (!x) throw AlgebraError("boundary is not a cycle in degree " + std::to_string(k));
    R.col(j) = *x;
  }
  return minimized(Z.basis(), R);
}

// ---------------------------------------------------------------- Mackey structure

MackeyH::MackeyH(const SimplicialGRing& S, int k, const HomologyLimits& lim) : S_(&S), k_(k), lim_(lim) {
  if (k < 0 || k > S.N - 1) throw AlgebraError("degree bound exceeded for the Mackey structure");
  subs_ = all_subgroups(S.G);
  for (auto& R : subgroup_class_reps(S.G)) reps_.push_back(index_of(R));
  for (auto& K : subs_) {
    auto C = std::make_shared<LevelComplex>(moore(S, K, k + 1, lim));
    values_.push_back(complex_homology(*C, k, true, lim));
    pres_.push_back(homology_presentation(*C, k, lim));
    cx_.push_back(std::move(C));
  }
}

int MackeyH::index_of(const Subgroup& K) const {
  for (size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i] == K) return static_cast<int>(i);
  throw AlgebraError("subgroup " + K.label() + " not found");
}

AbHom MackeyH::chain_map_hom(int from, int to,
                             const std::vector<std::vector<std::pair<int, long long>>>& images) const {
  const auto& Pf = pres_[from];
  const auto& Pt = pres_[to];
  const auto& Ct = *cx_[to];
  const int nt = static_cast<int>(Ct.norm_gens[k_].size());
  IntMatrix chain = IntMatrix::Zero(nt, static_cast<long>(images.size()));
  for (size_t j = 0; j < images.size(); ++j)
    for (auto& [g, v] : images[j]) {
      int idx = Ct.norm_index[k_][g];
      if (idx >= 0) chain(idx, static_cast<long>(j)) += BigInt(v);
    }
  IntMatrix img = chain * Pf.cycles;
  IntMatrix M(Pt.group.ngens, img.cols());
  Lattice Z(nt);
  Z.insert_columns(Pt.basis);
  for (long j = 0; j < img.cols(); ++j) {
    auto x = Z.coordinates(img.col(j));
    if (!x) throw AlgebraError("chain map does not send cycles to cycles");
    M.col(j) = Pt.reduce * *x;
  }
  return make_hom(Pf.group, Pt.group, M);
}

AbHom MackeyH::res(int K, int L) const {
  auto key = std::make_tuple(0, K, L);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (!is_subgroup_of(subs_[L], subs_[K])) throw AlgebraError("restriction needs L <= K");
  const auto& F = cx_[K]->levels[k_];
  const auto& T = cx_[L]->levels[k_];
  std::vector<std::vector<std::pair<int, long long>>> images;
  for (int g : cx_[K]->norm_gens[k_]) images.push_back(T.coordinates(F.vector(g)));
  return cache_[key] = chain_map_hom(K, L, images);
}

AbHom MackeyH::tr(int L, int K) const {
  auto key = std::make_tuple(1, L, K);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const Subgroup& SK = subs_[K];
  const Subgroup& SL = subs_[L];
  if (!is_subgroup_of(SL, SK)) throw AlgebraError("transfer needs L <= K");
  std::vector<Elem> reps;
  std::vector<char> covered(S_->G->order(), 0);
  for (Elem x : SK.members()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Elem l : SL.members()) covered[S_->G->mul(x, l)] = 1;
  }
  const auto& F = cx_[L]->levels[k_];
  const auto& T = cx_[K]->levels[k_];
  const GRing& lev = *S_->levels[k_];
  std::vector<std::vector<std::pair<int, long long>>> images;
  for (int g : cx_[L]->norm_gens[k_]) {
    TensorElem x = F.vector(g), sum;
    for (Elem r : reps) tensor_add(F.V, sum, apply(lev.action(r), F.V, F.V, x));
    images.push_back(T.coordinates(sum));
  }
  return cache_[key] = chain_map_hom(L, K, images);
}

AbHom MackeyH::conj(Elem c, int L) const {
  auto key = std::make_tuple(2, static_cast<int>(c), L);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const int to = index_of(conjugate_subgroup(subs_[L], c));
  const auto& F = cx_[L]->levels[k_];
  const auto& T = cx_[to]->levels[k_];
  const GRing& lev = *S_->levels[k_];
  std::vector<std::vector<std::pair<int, long long>>> images;
  for (int g : cx_[L]->norm_gens[k_]) images.push_back(T.coordinates(apply(lev.action(c), F.V, F.V, F.vector(g))));
  return cache_[key] = chain_map_hom(L, to, images);
}

bool is_isomorphism(const AbHom& f) {
  PresentedGroup coker(f.codomain.ngens, hcat(f.matrix, f.codomain.rel));
  return coker.canonical().is_zero() && f.domain.canonical() == f.codomain.canonical();
}

MackeyCheck check_double_coset(const MackeyH& M) {
  const auto& subs = M.subgroups();
  const GroupPtr G = subs[0].parent();
  const int n = static_cast<int>(subs.size());
  for (int L = 0; L < n; ++L)
    for (Elem g = 0; g < G->order(); ++g)
      if (!is_isomorphism(M.conj(g, L)))
        return {false, "conjugation by " + G->name(g) + " on " + subs[L].label() + " is not an isomorphism"};
  for (int K = 0; K < n; ++K)
    for (int J = 0; J < n; ++J) {
      if (!is_subgroup_of(subs[J], subs[K])) continue;
      AbHom trJ = M.tr(J, K);
      for (int L = 0; L < n; ++L) {
        if (!is_subgroup_of(subs[L], subs[K])) continue;
        AbHom lhs = hom_compose(M.res(K, L), trJ);
        IntMatrix sum = IntMatrix::Zero(lhs.matrix.rows(), lhs.matrix.cols());
        std::vector<char> covered(G->order(), 0);
        for (Elem x : subs[K].members()) {
          if (covered[x]) continue;
          for (Elem l : subs[L].members())
            for (Elem j : subs[J].members()) covered[G->mul(G->mul(l, x), j)] = 1;
          // tr_{L cap xJx^-1}^L c_x res^J_{x^-1 L x cap J}
          Subgroup A = intersect(conjugate_subgroup(subs[L], G->inv(x)), subs[J]);
          Subgroup B = intersect(subs[L], conjugate_subgroup(subs[J], x));
          int ia = M.index_of(A), ib = M.index_of(B);
          AbHom term = hom_compose(M.tr(ib, L), hom_compose(M.conj(x, ia), M.res(J, ia)));
          sum += term.matrix;
        }
        AbHom rhs = make_hom(lhs.domain, lhs.codomain, sum);
        if (!hom_equal(lhs, rhs))
          return {false, "double coset formula fails for K = " + subs[K].label() + ", J = " + subs[J].label() +
                             ", L = " + subs[L].label()};
      }
    }
  return {};
}

// ---------------------------------------------------------------- H0 oracle

namespace {

// Fixed vectors of a level and a way to read coordinates of fixed elements.
struct OracleFixed {
  std::vector<TensorElem> gens;
  std::vector<long long> orders;
  // dense path
  bool dense = false;
  IntMatrix inclusion, rel;
  std::vector<long long> mono_orders;
  // stabilizer path
  std::vector<long long> base, c0;
  std::vector<int> gen_of;
};

// Basis of the K-fixed vectors of a level of prime exponent p, intersecting the
// kernels of k - 1 one element at a time.
std::vector<std::vector<long long>> fixed_mod_p(const GRing& L, const TensorSpace& V, const Subgroup& K, long long p) {
  const int d = static_cast<int>(V.dim());
  std::vector<std::vector<long long>> basis(d, std::vector<long long>(d, 0));
  for (int i = 0; i < d; ++i) basis[i][i] = 1;
  for (Elem k : K.members()) {
    if (k == K.parent()->identity()) continue;
    std::vector<std::vector<long long>> img;
    for (auto& b : basis) {
      std::vector<long long> y(d, 0);
      for (int m = 0; m < d; ++m) {
        if (!b[m]) continue;
        for (auto& [m2, c] : apply_mono(L.action(k), V, V, m)) y[m2] += b[m] * c;
        y[m] -= b[m];
      }
      for (auto& v : y) v = fmod_ll(v, p);
      img.push_back(std::move(y));
    }
    // column reduction of img, carrying basis along
    std::vector<char> used(basis.size(), 0);
    for (int row = 0; row < d; ++row) {
      int piv = -1;
      for (size_t j = 0; j < img.size(); ++j)
        if (!used[j] && img[j][row]) {
          piv = static_cast<int>(j);
          break;
        }
      if (piv < 0) continue;
      used[piv] = 1;
      const long long inv = mod_inverse(img[piv][row], p);
      for (size_t j = 0; j < img.size(); ++j) {
        if (used[j] || !img[j][row]) continue;
        const long long f = img[j][row] * inv % p;
        for (int x = 0; x < d; ++x) {
          img[j][x] = fmod_ll(img[j][x] - f * img[piv][x], p);
          basis[j][x] = fmod_ll(basis[j][x] - f * basis[piv][x], p);
        }
      }
    }
    std::vector<std::vector<long long>> kept;
    for (size_t j = 0; j < basis.size(); ++j)
      if (!used[j]) kept.push_back(std::move(basis[j]));
    basis.swap(kept);
  }
  return basis;
}

OracleFixed oracle_fixed(const GRing& L, const Subgroup& K) {
  OracleFixed F;
  const TensorSpace V = L.space();
  const long long dim = V.dim();
  bool monomial = true;
  for (Elem k : K.members())
    for (long long m = 0; m < dim && monomial; ++m)
      if (apply_mono(L.action(k), V, V, m).size() != 1) monomial = false;
  long long p = dim ? V.order(0) : 0;
  for (long long m = 0; m < dim; ++m)
    if (V.order(m) != p) p = 0;
  if (!monomial && is_prime(p) && dim <= 4096) {
    F.dense = true;
    const int d = static_cast<int>(dim);
    F.mono_orders.assign(d, p);
    auto basis = fixed_mod_p(L, V, K, p);
    const long f = static_cast<long>(basis.size());
    F.inclusion = IntMatrix::Zero(d, f);
    F.rel = IntMatrix::Zero(f, f);
    for (long j = 0; j < f; ++j) {
      TensorElem x;
      for (int m = 0; m < d; ++m)
        if (basis[j][m]) {
          F.inclusion(m, j) = BigInt(basis[j][m]);
          x.push_back({m, basis[j][m]});
        }
      F.rel(j, j) = BigInt(p);
      F.gens.push_back(tensor_normalize(V, std::move(x)));
    }
    return F;
  }
  if (dim <= 400 || (!monomial && dim <= 4096)) {
    F.dense = true;
    const int d = static_cast<int>(dim);
    for (long long m = 0; m < dim; ++m) F.mono_orders.push_back(V.order(m));
    PresentedGroup A = cyclic_of(F.mono_orders);
    std::vector<IntMatrix> endos;
    for (Elem k : K.members()) {
      IntMatrix E = IntMatrix::Zero(d, d);
      for (long long m = 0; m < dim; ++m)
        for (auto& [m2, c] : apply_mono(L.action(k), V, V, m)) E(static_cast<long>(m2), static_cast<long>(m)) = BigInt(c);
      endos.push_back(E);
    }
    auto fr = fixed_subgroup(A, endos);
    F.inclusion = fr.inclusion;
    for (long j = 0; j < fr.inclusion.cols(); ++j) {
      TensorElem x;
      for (long i = 0; i < d; ++i)
        if (!fr.inclusion(i, j).is_zero()) {
          BigInt v = fr.inclusion(i, j);
          if (F.mono_orders[i]) v = floor_mod(v, BigInt(F.mono_orders[i]));
          x.push_back({i, v.to_int64()});
        }
      F.gens.push_back(tensor_normalize(V, x));
    }
    F.rel = fr.fixed.rel;
    return F;
  }
  std::vector<char> seen(static_cast<size_t>(dim), 0);
  std::vector<long long> w(static_cast<size_t>(dim), 0);
  F.gen_of.assign(static_cast<size_t>(dim), -1);
  for (long long b = 0; b < dim; ++b) {
    if (seen[b]) continue;
    const long long o = V.order(b);
    std::vector<long long> orbit;
    long long g = o;
    bool clash = false;
    for (Elem k : K.members()) {
      TensorElem y = apply_mono(L.action(k), V, V, b);
      if (o == 1) {
        for (auto& t : y)
          if (!seen[t.first]) seen[t.first] = 1;
        continue;
      }
      if (y.size() != 1) throw AlgebraError("oracle: action is not monomial");
      auto [m, u] = y[0];
      u = fmod_ll(u, o);
      if (!seen[m]) {
        seen[m] = 1;
        w[m] = u;
        orbit.push_back(m);
      } else if (w[m] != u) {
        if (o == 0)
          clash = true;
        else
          g = std::gcd(g, fmod_ll(u - w[m], o));
      }
    }
    seen[b] = 1;
    if (o == 1 || (o == 0 && clash) || (o > 0 && g == 1)) continue;
    const long long c = o == 0 ? 1 : o / g;
    TensorElem x;
    for (long long m : orbit) x.push_back({m, fmod_ll(c * w[m], o)});
    F.gen_of[b] = static_cast<int>(F.gens.size());
    F.gens.push_back(tensor_normalize(V, x));
    F.orders.push_back(o == 0 ? 0 : g);
    F.base.push_back(b);
    F.c0.push_back(c);
  }
  return F;
}

}  // namespace

FgAbelianGroup oracle_h0(const SimplicialGRing& S, const Subgroup& K) {
  if (S.N < 1) throw AlgebraError("oracle_h0 needs levels 0 and 1");
  const GRing& L0 = *S.levels[0];
  const GRing& L1 = *S.levels[1];
  const TensorSpace V0 = L0.space(), V1 = L1.space();
  OracleFixed F0 = oracle_fixed(L0, K);
  OracleFixed F1 = oracle_fixed(L1, K);
  std::vector<TensorElem> images;
  for (auto& x : F1.gens) {
    TensorElem y = apply(S.faces[1][0].w, V1, V0, x);
    tensor_add(V0, y, apply(S.faces[1][1].w, V1, V0, x), -1);
    images.push_back(y);
  }
  if (F0.dense) {
    IntMatrix A = hcat(F0.inclusion, diag_orders(F0.mono_orders));
    const long f0 = F0.inclusion.cols();
    // U A V = D: on the image of A, the fixed coordinates are Q y / l with
    // Q = V_top diag(l / d_i) U_top
    auto snf = smith_normal_form(A, true);
    BigInt l(1);
    for (int i = 0; i < snf.rank; ++i) l = div_exact(l, gcd(l, snf.D(i, i))) * snf.D(i, i);
    IntMatrix scaled = snf.U.topRows(snf.rank);
    for (int i = 0; i < snf.rank; ++i) scaled.row(i) *= div_exact(l, snf.D(i, i));
    IntMatrix Q = snf.V.topLeftCorner(f0, snf.rank) * scaled;
    std::vector<std::vector<std::pair<long, BigInt>>> qcol(static_cast<size_t>(Q.cols()));
    for (long m = 0; m < Q.cols(); ++m)
      for (long i = 0; i < f0; ++i)
        if (!Q(i, m).is_zero()) qcol[m].push_back({i, Q(i, m)});
    std::set<std::vector<std::pair<int, long long>>> rows;
    std::vector<BigInt> acc(static_cast<size_t>(f0));
    for (size_t j = 0; j < images.size(); ++j) {
      for (Elem k : K.members()) {
        TensorElem y = apply(L0.action(k), V0, V0, images[j]);
        tensor_add(V0, y, images[j], -1);
        if (!y.empty()) throw AlgebraError("oracle: image of d0 - d1 is not fixed");
      }
      std::fill(acc.begin(), acc.end(), BigInt(0));
      for (auto& [m, c] : images[j])
        for (auto& [i, q] : qcol[m]) acc[i] += q * BigInt(c);
      std::vector<std::pair<int, long long>> row;
      for (long i = 0; i < f0; ++i) {
        if (acc[i].is_zero()) continue;
        if (!divides(l, acc[i])) throw AlgebraError("oracle: image of d0 - d1 is not fixed");
        row.push_back({static_cast<int>(i), div_exact(acc[i], l).to_int64()});
      }
      if (!row.empty()) rows.insert(std::move(row));
    }
    for (long j = 0; j < F0.rel.cols(); ++j) {
      std::vector<std::pair<int, long long>> row;
      for (long i = 0; i < f0; ++i)
        if (!F0.rel(i, j).is_zero()) row.push_back({static_cast<int>(i), F0.rel(i, j).to_int64()});
      if (!row.empty()) rows.insert(std::move(row));
    }
    auto e = eliminate_rows({rows.begin(), rows.end()}, static_cast<int>(f0));
    std::sort(e.divisors.begin(), e.divisors.end());
    return FgAbelianGroup(static_cast<int>(f0) - static_cast<int>(e.rank), e.divisors);
  }
  const int f0 = static_cast<int>(F0.gens.size());
  std::vector<std::vector<std::pair<int, long long>>> rows;
  for (auto& y : images) {
    std::vector<std::pair<int, long long>> col;
    for (auto& [m, c] : y) {
      int g = F0.gen_of[m];
      if (g < 0) continue;
      if (c % F0.c0[g]) throw AlgebraError("oracle: image of d0 - d1 is not fixed");
      long long v = fmod_ll(c / F0.c0[g], F0.orders[g]);
      if (v) col.push_back({g, v});
    }
    rows.push_back(std::move(col));
  }
  for (int g = 0; g < f0; ++g)
    if (F0.orders[g]) rows.push_back({{g, F0.orders[g]}});
  auto e = eliminate_rows(std::move(rows), f0);
  std::sort(e.divisors.begin(), e.divisors.end());
  return FgAbelianGroup(f0 - static_cast<int>(e.rank), e.divisors);
}

}  // namespace eloday
