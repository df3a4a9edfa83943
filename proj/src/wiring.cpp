#include "eloday/wiring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eloday {

namespace {

long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("tensor coefficient overflow");
  return r;
}

long long add_checked(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("tensor coefficient overflow");
  return r;
}

long long reduce_by(long long v, long long o) {
  if (o == 0) return v;
  v %= o;
  return v < 0 ? v + o : v;
}

bool is_unit_mod(long long v, long long o) {
  if (o == 0) return v == 1 || v == -1;
  return std::gcd(reduce_by(v, o), o) == 1;
}

}  // namespace

TensorSpace::TensorSpace(std::vector<RingPtr> slots) : slots_(std::move(slots)) {
  const int n = size();
  stride_.assign(n, 1);
  dim_ = 1;
  for (int i = n - 1; i >= 0; --i) {
    stride_[i] = dim_;
    if (__builtin_mul_overflow(dim_, static_cast<long long>(slots_[i]->rank()), &dim_) || dim_ > (1LL << 62))
      throw RingError("tensor product too large");
  }
}

void TensorSpace::digits(long long mono, std::vector<int>& out) const {
  out.resize(size());
  for (int i = size() - 1; i >= 0; --i) {
    const int r = slots_[i]->rank();
    out[i] = static_cast<int>(mono % r);
    mono /= r;
  }
}

long long TensorSpace::index(const std::vector<int>& d) const {
  long long x = 0;
  for (int i = 0; i < size(); ++i) x += d[i] * stride_[i];
  return x;
}

long long TensorSpace::order(long long mono) const {
  long long g = 0;
  for (int i = size() - 1; i >= 0; --i) {
    const int r = slots_[i]->rank();
    g = std::gcd(g, slots_[i]->order(static_cast<int>(mono % r)));
    mono /= r;
  }
  return g;
}

std::string TensorSpace::format_mono(long long mono) const {
  std::vector<int> d;
  digits(mono, d);
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << (char)'|';
    os << slots_[i]->basis_name(d[i]);
  }
  return os.str();
}

TensorElem tensor_normalize(const TensorSpace& V, TensorElem x) {
  std::sort(x.begin(), x.end());
  TensorElem out;
  for (auto& [m, c] : x) {
    if (!out.empty() && out.back().first == m)
      out.back().second = add_checked(out.back().second, c);
    else
      out.emplace_back(m, c);
  }
  TensorElem res;
  for (auto& [m, c] : out) {
    long long r = reduce_by(c, V.order(m));
    if (r) res.emplace_back(m, r);
  }
  return res;
}

void tensor_add(const TensorSpace& V, TensorElem& acc, const TensorElem& x, long long scale) {
  TensorElem merged = acc;
  for (auto& [m, c] : x) merged.emplace_back(m, mul_checked(c, scale));
  acc = tensor_normalize(V, std::move(merged));
}

std::string format_elem(const TensorSpace& V, const TensorElem& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < x.size(); ++i) {
    if (i) os << " + ";
    if (x[i].second != 1) os << x[i].second << "*";
    os << "[" << V.format_mono(x[i].first) << "]";
  }
  return os.str();
}

Wiring identity_wiring(const std::vector<RingPtr>& slots) {
  Wiring w;
  w.dom = w.cod = slots;
  w.out.resize(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) w.out[i] = {Factor{static_cast<int>(i), nullptr}};
  return w;
}

void validate_wiring(const Wiring& w) {
  if (w.out.size() != w.cod.size()) throw RingError("wiring: one factor list per target slot required");
  std::vector<int> used(w.dom.size(), 0);
  for (size_t j = 0; j < w.out.size(); ++j) {
    for (auto& f : w.out[j]) {
      if (f.src < 0 || f.src >= static_cast<int>(w.dom.size())) throw RingError("wiring: source slot out of range");
      ++used[f.src];
      const Ring* from = w.dom[f.src].get();
      const Ring* to = w.cod[j].get();
      if (f.t) {
        if (f.t->dom.get() != from || f.t->cod.get() != to) throw RingError("wiring: transform rings do not match slots");
      } else if (from != to) {
        throw RingError("wiring: identity factor between different rings");
      }
      if (f.t && f.t->kind == MapKind::Additive && w.out[j].size() != 1)
        throw RingError("wiring: additive factor must feed its slot alone");
    }
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (used[i] != 1) throw RingError("wiring: source slot " + std::to_string(i) + " must be used exactly once");
}

Wiring compose(const Wiring& outer, const Wiring& inner) {
  if (outer.dom.size() != inner.cod.size()) throw RingError("wirings do not compose");
  for (size_t i = 0; i < outer.dom.size(); ++i)
    if (outer.dom[i].get() != inner.cod[i].get()) throw RingError("wirings do not compose: slot rings differ");
  Wiring w;
  w.dom = inner.dom;
  w.cod = outer.cod;
  w.out.resize(outer.cod.size());
  for (size_t k = 0; k < outer.out.size(); ++k) {
    auto& dst = w.out[k];
    for (auto& f : outer.out[k]) {
      const auto& L = inner.out[f.src];
      MapKind kind = f.t ? f.t->kind : MapKind::Hom;
      if (L.empty()) {
        if (f.t && kind == MapKind::Additive) {
          const auto& R = f.t->dom;
          if (!f.t->cod->equal(eloday::apply(*f.t, R->one()), f.t->cod->one()))
            throw RingError("wiring: additive factor applied to a unit slot");
        }
        continue;
      }
      if (kind == MapKind::Additive && L.size() != 1) throw RingError("wiring: additive factor applied to a product");
      if (kind == MapKind::AntiHom) {
        for (auto it = L.rbegin(); it != L.rend(); ++it) dst.push_back(Factor{it->src, compose(f.t, it->t)});
      } else {
        for (auto& g : L) dst.push_back(Factor{g.src, compose(f.t, g.t)});
      }
    }
  }
  return w;
}

MapKind wiring_kind(const Wiring& w) {
  bool all_hom = true, all_anti = true;
  for (size_t j = 0; j < w.out.size(); ++j) {
    const bool comm = w.cod[j]->is_commutative();
    if (w.out[j].size() > 1 && !comm) all_hom = all_anti = false;
    for (auto& f : w.out[j]) {
      MapKind k = f.t ? f.t->kind : MapKind::Hom;
      if (k == MapKind::Additive) all_hom = all_anti = false;
      if (k == MapKind::AntiHom && !comm) all_hom = false;
      if (k == MapKind::Hom && !comm) all_anti = false;
    }
  }
  if (all_hom) return MapKind::Hom;
  if (all_anti) return MapKind::AntiHom;
  return MapKind::Additive;
}

bool wiring_uses_noncommutative_merge(const Wiring& w) {
  for (size_t j = 0; j < w.out.size(); ++j)
    if (w.out[j].size() > 1 && !w.cod[j]->is_commutative()) return true;
  return false;
}

bool wiring_is_monomial(const Wiring& w) {
  for (size_t j = 0; j < w.out.size(); ++j)
    for (auto& f : w.out[j]) {
      if (!f.t) continue;
      const auto& C = *f.t->cod;
      for (int b = 0; b < f.t->m.cols(); ++b) {
        int nz = 0;
        for (int a = 0; a < f.t->m.rows(); ++a)
          if (f.t->m(a, b)) {
            ++nz;
            if (!is_unit_mod(f.t->m(a, b), C.order(a))) return false;
          }
        if (nz != 1) return false;
      }
    }
  return true;
}

bool is_identity_wiring(const Wiring& w) {
  if (w.dom.size() != w.cod.size()) return false;
  for (size_t j = 0; j < w.out.size(); ++j) {
    if (w.out[j].size() != 1 || w.out[j][0].src != static_cast<int>(j)) return false;
    if (!is_identity(w.out[j][0].t)) return false;
  }
  return true;
}

std::string describe(const Wiring& w) {
  std::ostringstream os;
  for (size_t j = 0; j < w.out.size(); ++j) {
    if (j) os << ", ";
    os << j << "<-";
    if (w.out[j].empty()) os << "1";
    for (size_t k = 0; k < w.out[j].size(); ++k) {
      if (k) os << "*";
      auto& f = w.out[j][k];
      if (f.t && !f.t->label.empty())
        os << f.t->label << "(" << f.src << ")";
      else if (f.t)
        os << "T(" << f.src << ")";
      else
        os << f.src;
    }
  }
  return os.str();
}

TensorElem apply_mono(const Wiring& w, const TensorSpace& dom, const TensorSpace& cod, long long mono) {
  std::vector<int> d;
  dom.digits(mono, d);
  // partial expansion: (index, coefficient, gcd of orders so far)
  struct Part {
    long long idx, coef, ord;
  };
  std::vector<Part> parts{{0, 1, 0}}, next;
  for (size_t j = 0; j < w.out.size(); ++j) {
    const Ring& R = *w.cod[j];
    Coeffs acc;
    if (w.out[j].empty()) {
      acc = R.one();
    } else {
      bool first = true;
      for (auto& f : w.out[j]) {
        Coeffs v = f.t ? eloday::apply(*f.t, f.t->dom->basis(d[f.src])) : R.basis(d[f.src]);
        acc = first ? v : R.mul(acc, v);
        first = false;
      }
    }
    next.clear();
    for (auto& p : parts)
      for (int b = 0; b < R.rank(); ++b) {
        if (!acc[b]) continue;
        long long o = std::gcd(p.ord, R.order(b));
        long long c = reduce_by(mul_checked(p.coef, acc[b]), o);
        if (c == 0 && o != 0) continue;
        if (c == 0) continue;
        next.push_back({p.idx + b * cod.stride(static_cast<int>(j)), c, o});
      }
    parts.swap(next);
    if (parts.empty()) break;
  }
  TensorElem out;
  for (auto& p : parts) out.emplace_back(p.idx, p.coef);
  return tensor_normalize(cod, std::move(out));
}

TensorElem apply(const Wiring& w, const TensorSpace& dom, const TensorSpace& cod, const TensorElem& x) {
  TensorElem acc;
  for (auto& [m, c] : x) {
    auto y = apply_mono(w, dom, cod, m);
    for (auto& t : y) acc.emplace_back(t.first, mul_checked(t.second, c));
  }
  return tensor_normalize(cod, std::move(acc));
}

namespace {

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

Wiring restrict_wiring(const Wiring& w, const std::vector<int>& dslots, const std::vector<int>& cslots) {
  std::vector<int> dpos(w.dom.size(), -1);
  for (size_t i = 0; i < dslots.size(); ++i) dpos[dslots[i]] = static_cast<int>(i);
  Wiring r;
  for (int i : dslots) r.dom.push_back(w.dom[i]);
  for (int j : cslots) {
    r.cod.push_back(w.cod[j]);
    std::vector<Factor> fs;
    for (auto& f : w.out[j]) fs.push_back(Factor{dpos[f.src], f.t});
    r.out.push_back(fs);
  }
  return r;
}

}  // namespace

WiringDiff compare(const Wiring& a, const Wiring& b, long long exhaustive_limit) {
  if (a.dom.size() != b.dom.size() || a.cod.size() != b.cod.size())
    throw RingError("compared wirings have different shapes");
  for (size_t i = 0; i < a.dom.size(); ++i)
    if (a.dom[i].get() != b.dom[i].get()) throw RingError("compared wirings have different sources");
  for (size_t j = 0; j < a.cod.size(); ++j)
    if (a.cod[j].get() != b.cod[j].get()) throw RingError("compared wirings have different targets");
  const int nd = static_cast<int>(a.dom.size()), nc = static_cast<int>(a.cod.size());
  Dsu dsu(nd + nc);
  for (const Wiring* w : {&a, &b})
    for (int j = 0; j < nc; ++j)
      for (auto& f : w->out[j]) dsu.unite(f.src, nd + j);
  std::vector<std::vector<int>> cd(nd + nc), cc(nd + nc);
  for (int i = 0; i < nd; ++i) cd[dsu.find(i)].push_back(i);
  for (int j = 0; j < nc; ++j) cc[dsu.find(nd + j)].push_back(j);

  TensorSpace D(a.dom), C(a.cod);
  WiringDiff res;
  bool suspicious = false;
  for (int root = 0; root < nd + nc; ++root) {
    if (cd[root].empty()) continue;  // unhit target slots are 1 on both sides
    Wiring ra = restrict_wiring(a, cd[root], cc[root]);
    Wiring rb = restrict_wiring(b, cd[root], cc[root]);
    TensorSpace sd(ra.dom), sc(ra.cod);
    if (sd.dim() > exhaustive_limit) {
      res.decided = false;
      res.equal = false;
      return res;
    }
    for (long long m = 0; m < sd.dim(); ++m) {
      auto ya = apply_mono(ra, sd, sc, m);
      auto yb = apply_mono(rb, sd, sc, m);
      if (ya == yb) continue;
      // extend by the unit monomial elsewhere
      std::vector<int> sub, full(nd, 0);
      sd.digits(m, sub);
      for (size_t i = 0; i < cd[root].size(); ++i) full[cd[root][i]] = sub[i];
      long long w = D.index(full);
      auto fa = apply_mono(a, D, C, w);
      auto fb = apply_mono(b, D, C, w);
      if (fa != fb) {
        res.equal = false;
        res.witness = w;
        res.lhs = fa;
        res.rhs = fb;
        return res;
      }
      suspicious = true;
      break;
    }
  }
  if (!suspicious) return res;
  if (D.dim() > exhaustive_limit) {
    res.decided = false;
    res.equal = false;
    return res;
  }
  for (long long m = 0; m < D.dim(); ++m) {
    auto fa = apply_mono(a, D, C, m);
    auto fb = apply_mono(b, D, C, m);
    if (fa != fb) {
      res.equal = false;
      res.witness = m;
      res.lhs = fa;
      res.rhs = fb;
      return res;
    }
  }
  return res;
}

bool wiring_equal(const Wiring& a, const Wiring& b) {
  auto d = compare(a, b);
  if (!d.decided) throw RingError("wiring equality undecided within the exhaustive limit");
  return d.equal;
}

}  // namespace eloday
