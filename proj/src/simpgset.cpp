#include "eloday/simpgset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eloday {

void OrbitLevel::finalize() {
  offset.clear();
  transversal.clear();
  count = 0;
  for (auto& o : orbits) {
    offset.push_back(count);
    transversal.push_back(canonical_transversal(o.isotropy));
    count += o.isotropy.index();
  }
}

const char* isotropy_kind_name(IsotropyKind k) {
  switch (k) {
    case IsotropyKind::Free: return "free";
    case IsotropyKind::One: return "one_isotropy";
    case IsotropyKind::Two: return "two_isotropy";
    case IsotropyKind::Normal: return "normal_with_subgroups";
  }
  return "?";
}

int FinSimpGSet::element(int n, int orbit, Elem g) const {
  const auto& L = levels[n];
  return L.offset[orbit] + L.transversal[orbit].coset_of(g);
}

std::pair<int, int> FinSimpGSet::locate(int n, int elem) const {
  const auto& L = levels[n];
  int a = static_cast<int>(std::upper_bound(L.offset.begin(), L.offset.end(), elem) - L.offset.begin()) - 1;
  return {a, elem - L.offset[a]};
}

Elem FinSimpGSet::rep_of(int n, int elem) const {
  auto [a, i] = locate(n, elem);
  return levels[n].transversal[a].rep(i);
}

int FinSimpGSet::apply(const EqMap& f, int n_src, int n_tgt, int elem) const {
  auto [a, i] = locate(n_src, elem);
  Elem t = levels[n_src].transversal[a].rep(i);
  const auto& im = f.image[a];
  return element(n_tgt, im.orbit, G->mul(t, im.c));
}

int FinSimpGSet::act(Elem g, int n, int elem) const {
  auto [a, i] = locate(n, elem);
  return element(n, a, G->mul(g, levels[n].transversal[a].rep(i)));
}

std::vector<int> FinSimpGSet::nondegenerate(int n) const {
  std::vector<char> hit(levels[n].count, 0);
  if (n > 0)
    for (const auto& s : degens[n - 1])
      for (int x = 0; x < levels[n - 1].count; ++x) hit[apply(s, n - 1, n, x)] = 1;
  std::vector<int> out;
  for (int x = 0; x < levels[n].count; ++x)
    if (!hit[x]) out.push_back(x);
  return out;
}

namespace {

Subgroup type_subgroup(const IsotropyMode& m, const Orbit& o) {
  switch (o.type) {
    case OrbitType::Free: return trivial_subgroup(o.isotropy.parent());
    case OrbitType::H: return m.H;
    case OrbitType::Hp: return m.Hp;
    case OrbitType::K: return m.Ks.at(o.k_index);
  }
  return {};
}

std::optional<Elem> least_conjugator(const Subgroup& S, const Subgroup& target) {
  const auto& G = *target.parent();
  for (Elem g = 0; g < G.order(); ++g)
    if (conjugate_subgroup(S, g) == target) return g;
  return std::nullopt;
}

std::string where(const FinSimpGSet& X, int n, int orbit) {
  return "level " + std::to_string(n) + " orbit " + std::to_string(orbit) + " (" + X.levels[n].orbits[orbit].label + ")";
}

}  // namespace

void assign_orbit_types(FinSimpGSet& X) {
  const auto& mode = X.mode;
  for (int n = 0; n <= X.N; ++n)
    for (size_t a = 0; a < X.levels[n].orbits.size(); ++a) {
      auto& o = X.levels[n].orbits[a];
      const std::string at = where(X, n, static_cast<int>(a));
      if (o.isotropy.is_trivial()) {
        o.type = OrbitType::Free;
        o.conj = X.G->identity();
        continue;
      }
      std::vector<std::pair<OrbitType, int>> cands;
      switch (mode.kind) {
        case IsotropyKind::Free:
          throw GroupError("free mode but " + at + " has isotropy " + o.isotropy.label());
        case IsotropyKind::One:
          cands = {{OrbitType::H, -1}};
          break;
        case IsotropyKind::Two:
          cands = {{OrbitType::H, -1}, {OrbitType::Hp, -1}};
          break;
        case IsotropyKind::Normal:
          cands.push_back({OrbitType::H, -1});
          for (size_t k = 0; k < mode.Ks.size(); ++k) cands.push_back({OrbitType::K, static_cast<int>(k)});
          break;
      }
      std::vector<std::pair<OrbitType, int>> fits;
      for (auto& [t, k] : cands) {
        Orbit probe = o;
        probe.type = t;
        probe.k_index = k;
        Subgroup S = type_subgroup(mode, probe);
        bool ok = mode.kind == IsotropyKind::Normal ? S == o.isotropy : least_conjugator(S, o.isotropy).has_value();
        if (ok) fits.push_back({t, k});
      }
      if (o.type != OrbitType::Free) {
        bool preset_ok = false;
        for (auto& f : fits) preset_ok = preset_ok || (f.first == o.type && f.second == o.k_index);
        if (!preset_ok) throw GroupError(at + ": isotropy " + o.isotropy.label() + " does not fit its orbit type");
      } else {
        if (fits.empty())
          throw GroupError(at + ": isotropy " + o.isotropy.label() + " not allowed in " + isotropy_kind_name(mode.kind) +
                           " mode");
        if (fits.size() > 1) throw GroupError(at + ": orbit type is ambiguous; set it explicitly");
        o.type = fits[0].first;
        o.k_index = fits[0].second;
      }
      o.conj = *least_conjugator(type_subgroup(mode, o), o.isotropy);
    }
}

ValidationReport validate(const FinSimpGSet& X) {
  auto fail = [](std::string m) { return ValidationReport{false, std::move(m)}; };
  const auto& G = *X.G;
  if (static_cast<int>(X.levels.size()) != X.N + 1) return fail("wrong number of levels");
  if (static_cast<int>(X.faces.size()) != X.N + 1 || static_cast<int>(X.degens.size()) != X.N + 1)
    return fail("structure map tables have the wrong length");
  for (int n = 0; n <= X.N; ++n) {
    int expect_f = n == 0 ? 0 : n + 1, expect_s = n == X.N ? 0 : n + 1;
    if (static_cast<int>(X.faces[n].size()) != expect_f) return fail("wrong number of faces in level " + std::to_string(n));
    if (static_cast<int>(X.degens[n].size()) != expect_s)
      return fail("wrong number of degeneracies in level " + std::to_string(n));
    const auto& L = X.levels[n];
    int cnt = 0;
    for (size_t a = 0; a < L.orbits.size(); ++a) {
      const auto& o = L.orbits[a];
      if (o.isotropy.parent().get() != X.G.get()) return fail(where(X, n, static_cast<int>(a)) + ": foreign subgroup");
      cnt += o.isotropy.index();
    }
    if (cnt != L.count || L.offset.size() != L.orbits.size()) return fail("level " + std::to_string(n) + " not finalized");
  }
  // well-definedness of every orbit map
  auto check_map = [&](const EqMap& f, int ns, int nt, const std::string& nm) -> std::optional<std::string> {
    const auto& S = X.levels[ns];
    const auto& T = X.levels[nt];
    if (f.image.size() != S.orbits.size()) return nm + ": one image per source orbit required";
    for (size_t a = 0; a < S.orbits.size(); ++a) {
      const auto& im = f.image[a];
      if (im.orbit < 0 || im.orbit >= static_cast<int>(T.orbits.size())) return nm + ": target orbit out of range";
      for (Elem k : S.orbits[a].isotropy.members()) {
        Elem k2 = G.mul(G.mul(G.inv(im.c), k), im.c);
        if (!T.orbits[im.orbit].isotropy.contains(k2))
          return nm + ": not well defined on " + where(X, ns, static_cast<int>(a)) + " (isotropy " + G.name(k) +
                 " not carried into the target stabilizer)";
      }
    }
    return std::nullopt;
  };
  for (int n = 1; n <= X.N; ++n)
    for (int i = 0; i <= n; ++i)
      if (auto e = check_map(X.faces[n][i], n, n - 1, "d_" + std::to_string(i) + " on level " + std::to_string(n)))
        return fail(*e);
  for (int n = 0; n < X.N; ++n)
    for (int j = 0; j <= n; ++j)
      if (auto e = check_map(X.degens[n][j], n, n + 1, "s_" + std::to_string(j) + " on level " + std::to_string(n)))
        return fail(*e);

  auto d = [&](int n, int i, int x) { return X.apply(X.faces[n][i], n, n - 1, x); };
  auto s = [&](int n, int j, int x) { return X.apply(X.degens[n][j], n, n + 1, x); };
  auto elem_name = [&](int n, int x) {
    auto [a, i] = X.locate(n, x);
    return G.name(X.levels[n].transversal[a].rep(i)) + "." + X.levels[n].orbits[a].label;
  };
  std::ostringstream os;
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.levels[n].count; ++x) {
      // d_i d_j = d_{j-1} d_i for i < j
      if (n >= 2)
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x))) {
              os << "d_" << i << " d_" << j << " != d_" << j - 1 << " d_" << i << " on " << elem_name(n, x)
                 << " in level " << n;
              return fail(os.str());
            }
      if (n < X.N) {
        // s_i s_j = s_{j+1} s_i for i <= j
        if (n + 1 < X.N)
          for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
              if (s(n + 1, i, s(n, j, x)) != s(n + 1, j + 1, s(n, i, x))) {
                os << "s_" << i << " s_" << j << " != s_" << j + 1 << " s_" << i << " on " << elem_name(n, x)
                   << " in level " << n;
                return fail(os.str());
              }
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            int lhs = d(n + 1, i, s(n, j, x));
            int rhs;
            if (i < j)
              rhs = s(n - 1, j - 1, d(n, i, x));
            else if (i == j || i == j + 1)
              rhs = x;
            else
              rhs = s(n - 1, j, d(n, i - 1, x));
            if (lhs != rhs) {
              os << "d_" << i << " s_" << j << " identity fails on " << elem_name(n, x) << " in level " << n;
              return fail(os.str());
            }
          }
      }
    }
  // equivariance on elements
  for (int n = 0; n <= X.N; ++n)
    for (int x = 0; x < X.levels[n].count; ++x)
      for (Elem g = 0; g < G.order(); ++g) {
        int gx = X.act(g, n, x);
        if (n > 0)
          for (int i = 0; i <= n; ++i)
            if (d(n, i, gx) != X.act(g, n - 1, d(n, i, x))) return fail("d_" + std::to_string(i) + " not equivariant");
        if (n < X.N)
          for (int j = 0; j <= n; ++j)
            if (s(n, j, gx) != X.act(g, n + 1, s(n, j, x))) return fail("s_" + std::to_string(j) + " not equivariant");
      }
  // isotropy mode
  const auto& mode = X.mode;
  for (int n = 0; n <= X.N; ++n)
    for (size_t a = 0; a < X.levels[n].orbits.size(); ++a) {
      const auto& o = X.levels[n].orbits[a];
      const std::string at = where(X, n, static_cast<int>(a));
      if (o.isotropy.is_trivial()) {
        if (o.type != OrbitType::Free) return fail(at + ": free orbit with a non-free type");
        continue;
      }
      if (mode.kind == IsotropyKind::Free) return fail(at + ": nontrivial isotropy in free mode");
      if (o.type == OrbitType::Free) return fail(at + ": nontrivial isotropy on an orbit typed free");
      if (o.type == OrbitType::Hp && mode.kind != IsotropyKind::Two) return fail(at + ": H' orbit outside two-isotropy mode");
      if (o.type == OrbitType::K && mode.kind != IsotropyKind::Normal) return fail(at + ": K orbit outside normal mode");
      if (!(conjugate_subgroup(type_subgroup(mode, o), o.conj) == o.isotropy))
        return fail(at + ": recorded conjugator does not produce the isotropy");
      if (mode.kind == IsotropyKind::Normal && o.conj != G.identity())
        return fail(at + ": normal mode needs the listed subgroups exactly");
    }
  if (mode.kind == IsotropyKind::Two) {
    if (!(mode.phi.image(mode.H) == mode.Hp)) return fail("two-isotropy mode needs phi(H) = H'");
    auto cross = [&](const EqMap& f, int ns, int nt) {
      for (size_t a = 0; a < f.image.size(); ++a) {
        auto ts = X.levels[ns].orbits[a].type, tt = X.levels[nt].orbits[f.image[a].orbit].type;
        if ((ts == OrbitType::H && tt == OrbitType::Hp) || (ts == OrbitType::Hp && tt == OrbitType::H)) return true;
      }
      return false;
    };
    for (int n = 1; n <= X.N; ++n)
      for (auto& f : X.faces[n])
        if (cross(f, n, n - 1)) return fail("a face maps between G/H and G/H' orbits");
    for (int n = 0; n < X.N; ++n)
      for (auto& f : X.degens[n])
        if (cross(f, n, n + 1)) return fail("a degeneracy maps between G/H and G/H' orbits");
  }
  if (mode.kind == IsotropyKind::Normal) {
    auto info = subgroup_tools(mode.H);
    if (!info.is_normal) return fail("normal mode needs a normal subgroup H");
    for (auto& K : mode.Ks)
      if (!is_subgroup_of(K, mode.H)) return fail("normal mode subgroup " + K.label() + " is not inside H");
  }
  return {};
}

std::vector<FgAbelianGroup> underlying_homology(const FinSimpGSet& X, int max_k) {
  if (max_k + 1 > X.N) throw GroupError("underlying homology beyond the truncation");
  ChainComplex C;
  std::vector<std::vector<int>> nd;
  for (int n = 0; n <= max_k + 1; ++n) {
    nd.push_back(X.nondegenerate(n));
    C.groups.push_back(PresentedGroup::free(static_cast<int>(nd.back().size())));
  }
  C.boundary.push_back(IntMatrix(0, 0));
  for (int n = 1; n <= max_k + 1; ++n) {
    std::vector<int> pos(X.levels[n - 1].count, -1);
    for (size_t r = 0; r < nd[n - 1].size(); ++r) pos[nd[n - 1][r]] = static_cast<int>(r);
    IntMatrix B = IntMatrix::Zero(static_cast<long>(nd[n - 1].size()), static_cast<long>(nd[n].size()));
    for (size_t c = 0; c < nd[n].size(); ++c)
      for (int i = 0; i <= n; ++i) {
        int y = X.apply(X.faces[n][i], n, n - 1, nd[n][c]);
        if (pos[y] >= 0) B(pos[y], static_cast<long>(c)) += BigInt(i % 2 ? -1 : 1);
      }
    C.boundary.push_back(B);
  }
  std::vector<FgAbelianGroup> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(homology(C, k));
  return out;
}

long euler_characteristic(const FinSimpGSet& X) {
  long chi = 0;
  for (int n = 0; n <= X.N; ++n) chi += (n % 2 ? -1 : 1) * static_cast<long>(X.nondegenerate(n).size());
  return chi;
}

FinSimpGSet build_graph(const GraphSpec& spec, int N) {
  if (N < 0) throw GroupError("truncation must be nonnegative");
  const auto& G = *spec.G;
  const int nv = static_cast<int>(spec.vertices.size());
  const int ne = static_cast<int>(spec.edges.size());
  const int front = spec.front < 0 ? nv : spec.front;
  for (auto& e : spec.edges) {
    if (e.src < 0 || e.src >= nv || e.tgt < 0 || e.tgt >= nv) throw GroupError("edge endpoint out of range");
  }
  FinSimpGSet X;
  X.G = spec.G;
  X.N = N;
  X.mode = spec.mode;
  X.name = spec.name;
  // orbit indices per level
  auto vid = [&](int n, int v) { return v < front ? v : front + n * ne + (v - front); };
  auto eid = [&](int, int e, int k) { return front + (k - 1) * ne + e; };  // k = bar position 1..n
  for (int n = 0; n <= N; ++n) {
    OrbitLevel L;
    for (int v = 0; v < front; ++v) {
      Orbit o = spec.vertices[v];
      o.position = 0;
      L.orbits.push_back(o);
    }
    for (int k = 1; k <= n; ++k)
      for (int e = 0; e < ne; ++e) {
        Orbit o;
        o.isotropy = spec.edges[e].isotropy;
        o.label = spec.edges[e].label + "@" + std::to_string(k);
        o.position = k;
        L.orbits.push_back(o);
      }
    for (int v = front; v < nv; ++v) {
      Orbit o = spec.vertices[v];
      o.position = n + 1;
      L.orbits.push_back(o);
    }
    L.finalize();
    X.levels.push_back(std::move(L));
  }
  const Elem e0 = G.identity();
  X.faces.assign(N + 1, {});
  X.degens.assign(N + 1, {});
  for (int n = 0; n <= N; ++n) {
    const int norb = static_cast<int>(X.levels[n].orbits.size());
    if (n >= 1)
      for (int i = 0; i <= n; ++i) {
        EqMap f;
        f.image.resize(norb);
        for (int v = 0; v < nv; ++v) f.image[vid(n, v)] = {vid(n - 1, v), e0};
        for (int k = 1; k <= n; ++k)
          for (int e = 0; e < ne; ++e) {
            int j = n + 1 - k;  // number of zeros
            int j2 = i < j ? j - 1 : j;
            const auto& E = spec.edges[e];
            OrbitImage im;
            if (j2 == 0)
              im = {vid(n - 1, E.tgt), E.tgt_c};
            else if (j2 == n)
              im = {vid(n - 1, E.src), E.src_c};
            else
              im = {eid(n - 1, e, n - j2), e0};
            f.image[eid(n, e, k)] = im;
          }
        X.faces[n].push_back(std::move(f));
      }
    if (n < N)
      for (int i = 0; i <= n; ++i) {
        EqMap f;
        f.image.resize(norb);
        for (int v = 0; v < nv; ++v) f.image[vid(n, v)] = {vid(n + 1, v), e0};
        for (int k = 1; k <= n; ++k)
          for (int e = 0; e < ne; ++e) {
            int j = n + 1 - k;
            int j2 = i < j ? j + 1 : j;
            f.image[eid(n, e, k)] = {eid(n + 1, e, n + 2 - j2), e0};
          }
        X.degens[n].push_back(std::move(f));
      }
  }
  assign_orbit_types(X);
  return X;
}

namespace {

Orbit vertex(const Subgroup& K, std::string label, OrbitType t = OrbitType::Free) {
  Orbit o;
  o.isotropy = K;
  o.label = std::move(label);
  o.type = t;
  return o;
}

}  // namespace

FinSimpGSet build_constant(const Subgroup& K, int N) {
  GraphSpec s;
  s.G = K.parent();
  s.vertices = {vertex(K, "pt")};
  if (K.is_trivial()) {
    s.mode.kind = IsotropyKind::Free;
  } else {
    s.mode.kind = IsotropyKind::One;
    s.mode.H = K;
  }
  s.name = "point G/" + K.label();
  return build_graph(s, N);
}

FinSimpGSet build_sigma_circle(int N) {
  auto C2 = make_cyclic(2);
  GraphSpec s;
  s.G = C2;
  s.vertices = {vertex(whole_group(C2), "x"), vertex(whole_group(C2), "x'")};
  s.edges = {GraphEdge{trivial_subgroup(C2), "y", 0, 0, 1, 0}};
  s.front = 1;
  s.mode.kind = IsotropyKind::One;
  s.mode.H = whole_group(C2);
  s.name = "S^sigma";
  return build_graph(s, N);
}

FinSimpGSet build_cayley(const GroupPtr& G, const std::vector<Elem>& gens, int N) {
  for (Elem g : gens)
    if (g == G->identity()) throw GroupError("the identity is not allowed as a Cayley generator");
  if (!generated_subgroup(G, gens).is_whole()) throw GroupError("Cayley generators do not generate the group");
  GraphSpec s;
  s.G = G;
  s.vertices = {vertex(trivial_subgroup(G), "v")};
  for (Elem g : gens) s.edges.push_back(GraphEdge{trivial_subgroup(G), "y[" + G->name(g) + "]", 0, 0, 0, g});
  s.mode.kind = IsotropyKind::Free;
  s.name = "Cayley(" + G->label() + ")";
  return build_graph(s, N);
}

FinSimpGSet build_rot_circle(int n, int N) {
  if (n < 1) throw GroupError("rotation circle needs n >= 1");
  auto C = make_cyclic(n);
  if (n == 1) {
    GraphSpec s;
    s.G = C;
    s.vertices = {vertex(trivial_subgroup(C), "v")};
    s.edges = {GraphEdge{trivial_subgroup(C), "y", 0, 0, 0, 0}};
    s.mode.kind = IsotropyKind::Free;
    s.name = "S^1_rot(1)";
    return build_graph(s, N);
  }
  auto X = build_cayley(C, {1}, N);
  X.name = "S^1_rot(" + std::to_string(n) + ")";
  return X;
}

FinSimpGSet build_polygon(int m, int N) {
  if (m < 1) throw GroupError("polygon needs m >= 1");
  auto D = make_dihedral(m);
  auto Hs = generated_subgroup(D, {dihedral_rs(m, 0)});
  auto Hrs = generated_subgroup(D, {dihedral_rs(m, 1)});
  GraphSpec s;
  s.G = D;
  s.vertices = {vertex(Hs, "x", OrbitType::Hp), vertex(Hrs, "x'", OrbitType::H)};
  s.edges = {GraphEdge{trivial_subgroup(D), "y", 0, D->identity(), 1, D->identity()}};
  s.front = 1;
  s.mode.kind = IsotropyKind::Two;
  s.mode.H = Hrs;
  s.mode.Hp = Hs;
  s.mode.phi = dihedral_phi(m);
  s.name = "P_" + std::to_string(2 * m);
  return build_graph(s, N);
}

FinSimpGSet build_permutohedron_skeleton(int n, int N) {
  if (n < 2 || n > 4) throw GroupError("permutohedron skeleton is built for 2 <= n <= 4");
  auto S = make_symmetric(n);
  auto transposition = [&](int i) {
    return generated_subgroup(S, {symmetric_parse_cycles(n, "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")")});
  };
  GraphSpec s;
  s.G = S;
  // midpoint of the edge swapping the values i, i+1 of (1, ..., n)
  auto mid_label = [&](int i) {
    std::string out = "(";
    for (int p = 1; p <= n; ++p) {
      if (p > 1) out += ",";
      if (p == i || p == i + 1)
        out += std::to_string(i) + ".5";
      else
        out += std::to_string(p);
    }
    return out + ")";
  };
  std::string vlabel = "(";
  for (int p = 1; p <= n; ++p) vlabel += (p > 1 ? "," : "") + std::to_string(p);
  vlabel += ")";
  for (int i = n - 1; i >= 2; --i) s.vertices.push_back(vertex(transposition(i), mid_label(i)));
  s.vertices.push_back(vertex(trivial_subgroup(S), vlabel));
  s.front = static_cast<int>(s.vertices.size());
  s.vertices.push_back(vertex(transposition(1), mid_label(1)));
  const int v = s.front - 1;
  for (int i = n - 1; i >= 1; --i) {
    int target = i == 1 ? s.front : (n - 1 - i);
    s.edges.push_back(GraphEdge{trivial_subgroup(S), "h" + std::to_string(i), v, S->identity(), target, S->identity()});
  }
  s.mode.kind = IsotropyKind::One;
  s.mode.H = transposition(1);
  s.name = "permutohedron_" + std::to_string(n);
  return build_graph(s, N);
}

}  // namespace eloday
