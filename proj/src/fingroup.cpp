#include "eloday/fingroup.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eloday {

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<int> mult, std::vector<std::string> names, std::string label)
    : n_(static_cast<int>(names.size())),
      mult_(std::move(mult)),
      names_(std::move(names)),
      label_(std::move(label)) {
  if (n_ < 1) throw GroupError("group must have at least one element");
  if (n_ > kMaxGroupOrder) throw GroupError("group order exceeds the size guard");
  if (static_cast<int>(mult_.size()) != n_ * n_) throw GroupError("multiplication table has wrong size");
  for (int v : mult_)
    if (v < 0 || v >= n_) throw GroupError("multiplication table entry out of range");
  for (int a = 0; a < n_; ++a) {
    std::vector<char> row(n_, 0), col(n_, 0);
    for (int b = 0; b < n_; ++b) {
      row[mul(a, b)] = 1;
      col[mul(b, a)] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != n_ || std::count(col.begin(), col.end(), 1) != n_)
      throw GroupError("multiplication is not a bijection in each argument");
  }
  e_ = -1;
  for (int a = 0; a < n_ && e_ < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e_ = a;
  }
  if (e_ < 0) throw GroupError("no identity element");
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw GroupError("multiplication is not associative");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == e_) inv_[a] = b;
}

Elem FiniteGroup::pow(Elem a, long k) const {
  long o = elem_order(a);
  k %= o;
  if (k < 0) k += o;
  Elem r = e_;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::elem_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    if (!is_central(a)) return false;
  return true;
}

bool FiniteGroup::is_central(Elem a) const {
  for (int b = 0; b < n_; ++b)
    if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Elem> FiniteGroup::find(const std::string& name) const {
  std::string key = strip_spaces(name);
  for (int a = 0; a < n_; ++a)
    if (strip_spaces(names_[a]) == key) return a;
  if (key == "e" || key == "id" || key == "1") return e_;
  return std::nullopt;
}

Elem FiniteGroup::parse(const std::string& name) const {
  if (auto a = find(name)) return *a;
  if (!name.empty() && name[0] == '(' && !label_.empty() && label_[0] == 'S') {
    int k = std::stoi(label_.substr(1));
    return symmetric_parse_cycles(k, name);
  }
  // Numeric indices are accepted as a fallback.
  try {
    size_t used = 0;
    int v = std::stoi(name, &used);
    if (used == name.size() && v >= 0 && v < n_) return v;
  } catch (const std::exception&) {
  }
  throw GroupError("unknown group element '" + name + "' in " + label_);
}

std::vector<Elem> FiniteGroup::generators() const {
  std::vector<Elem> gens;
  std::vector<char> span(n_, 0);
  span[e_] = 1;
  for (int a = 0; a < n_; ++a) {
    if (span[a]) continue;
    gens.push_back(a);
    std::vector<Elem> todo;
    for (int x = 0; x < n_; ++x)
      if (span[x]) todo.push_back(x);
    while (!todo.empty()) {
      Elem x = todo.back();
      todo.pop_back();
      for (Elem g : gens) {
        Elem y = mul(x, g);
        if (!span[y]) {
          span[y] = 1;
          todo.push_back(y);
        }
      }
    }
  }
  return gens;
}

GroupPtr make_cyclic(int n) {
  if (n < 1) throw GroupError("cyclic group needs n >= 1");
  if (n > kMaxGroupOrder) throw GroupError("group order exceeds the size guard");
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a);
    for (int b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names), "C" + std::to_string(n));
}

GroupPtr make_dihedral(int m) {
  if (m < 1) throw GroupError("dihedral group needs m >= 1");
  int n = 2 * m;
  if (n > kMaxGroupOrder) throw GroupError("group order exceeds the size guard");
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int k = 0; k < m; ++k) {
    std::string rk = k == 0 ? "" : k == 1 ? "r" : "r^" + std::to_string(k);
    names[k] = k == 0 ? "e" : rk;
    names[m + k] = k == 0 ? "s" : rk + " s";
  }
  // (r^a s^i)(r^b s^j) = r^(a + (-1)^i b) s^(i+j)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int a = x % m, i = x / m, b = y % m, j = y / m;
      int k = ((a + (i ? -b : b)) % m + m) % m;
      t[x * n + y] = ((i + j) % 2) * m + k;
    }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names), "D" + std::to_string(n));
}

namespace {

std::vector<std::vector<int>> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string cycle_name(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

}  // namespace

GroupPtr make_symmetric(int n) {
  if (n < 1) throw GroupError("symmetric group needs n >= 1");
  if (n > 8) throw GroupError("symmetric group size guard is n <= 8");
  auto perms = all_perms(n);
  int N = static_cast<int>(perms.size());
  if (N > kMaxGroupOrder) throw GroupError("group order exceeds the size guard");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;
  std::vector<int> t(N * N);
  std::vector<std::string> names(N);
  for (int a = 0; a < N; ++a) {
    names[a] = cycle_name(perms[a]);
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a * N + b] = index[c];
    }
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names), "S" + std::to_string(n));
}

std::vector<int> symmetric_perm(int n, Elem a) {
  auto perms = all_perms(n);
  return perms.at(a);
}

Elem symmetric_elem(int n, const std::vector<int>& perm) {
  auto perms = all_perms(n);
  auto it = std::find(perms.begin(), perms.end(), perm);
  if (it == perms.end()) throw GroupError("not a permutation");
  return static_cast<Elem>(it - perms.begin());
}

Elem symmetric_parse_cycles(int n, const std::string& cycles) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string s = strip_spaces(cycles);
  if (s == "id" || s == "e" || s.empty()) return symmetric_elem(n, p);
  // Cycles compose right to left, as group elements do.
  std::vector<std::vector<int>> cyc;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') throw GroupError("bad cycle notation '" + cycles + "'");
    size_t j = s.find(')', i);
    if (j == std::string::npos) throw GroupError("bad cycle notation '" + cycles + "'");
    std::vector<int> c;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      int v = std::stoi(tok) - 1;
      if (v < 0 || v >= n) throw GroupError("cycle entry out of range in '" + cycles + "'");
      c.push_back(v);
    }
    cyc.push_back(c);
    i = j + 1;
  }
  for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) {
    std::vector<int> q(n);
    std::iota(q.begin(), q.end(), 0);
    const auto& c = *it;
    for (size_t k = 0; k < c.size(); ++k) q[c[k]] = c[(k + 1) % c.size()];
    std::vector<int> r(n);
    for (int x = 0; x < n; ++x) r[x] = q[p[x]];
    p = r;
  }
  return symmetric_elem(n, p);
}

GroupPtr subgroup_as_group(const Subgroup& H) {
  const auto& G = *H.parent();
  int n = H.order();
  std::vector<int> t(n * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = G.name(H.members()[i]);
    for (int j = 0; j < n; ++j) t[i * n + j] = H.position(G.mul(H.members()[i], H.members()[j]));
  }
  return std::make_shared<FiniteGroup>(std::move(t), std::move(names), H.label());
}

GroupPtr group_by_name(const std::string& raw) {
  std::string name;
  for (char c : raw) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "a4") {
    auto s4 = make_symmetric(4);
    auto A = generated_subgroup(s4, {s4->parse("(1,2,3)"), s4->parse("(2,3,4)")});
    auto g = subgroup_as_group(A);
    return std::make_shared<FiniteGroup>(g->table(), g->names(), "A4");
  }
  if (name.size() < 2) throw GroupError("unknown group '" + raw + "'");
  int k = 0;
  try {
    k = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw GroupError("unknown group '" + raw + "'");
  }
  switch (name[0]) {
    case 'c':
      return make_cyclic(k);
    case 'd':
      if (k % 2 != 0) throw GroupError("dihedral groups are named by their order, e.g. d6");
      return make_dihedral(k / 2);
    case 's':
      return make_symmetric(k);
    default:
      throw GroupError("unknown group '" + raw + "'");
  }
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) : parent_(std::move(parent)) {
  const auto& G = *parent_;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  mask_.assign(G.order(), 0);
  pos_.assign(G.order(), -1);
  for (size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || members_[i] >= G.order()) throw GroupError("subgroup member out of range");
    mask_[members_[i]] = 1;
    pos_[members_[i]] = static_cast<int>(i);
  }
  if (members_.empty() || !mask_[G.identity()]) throw GroupError("subgroup must contain the identity");
  for (Elem a : members_) {
    if (!mask_[G.inv(a)]) throw GroupError("subgroup not closed under inverses");
    for (Elem b : members_)
      if (!mask_[G.mul(a, b)]) throw GroupError("subgroup not closed under multiplication");
  }
}

std::string Subgroup::label() const {
  const auto& G = *parent_;
  if (is_trivial()) return "e";
  if (is_whole()) return G.label();
  // Shortest generating set found greedily.
  std::vector<Elem> gens;
  std::vector<char> span(G.order(), 0);
  span[G.identity()] = 1;
  for (Elem a : members_) {
    if (span[a]) continue;
    gens.push_back(a);
    Subgroup s = generated_subgroup(parent_, gens);
    for (Elem x : s.members()) span[x] = 1;
  }
  std::string out = "<";
  for (size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + G.name(gens[i]);
  return out + ">";
}

Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup(G, {G->identity()}); }

Subgroup whole_group(const GroupPtr& G) {
  std::vector<Elem> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G, all);
}

Subgroup generated_subgroup(const GroupPtr& G, const std::vector<Elem>& gens) {
  std::vector<char> in(G->order(), 0);
  std::vector<Elem> members{G->identity()}, todo{G->identity()};
  in[G->identity()] = 1;
  while (!todo.empty()) {
    Elem x = todo.back();
    todo.pop_back();
    for (Elem g : gens) {
      if (g < 0 || g >= G->order()) throw GroupError("generator out of range");
      Elem y = G->mul(x, g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        todo.push_back(y);
      }
    }
  }
  return Subgroup(G, members);
}

Subgroup conjugate_subgroup(const Subgroup& H, Elem g) {
  std::vector<Elem> m;
  for (Elem h : H.members()) m.push_back(H.parent()->conj(g, h));
  return Subgroup(H.parent(), m);
}

bool is_subgroup_of(const Subgroup& K, const Subgroup& H) {
  for (Elem k : K.members())
    if (!H.contains(k)) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  // Every subgroup is generated by at most log2|G| elements; closing under
  // joins with cyclic subgroups reaches all of them.
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier;
  for (Elem a = 0; a < G->order(); ++a) {
    auto C = generated_subgroup(G, {a});
    if (seen.insert(C.members()).second) {
      out.push_back(C);
      frontier.push_back(C);
    }
  }
  std::vector<Subgroup> cyclics = out;
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& S : frontier)
      for (const auto& C : cyclics) {
        if (is_subgroup_of(C, S)) continue;
        std::vector<Elem> gens = S.members();
        gens.insert(gens.end(), C.members().begin(), C.members().end());
        auto J = generated_subgroup(G, gens);
        if (seen.insert(J.members()).second) {
          out.push_back(J);
          next.push_back(J);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Subgroup> subgroup_class_reps(const GroupPtr& G) {
  std::vector<Subgroup> reps;
  std::set<std::vector<Elem>> covered;
  for (const auto& H : all_subgroups(G)) {
    if (covered.count(H.members())) continue;
    reps.push_back(H);
    for (Elem g = 0; g < G->order(); ++g) covered.insert(conjugate_subgroup(H, g).members());
  }
  return reps;
}

std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& G) {
  std::vector<char> seen(G->order(), 0);
  std::vector<std::vector<Elem>> out;
  for (Elem a = 0; a < G->order(); ++a) {
    if (seen[a]) continue;
    std::set<Elem> cls;
    for (Elem g = 0; g < G->order(); ++g) cls.insert(G->conj(g, a));
    for (Elem x : cls) seen[x] = 1;
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

Transversal::Transversal(Subgroup H, std::vector<Elem> reps) : H_(std::move(H)), reps_(std::move(reps)) {
  const auto& G = *H_.parent();
  if (static_cast<int>(reps_.size()) != H_.index()) throw GroupError("transversal has the wrong length");
  if (reps_.empty() || !H_.contains(reps_[0])) throw GroupError("first transversal element must lie in H");
  coset_.assign(G.order(), -1);
  for (int i = 0; i < static_cast<int>(reps_.size()); ++i)
    for (Elem h : H_.members()) {
      Elem g = G.mul(reps_[i], h);
      if (coset_[g] >= 0) throw GroupError("transversal representatives share a coset");
      coset_[g] = i;
    }
}

Elem Transversal::h_part(Elem g) const {
  const auto& G = *H_.parent();
  return G.mul(G.inv(reps_[coset_[g]]), g);
}

bool Transversal::is_canonical() const {
  const auto& G = *H_.parent();
  for (int i = 0; i < size(); ++i)
    for (Elem h : H_.members())
      if (G.mul(reps_[i], h) < reps_[i]) return false;
  return reps_[0] == G.identity();
}

Transversal canonical_transversal(const Subgroup& H) {
  const auto& G = *H.parent();
  std::vector<char> done(G.order(), 0);
  std::vector<Elem> reps;
  for (Elem g = 0; g < G.order(); ++g) {
    if (done[g]) continue;
    reps.push_back(g);
    for (Elem h : H.members()) done[G.mul(g, h)] = 1;
  }
  // e is the least element of its coset only if it has index 0; put its coset first.
  auto it = std::find_if(reps.begin(), reps.end(), [&](Elem g) { return H.contains(g); });
  std::rotate(reps.begin(), it, it + 1);
  reps[0] = G.identity();
  return Transversal(H, reps);
}

Subgroup normalizer(const Subgroup& H) {
  const auto& G = H.parent();
  std::vector<Elem> n;
  for (Elem g = 0; g < G->order(); ++g)
    if (conjugate_subgroup(H, g) == H) n.push_back(g);
  return Subgroup(G, n);
}

QuotientMap quotient_group(const Subgroup& N, const Subgroup& H) {
  const auto& G = *N.parent();
  if (!is_subgroup_of(H, N)) throw GroupError("quotient needs H inside N");
  for (Elem n : N.members())
    if (!(conjugate_subgroup(H, n) == H)) throw GroupError("H is not normal in N");
  QuotientMap q;
  q.proj.assign(G.order(), -1);
  for (Elem n : N.members()) {
    if (q.proj[n] >= 0) continue;
    int idx = static_cast<int>(q.lifts.size());
    q.lifts.push_back(n);
    for (Elem h : H.members()) q.proj[G.mul(n, h)] = idx;
  }
  int k = static_cast<int>(q.lifts.size());
  std::vector<int> t(k * k);
  std::vector<std::string> names(k);
  for (int a = 0; a < k; ++a) {
    names[a] = "[" + G.name(q.lifts[a]) + "]";
    for (int b = 0; b < k; ++b) t[a * k + b] = q.proj[G.mul(q.lifts[a], q.lifts[b])];
  }
  q.quotient = std::make_shared<FiniteGroup>(std::move(t), std::move(names), N.label() + "/" + H.label());
  return q;
}

SubgroupInfo subgroup_tools(const Subgroup& H) {
  const auto& G = H.parent();
  SubgroupInfo info;
  std::set<std::vector<Elem>> seen;
  for (Elem g = 0; g < G->order(); ++g) {
    auto C = conjugate_subgroup(H, g);
    if (seen.insert(C.members()).second) info.conjugates.push_back(C);
  }
  std::sort(info.conjugates.begin(), info.conjugates.end());
  info.normalizer = normalizer(H);
  info.weyl = quotient_group(info.normalizer, H);
  info.transversal = canonical_transversal(H);
  info.is_normal = info.normalizer.is_whole();
  return info;
}

GroupIso::GroupIso(GroupPtr dom, GroupPtr cod, std::vector<Elem> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  if (dom_->order() != cod_->order() || static_cast<int>(map_.size()) != dom_->order())
    throw GroupError("isomorphism needs groups of equal order");
  std::vector<char> hit(cod_->order(), 0);
  for (Elem v : map_) {
    if (v < 0 || v >= cod_->order() || hit[v]) throw GroupError("map is not a bijection");
    hit[v] = 1;
  }
  for (Elem a = 0; a < dom_->order(); ++a)
    for (Elem b = 0; b < dom_->order(); ++b)
      if (map_[dom_->mul(a, b)] != cod_->mul(map_[a], map_[b])) throw GroupError("map is not multiplicative");
}

GroupIso GroupIso::inverse() const {
  std::vector<Elem> inv(map_.size());
  for (size_t a = 0; a < map_.size(); ++a) inv[map_[a]] = static_cast<Elem>(a);
  return GroupIso(cod_, dom_, inv);
}

bool GroupIso::is_identity() const {
  for (size_t a = 0; a < map_.size(); ++a)
    if (map_[a] != static_cast<Elem>(a)) return false;
  return dom_ == cod_ || dom_->table() == cod_->table();
}

Subgroup GroupIso::image(const Subgroup& H) const {
  std::vector<Elem> m;
  for (Elem h : H.members()) m.push_back(map_[h]);
  return Subgroup(cod_, m);
}

GroupIso compose(const GroupIso& outer, const GroupIso& inner) {
  if (inner.codomain()->table() != outer.domain()->table()) throw GroupError("isomorphisms do not compose");
  std::vector<Elem> m(inner.map().size());
  for (size_t a = 0; a < m.size(); ++a) m[a] = outer(inner(static_cast<Elem>(a)));
  return GroupIso(inner.domain(), outer.codomain(), m);
}

GroupIso identity_iso(const GroupPtr& G) {
  std::vector<Elem> m(G->order());
  std::iota(m.begin(), m.end(), 0);
  return GroupIso(G, G, m);
}

GroupIso conjugation(const GroupPtr& G, Elem g) {
  std::vector<Elem> m(G->order());
  for (Elem x = 0; x < G->order(); ++x) m[x] = G->conj(g, x);
  return GroupIso(G, G, m);
}

std::optional<GroupIso> extend_to_iso(const GroupPtr& dom, const GroupPtr& cod, const std::vector<Elem>& gens,
                                      const std::vector<Elem>& images) {
  int n = dom->order();
  if (cod->order() != n || gens.size() != images.size()) return std::nullopt;
  std::vector<Elem> m(n, -1);
  m[dom->identity()] = cod->identity();
  std::vector<Elem> todo{dom->identity()};
  while (!todo.empty()) {
    Elem x = todo.back();
    todo.pop_back();
    for (size_t i = 0; i < gens.size(); ++i) {
      Elem y = dom->mul(x, gens[i]);
      Elem fy = cod->mul(m[x], images[i]);
      if (m[y] < 0) {
        m[y] = fy;
        todo.push_back(y);
      } else if (m[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (std::count(m.begin(), m.end(), -1)) return std::nullopt;
  try {
    return GroupIso(dom, cod, m);
  } catch (const GroupError&) {
    return std::nullopt;
  }
}

GroupIso dihedral_phi(int m) {
  auto D = make_dihedral(m);
  // phi(r) = r and phi(rs) = s determine phi on the generators r and rs.
  auto phi = extend_to_iso(D, D, {dihedral_r(m, 1), dihedral_rs(m, 1)}, {dihedral_r(m, 1), dihedral_rs(m, 0)});
  if (!phi) throw GroupError("internal: no dihedral automorphism with r -> r, rs -> s");
  return *phi;
}

std::optional<Elem> inner_witness(const GroupIso& psi) {
  const auto& G = psi.domain();
  if (psi.codomain()->table() != G->table()) throw GroupError("inner test needs an automorphism");
  for (Elem g = 0; g < G->order(); ++g) {
    bool ok = true;
    for (Elem x = 0; x < G->order() && ok; ++x) ok = G->conj(g, x) == psi(x);
    if (ok) return g;
  }
  return std::nullopt;
}

bool is_inner(const GroupIso& psi) { return inner_witness(psi).has_value(); }

std::vector<GroupIso> automorphisms(const GroupPtr& G) {
  auto gens = G->generators();
  std::vector<GroupIso> out;
  std::vector<Elem> img(gens.size(), 0);
  // Enumerate images of the generators, element orders must match.
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == gens.size()) {
      if (auto a = extend_to_iso(G, G, gens, img)) out.push_back(*a);
      return;
    }
    for (Elem y = 0; y < G->order(); ++y) {
      if (G->elem_order(y) != G->elem_order(gens[i])) continue;
      img[i] = y;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

}  // namespace eloday
