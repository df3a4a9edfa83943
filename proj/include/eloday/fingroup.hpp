#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eloday {

using Elem = int;

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGroupOrder = 48;

class FiniteGroup {
 public:
  // mult is row-major: mult[a * order + b] = a b.
  FiniteGroup(std::vector<int> mult, std::vector<std::string> names, std::string label = "");

  int order() const { return n_; }
  Elem identity() const { return e_; }
  Elem mul(Elem a, Elem b) const { return mult_[a * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv_[g]); }
  Elem pow(Elem a, long k) const;
  int elem_order(Elem a) const;
  bool is_abelian() const;
  bool is_central(Elem a) const;

  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table() const { return mult_; }
  const std::string& label() const { return label_; }
  std::optional<Elem> find(const std::string& name) const;
  Elem parse(const std::string& name) const;

  // Greedy generating set: repeatedly adds the least element outside the span.
  std::vector<Elem> generators() const;

 private:
  int n_;
  Elem e_ = 0;
  std::vector<int> mult_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  std::string label_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_cyclic(int n);
GroupPtr make_dihedral(int m);
GroupPtr make_symmetric(int n);
// Looks up "c<n>", "d<2m>", "s<n>", "a4".
GroupPtr group_by_name(const std::string& name);

// Dihedral elements: r^k has index k, r^k s has index m + k.
inline Elem dihedral_r(int m, int k) { return ((k % m) + m) % m; }
inline Elem dihedral_rs(int m, int k) { return m + ((k % m) + m) % m; }

// Permutation data behind make_symmetric: perm[i] is the image of i (0-based).
std::vector<int> symmetric_perm(int n, Elem a);
Elem symmetric_elem(int n, const std::vector<int>& perm);
// Cycle notation "(1,2,3)" or a product "(1,2)(3,4)".
Elem symmetric_parse_cycles(int n, const std::string& cycles);

class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  int index() const { return parent_->order() / order(); }
  bool contains(Elem g) const { return mask_[g] != 0; }
  bool is_trivial() const { return members_.size() == 1; }
  bool is_whole() const { return order() == parent_->order(); }
  // Position of h in the sorted member list.
  int position(Elem h) const { return pos_[h]; }
  std::string label() const;

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }
  bool operator<(const Subgroup& o) const { return members_ < o.members_; }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<char> mask_;
  std::vector<int> pos_;
};

Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup whole_group(const GroupPtr& G);
Subgroup generated_subgroup(const GroupPtr& G, const std::vector<Elem>& gens);
Subgroup conjugate_subgroup(const Subgroup& H, Elem g);  // g H g^-1
bool is_subgroup_of(const Subgroup& K, const Subgroup& H);
std::vector<Subgroup> all_subgroups(const GroupPtr& G);
// One representative per conjugacy class, each the least subgroup in its class.
std::vector<Subgroup> subgroup_class_reps(const GroupPtr& G);
std::vector<std::vector<Elem>> conjugacy_classes(const GroupPtr& G);

class Transversal {
 public:
  Transversal() = default;
  // reps must contain one element per left coset, reps[0] in H.
  Transversal(Subgroup H, std::vector<Elem> reps);

  const Subgroup& subgroup() const { return H_; }
  const std::vector<Elem>& reps() const { return reps_; }
  int size() const { return static_cast<int>(reps_.size()); }
  Elem rep(int i) const { return reps_[i]; }
  // g = reps[coset_of(g)] * h_part(g)
  int coset_of(Elem g) const { return coset_[g]; }
  Elem h_part(Elem g) const;
  bool is_canonical() const;

 private:
  Subgroup H_;
  std::vector<Elem> reps_;
  std::vector<int> coset_;
};

// Minimal-index representative of each left coset; the coset of e comes first.
Transversal canonical_transversal(const Subgroup& H);

struct QuotientMap {
  GroupPtr quotient;
  std::vector<int> proj;      // parent element -> quotient element, -1 outside the domain
  std::vector<Elem> lifts;    // quotient element -> minimal-index lift
};

struct SubgroupInfo {
  std::vector<Subgroup> conjugates;
  Subgroup normalizer;
  QuotientMap weyl;
  Transversal transversal;
  bool is_normal = false;
};

SubgroupInfo subgroup_tools(const Subgroup& H);
Subgroup normalizer(const Subgroup& H);

// N / H for H normal in N (both subgroups of the same parent).
QuotientMap quotient_group(const Subgroup& N, const Subgroup& H);

class GroupIso {
 public:
  GroupIso() = default;
  GroupIso(GroupPtr dom, GroupPtr cod, std::vector<Elem> map);

  const GroupPtr& domain() const { return dom_; }
  const GroupPtr& codomain() const { return cod_; }
  Elem operator()(Elem g) const { return map_[g]; }
  const std::vector<Elem>& map() const { return map_; }
  GroupIso inverse() const;
  bool is_identity() const;
  Subgroup image(const Subgroup& H) const;

 private:
  GroupPtr dom_, cod_;
  std::vector<Elem> map_;
};

GroupIso compose(const GroupIso& outer, const GroupIso& inner);
GroupIso identity_iso(const GroupPtr& G);
// x -> g x g^-1
GroupIso conjugation(const GroupPtr& G, Elem g);
// The automorphism of D_2m with r -> r, rs -> s.
GroupIso dihedral_phi(int m);
std::optional<Elem> inner_witness(const GroupIso& psi);
bool is_inner(const GroupIso& psi);
std::vector<GroupIso> automorphisms(const GroupPtr& G);
// Extends a map on generators to a homomorphism, if one exists and is bijective.
std::optional<GroupIso> extend_to_iso(const GroupPtr& dom, const GroupPtr& cod,
                                      const std::vector<Elem>& gens,
                                      const std::vector<Elem>& images);

// The subgroup as a group in its own right, elements ordered as in H.members().
GroupPtr subgroup_as_group(const Subgroup& H);

}  // namespace eloday
