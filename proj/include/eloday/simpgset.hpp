#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eloday/exactalg.hpp"
#include "eloday/fingroup.hpp"

namespace eloday {

// Which coefficient an orbit receives in a Loday construction.
enum class OrbitType { Free, H, Hp, K };

struct Orbit {
  Subgroup isotropy;  // stabilizer of the representative
  std::string label;
  OrbitType type = OrbitType::Free;
  int k_index = -1;        // for OrbitType::K: index into the mode's subgroup list
  Elem conj = 0;           // isotropy = conj * (type subgroup) * conj^-1, least such element
  int position = -1;       // place along the simplex for graph levels: 0 front, n + 1 back
};

struct OrbitLevel {
  std::vector<Orbit> orbits;
  std::vector<int> offset;  // first element index of each orbit
  std::vector<Transversal> transversal;  // canonical transversal of each isotropy
  int count = 0;
  void finalize();
};

// x_a -> c x_b, a map of orbits G/K_a -> G/K_b.
struct OrbitImage {
  int orbit;
  Elem c;
};

struct EqMap {
  std::vector<OrbitImage> image;  // one per source orbit
};

enum class IsotropyKind { Free, One, Two, Normal };

struct IsotropyMode {
  IsotropyKind kind = IsotropyKind::Free;
  Subgroup H, Hp;
  GroupIso phi;              // Two: phi(H) = Hp
  std::vector<Subgroup> Ks;  // Normal: subgroups of the normal subgroup H
};

const char* isotropy_kind_name(IsotropyKind k);

struct FinSimpGSet {
  GroupPtr G;
  int N = 0;
  std::vector<OrbitLevel> levels;               // 0..N
  std::vector<std::vector<EqMap>> faces;        // faces[n][i] : X_n -> X_{n-1}, n >= 1
  std::vector<std::vector<EqMap>> degens;       // degens[n][j] : X_n -> X_{n+1}, n < N
  IsotropyMode mode;
  std::string name;

  // Elements of level n are numbered orbit by orbit along the canonical transversal.
  int element(int n, int orbit, Elem g) const;
  std::pair<int, int> locate(int n, int elem) const;  // (orbit, coset)
  Elem rep_of(int n, int elem) const;                 // transversal element of the coset
  int apply(const EqMap& f, int n_src, int n_tgt, int elem) const;
  int act(Elem g, int n, int elem) const;
  // Elements not in the image of any degeneracy.
  std::vector<int> nondegenerate(int n) const;
};

struct ValidationReport {
  bool ok = true;
  std::string message;
};

ValidationReport validate(const FinSimpGSet& X);

// Homology of the underlying simplicial set (normalized chains over Z) in degrees 0..max_k.
std::vector<FgAbelianGroup> underlying_homology(const FinSimpGSet& X, int max_k);
long euler_characteristic(const FinSimpGSet& X);

// One-dimensional spaces presented by vertex and edge orbits.
struct GraphEdge {
  Subgroup isotropy;
  std::string label;
  int src;  // vertex orbit of d_1
  Elem src_c;
  int tgt;  // vertex orbit of d_0
  Elem tgt_c;
};

struct GraphSpec {
  GroupPtr G;
  std::vector<Orbit> vertices;
  std::vector<GraphEdge> edges;
  int front = -1;  // vertex orbits [0, front) precede the edges in each level, the rest follow; -1 = all front
  IsotropyMode mode;
  std::string name;
};

// Level n lists front vertex orbits, then edge orbits for bar positions 1..n, then back vertex orbits.
FinSimpGSet build_graph(const GraphSpec& spec, int N);
// Fills type/conj of every orbit from isotropy and mode; throws GroupError on violations.
void assign_orbit_types(FinSimpGSet& X);

FinSimpGSet build_constant(const Subgroup& K, int N);
FinSimpGSet build_sigma_circle(int N);
FinSimpGSet build_rot_circle(int n, int N);
FinSimpGSet build_polygon(int m, int N);
FinSimpGSet build_cayley(const GroupPtr& G, const std::vector<Elem>& gens, int N);
FinSimpGSet build_permutohedron_skeleton(int n, int N);

}  // namespace eloday
