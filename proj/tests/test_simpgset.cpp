#include <doctest.h>

#include <functional>
#include <numeric>

#include "eloday/simpgset.hpp"

using namespace eloday;

namespace {

// b0 and b1 of the 1-skeleton from vertex and edge counts plus a union-find pass.
std::pair<int, int> graph_betti(const FinSimpGSet& X) {
  auto nd1 = X.nondegenerate(1);
  int V = X.levels[0].count;
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  int comps = V;
  for (int x : nd1) {
    int a = find(X.apply(X.faces[1][0], 1, 0, x)), b = find(X.apply(X.faces[1][1], 1, 0, x));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return {comps, static_cast<int>(nd1.size()) - V + comps};
}

void check_graph_homology(const FinSimpGSet& X) {
  auto H = underlying_homology(X, 2);
  auto [b0, b1] = graph_betti(X);
  CHECK(H[0].free_rank() == b0);
  CHECK(H[0].torsion().empty());
  CHECK(H[1].free_rank() == b1);
  CHECK(H[1].torsion().empty());
  CHECK(H[2].is_zero());
  CHECK(euler_characteristic(X) == b0 - b1);
}

}  // namespace

TEST_CASE("polygon orbits and stabilizers") {
  auto X = build_polygon(2, 3);
  auto v = validate(X);
  CHECK_MESSAGE(v.ok, v.message);
  REQUIRE(X.levels[0].orbits.size() == 2);
  CHECK(X.levels[0].count == 4);
  CHECK(X.levels[1].count == 4 + 4);
  CHECK(X.levels[0].orbits[0].type == OrbitType::Hp);
  CHECK(X.levels[0].orbits[1].type == OrbitType::H);
  CHECK(X.levels[2].orbits.size() == 4);
  CHECK(X.nondegenerate(1).size() == 4);
  CHECK(X.nondegenerate(2).empty());
  check_graph_homology(X);

  auto P8 = build_polygon(4, 3);
  const auto& D = *P8.G;
  Elem r = dihedral_r(4, 1);
  int x1 = P8.element(0, 0, r);
  std::vector<Elem> stab;
  for (Elem g = 0; g < D.order(); ++g)
    if (P8.act(g, 0, x1) == x1) stab.push_back(g);
  CHECK(Subgroup(P8.G, stab) == generated_subgroup(P8.G, {dihedral_rs(4, 2)}));
  CHECK(validate(P8).ok);
  check_graph_homology(P8);

  for (int m : {1, 3, 5}) {
    auto P = build_polygon(m, 3);
    auto r2 = validate(P);
    CHECK_MESSAGE(r2.ok, r2.message);
    CHECK(P.levels[0].orbits[0].type == OrbitType::Hp);
    CHECK(P.levels[0].orbits[1].type == OrbitType::H);
    check_graph_homology(P);
  }
}

TEST_CASE("corrupted faces are reported") {
  auto X = build_polygon(3, 3);
  REQUIRE(validate(X).ok);
  auto bad = X;
  bad.faces[1][0].image[0].c = dihedral_r(3, 1);
  auto v = validate(bad);
  CHECK_FALSE(v.ok);
  CHECK(v.message.find("d_0") != std::string::npos);

  auto bad_edge = X;
  bad_edge.faces[2][0].image[1].c = dihedral_r(3, 1);
  CHECK_FALSE(validate(bad_edge).ok);

  auto ill = X;
  // the free edge cannot land on G/<s> and back with an element outside the normalizer
  ill.degens[0][0].image[0] = {1, dihedral_r(3, 1)};
  auto w = validate(ill);
  CHECK_FALSE(w.ok);
}

TEST_CASE("sigma circle") {
  auto X = build_sigma_circle(4);
  auto v = validate(X);
  CHECK_MESSAGE(v.ok, v.message);
  for (int n = 0; n <= 4; ++n) CHECK(X.levels[n].count == 2 + 2 * n);
  CHECK(X.nondegenerate(0).size() == 2);
  CHECK(X.nondegenerate(1).size() == 2);
  CHECK(euler_characteristic(X) == 0);
  check_graph_homology(X);
  CHECK(X.levels[1].orbits[0].type == OrbitType::H);
  CHECK(X.levels[1].orbits[1].type == OrbitType::Free);
  CHECK(X.levels[1].orbits[1].position == 1);
  CHECK(X.levels[1].orbits[2].position == 2);
}

TEST_CASE("rotation circles and Cayley graphs") {
  auto X = build_rot_circle(1, 4);
  CHECK(validate(X).ok);
  CHECK(X.levels[0].count == 1);
  CHECK(X.nondegenerate(1).size() == 1);
  check_graph_homology(X);
  auto H = underlying_homology(X, 2);
  CHECK(H[1].free_rank() == 1);

  auto C5 = build_rot_circle(5, 3);
  CHECK(validate(C5).ok);
  CHECK(C5.levels[0].count == 5);
  check_graph_homology(C5);

  auto S3 = make_symmetric(3);
  auto Y = build_cayley(S3, {symmetric_parse_cycles(3, "(1,2)"), symmetric_parse_cycles(3, "(2,3)")}, 3);
  CHECK(validate(Y).ok);
  CHECK(Y.levels[0].count == 6);
  CHECK(Y.nondegenerate(1).size() == 12);
  auto [b0, b1] = graph_betti(Y);
  CHECK(b0 == 1);
  CHECK(b1 == 7);
  check_graph_homology(Y);

  CHECK_THROWS_AS(build_cayley(S3, {symmetric_parse_cycles(3, "(1,2)")}, 2), GroupError);
  CHECK_THROWS_AS(build_cayley(S3, {S3->identity()}, 2), GroupError);
}

TEST_CASE("permutohedron skeleta") {
  auto X = build_permutohedron_skeleton(3, 3);
  auto v = validate(X);
  CHECK_MESSAGE(v.ok, v.message);
  const auto& L = X.levels[1].orbits;
  REQUIRE(L.size() == 5);
  CHECK(L[0].label == "(1,2.5,2.5)");
  CHECK(L[1].label == "(1,2,3)");
  CHECK(L[2].isotropy.is_trivial());
  CHECK(L[3].isotropy.is_trivial());
  CHECK(L[4].label == "(1.5,1.5,3)");
  CHECK(X.levels[0].count == 12);
  auto [b0, b1] = graph_betti(X);
  CHECK(b0 == 1);
  CHECK(b1 == 1);
  check_graph_homology(X);

  auto Y = build_permutohedron_skeleton(4, 2);
  CHECK(validate(Y).ok);
  CHECK(Y.levels[0].count == 60);
  CHECK(graph_betti(Y).second == 13);

  auto Z = build_permutohedron_skeleton(2, 2);
  CHECK(validate(Z).ok);
  CHECK(graph_betti(Z).second == 0);
}

TEST_CASE("points and isotropy modes") {
  auto D6 = make_dihedral(3);
  auto s = generated_subgroup(D6, {dihedral_rs(3, 0)});
  auto P = build_constant(s, 3);
  CHECK(validate(P).ok);
  CHECK(P.levels[2].count == 3);
  CHECK(P.nondegenerate(1).empty());
  CHECK(euler_characteristic(P) == 3);

  auto X = build_polygon(3, 1);
  X.mode.kind = IsotropyKind::Free;
  CHECK_FALSE(validate(X).ok);

  GraphSpec bad;
  bad.G = D6;
  Orbit o;
  o.isotropy = whole_group(D6);
  o.label = "pt";
  bad.vertices = {o};
  bad.mode.kind = IsotropyKind::One;
  bad.mode.H = s;
  CHECK_THROWS_AS(build_graph(bad, 1), GroupError);
}
