#include <doctest.h>

#include <random>

#include "eloday/ring.hpp"
#include "eloday/wiring.hpp"

using namespace eloday;

namespace {

IntVector ivec(std::initializer_list<long> v) {
  IntVector x(static_cast<long>(v.size()));
  long i = 0;
  for (long a : v) x(i++) = BigInt(a);
  return x;
}

// Product computed directly in presentation coordinates.
IntVector pres_product(const RingPresentation& p, const IntVector& x, const IntVector& y) {
  const long n = static_cast<long>(p.generators.size());
  IntVector z = IntVector::Constant(n, BigInt(0));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) z += (x(i) * y(j)) * p.mult[i][j];
  return z;
}

// Z/2 + Z/3 with componentwise product: a presentation of Z/6 with a non-cyclic basis.
RingPresentation z6_split() {
  RingPresentation p;
  p.name = "Z/2xZ/3";
  p.generators = {"e1", "e2"};
  p.relations = IntMatrix::Zero(2, 2);
  p.relations(0, 0) = BigInt(2);
  p.relations(1, 1) = BigInt(3);
  p.mult = {{ivec({1, 0}), ivec({0, 0})}, {ivec({0, 0}), ivec({0, 1})}};
  p.unit = ivec({1, 1});
  return p;
}

}  // namespace

TEST_CASE("normalization of a split presentation of Z/6") {
  auto p = z6_split();
  auto R = Ring::make(p);
  CHECK(R->rank() == 1);
  CHECK(R->order(0) == 6);
  CHECK(R->additive().canonical() == PresentedGroup(2, p.relations).canonical());
  CHECK(R->is_commutative());
  // e1 = 3 in Z/6 (idempotent, killed by 2), e2 = 4
  auto e1 = R->from_presentation(ivec({1, 0}));
  CHECK(R->equal(R->mul(e1, e1), e1));
  CHECK(R->is_zero(R->scale(2, e1)));
}

TEST_CASE("normalized multiplication agrees with the presentation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<RingPresentation> ps{z6_split()};
  for (auto R : {ring_sign(0), ring_sign(4), ring_gaussian(), ring_lipschitz(), ring_upper_triangular_f2(),
                 ring_dual_numbers(3), ring_group_ring_z2_c2()})
    ps.push_back(R->presentation());
  for (auto& p : ps) {
    auto R = Ring::make(p);
    CHECK(R->additive().canonical() == PresentedGroup(static_cast<int>(p.generators.size()), p.relations).canonical());
    CHECK(R->equal(R->from_presentation(p.unit), R->one()));
    const long n = static_cast<long>(p.generators.size());
    for (int trial = 0; trial < 30; ++trial) {
      IntVector x(n), y(n);
      for (long i = 0; i < n; ++i) {
        x(i) = BigInt(d(rng));
        y(i) = BigInt(d(rng));
      }
      auto lhs = R->from_presentation(pres_product(p, x, y));
      auto rhs = R->mul(R->from_presentation(x), R->from_presentation(y));
      CHECK(R->equal(lhs, rhs));
      CHECK(R->equal(R->from_presentation(R->to_presentation(R->from_presentation(x))), R->from_presentation(x)));
    }
  }
}

TEST_CASE("builder rings") {
  auto Q = ring_lipschitz();
  CHECK(Q->rank() == 4);
  CHECK(!Q->is_commutative());
  CHECK(Q->all_free());
  CHECK(Q->involution().has_value());
  auto T = ring_upper_triangular_f2();
  CHECK(T->rank() == 3);
  CHECK(!T->is_commutative());
  CHECK(T->prime_order() == 2);
  CHECK(ring_gaussian()->is_commutative());
  CHECK(check_ring(*Q).ok);
  CHECK(Ring::integers_mod(4)->order(0) == 4);
  CHECK(Ring::integers_mod(0)->order(0) == 0);
}

TEST_CASE("ring validation rejects bad data") {
  auto p = ring_gaussian()->presentation();
  SUBCASE("unit law broken") {
    p.mult[1][0] = ivec({1, 0});
    CHECK_THROWS_AS(Ring::make(p), RingError);
  }
  SUBCASE("involution that is not anti-multiplicative") {
    auto q = ring_upper_triangular_f2()->presentation();
    q.involution = IntMatrix::Identity(3, 3);
    CHECK_THROWS_AS(Ring::make(q), RingError);
  }
  SUBCASE("wrong commutative flag") {
    p.commutative = false;
    CHECK_THROWS_AS(Ring::make(p), RingError);
  }
  SUBCASE("ill-defined product on torsion") {
    RingPresentation z;
    z.name = "bad";
    z.generators = {"1", "x"};
    z.relations = IntMatrix::Zero(2, 1);
    z.relations(1, 0) = BigInt(2);
    z.mult = {{ivec({1, 0}), ivec({0, 1})}, {ivec({0, 1}), ivec({1, 0})}};  // x^2 = 1 with 2x = 0
    z.unit = ivec({1, 0});
    CHECK_THROWS_AS(Ring::make(z), RingError);
  }
}

TEST_CASE("transforms") {
  auto G = ring_gaussian();
  SmallMatrix conj(2, 2);
  conj << 1, 0, 0, -1;
  auto c = make_transform(G, G, conj, MapKind::Hom, "conj");
  CHECK(compose(c, c) == nullptr);
  SmallMatrix bad(2, 2);
  bad << 1, 0, 0, 2;
  CHECK_THROWS_AS(make_transform(G, G, bad, MapKind::Hom), RingError);
  auto Q = ring_lipschitz();
  auto bar = make_transform(Q, Q, *Q->involution(), MapKind::AntiHom, "bar");
  CHECK_THROWS_AS(make_transform(Q, Q, *Q->involution(), MapKind::Hom), RingError);
  CHECK(compose_kind(MapKind::AntiHom, MapKind::AntiHom) == MapKind::Hom);
  CHECK(compose(bar, bar) == nullptr);
}

TEST_CASE("wiring composition and comparison") {
  auto G = ring_gaussian();
  SmallMatrix conj(2, 2);
  conj << 1, 0, 0, -1;
  auto c = make_transform(G, G, conj, MapKind::Hom, "conj");
  std::vector<RingPtr> two{G, G}, one{G};
  // multiplication Z[i] (x) Z[i] -> Z[i]
  Wiring mu{two, one, {{Factor{0, nullptr}, Factor{1, nullptr}}}};
  Wiring swap{two, two, {{Factor{1, nullptr}}, {Factor{0, nullptr}}}};
  validate_wiring(mu);
  validate_wiring(swap);
  CHECK(wiring_equal(compose(mu, swap), mu));
  Wiring cc{two, two, {{Factor{0, c}}, {Factor{1, c}}}};
  Wiring c1{one, one, {{Factor{0, c}}}};
  CHECK(wiring_equal(compose(mu, cc), compose(c1, mu)));
  Wiring half{two, two, {{Factor{0, c}}, {Factor{1, nullptr}}}};
  auto diff = compare(compose(mu, half), mu);
  CHECK(!diff.equal);
  CHECK(diff.decided);
  TensorSpace S(two);
  // i (x) 1 -> -i against i
  CHECK(diff.witness >= 0);
  CHECK(diff.lhs != diff.rhs);
  auto y = apply_mono(mu, S, TensorSpace(one), S.index({1, 1}));
  CHECK(y == TensorElem{{0, -1}});
  Wiring dup{two, one, {{Factor{0, nullptr}, Factor{0, nullptr}}}};
  CHECK_THROWS_AS(validate_wiring(dup), RingError);
}

TEST_CASE("torsion tensor coefficients") {
  auto Z4 = Ring::integers_mod(4), Z6 = Ring::integers_mod(6);
  TensorSpace V({Z4, Z6});
  CHECK(V.order(0) == 2);
  Wiring id = identity_wiring({Z4, Z6});
  CHECK(apply(id, V, V, TensorElem{{0, 3}}) == TensorElem{{0, 1}});
  CHECK(apply(id, V, V, TensorElem{{0, 2}}).empty());
}
