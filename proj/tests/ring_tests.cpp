#include <doctest.h>

#include "finmod/ring.hpp"

using namespace finmod;

namespace {

// independent essentiality oracle: I meets every nonzero right ideal
bool essential_naive(const RingTable& r, const Bits& i) {
  auto ideals = right_ideals(BaseRing::finite(r));
  for (const Bits& j : ideals) {
    if (j.count() <= 1) continue;
    Bits meet = i & j;
    bool nonzero = false;
    for (int x : meet.elements())
      if (x != r.zero) nonzero = true;
    if (!nonzero) return false;
  }
  return true;
}

Bits bits_of(int order, std::initializer_list<int> xs) {
  Bits b(order);
  for (int x : xs) b.set(x);
  return b;
}

}  // namespace

TEST_SUITE("ring") {

TEST_CASE("zmod construction") {
  RingTable z1 = make_zmod(1);
  CHECK(z1.order == 1);
  CHECK(z1.zero == z1.one);
  z1.validate();

  RingTable z4 = make_zmod(4);
  CHECK(z4.order == 4);
  CHECK(z4.one == 1);
  CHECK(z4.times(2, 2) == 0);
  z4.validate();

  CHECK_THROWS_AS(make_zmod(0), ArgumentError);
  CHECK_THROWS_AS(make_zmod(100), SizeLimitError);
}

TEST_CASE("product ring and CRT oracle") {
  RingTable p = make_product(make_zmod(2), make_zmod(3));
  CHECK(p.order == 6);
  p.validate();
  CHECK(rings_isomorphic(p, make_zmod(6)));

  RingTable q = make_product(make_zmod(4), make_zmod(1));
  CHECK(rings_isomorphic(q, make_zmod(4)));

  RingTable v4 = make_product(make_zmod(2), make_zmod(2));
  CHECK(idempotents(v4).size() == 4);
  CHECK_FALSE(rings_isomorphic(v4, make_zmod(4)));
}

TEST_CASE("triangular and matrix rings") {
  RingTable t = make_triangular(make_zmod(2), 2, TriangularShape::Upper);
  CHECK(t.order == 8);
  t.validate();
  // non-commutative: some pair fails to commute
  bool noncomm = false;
  for (int a = 0; a < t.order && !noncomm; ++a)
    for (int b = 0; b < t.order && !noncomm; ++b)
      noncomm = t.times(a, b) != t.times(b, a);
  CHECK(noncomm);

  CHECK(rings_isomorphic(make_triangular(make_zmod(4), 1,
                                          TriangularShape::Upper),
                         make_zmod(4)));
  CHECK(rings_isomorphic(
      opposite_ring(t), make_triangular(make_zmod(2), 2,
                                        TriangularShape::Lower)));

  RingTable m = make_matrix_ring(make_zmod(2), 2);
  CHECK(m.order == 16);
  m.validate();
  CHECK(is_semisimple(m));
  CHECK(rings_isomorphic(make_matrix_ring(make_zmod(6), 1), make_zmod(6)));
}

TEST_CASE("gf4 is a field of order 4") {
  RingTable f = make_gf4();
  CHECK(f.order == 4);
  f.validate();
  for (int a = 1; a < 4; ++a) {
    bool invertible = false;
    for (int b = 1; b < 4; ++b)
      if (f.times(a, b) == f.one) invertible = true;
    CHECK(invertible);
  }
  CHECK_FALSE(rings_isomorphic(f, make_zmod(4)));
}

TEST_CASE("right ideal enumeration") {
  CHECK(right_ideals(BaseRing::finite(make_zmod(4))).size() == 3);
  CHECK(right_ideals(BaseRing::finite(make_zmod(2))).size() == 2);
  CHECK(right_ideals(BaseRing::finite(make_zmod(6))).size() == 4);
  CHECK(right_ideal_generated(make_zmod(4), {2}) == bits_of(4, {0, 2}));
  CHECK_THROWS_AS(right_ideals(BaseRing::integers()), UnsupportedError);
}

TEST_CASE("essential right ideals and naive oracle") {
  RingTable z4 = make_zmod(4);
  CHECK(is_essential_right_ideal(z4, bits_of(4, {0, 2})));
  RingTable z6 = make_zmod(6);
  CHECK_FALSE(is_essential_right_ideal(z6, bits_of(6, {0, 2, 4})));
  for (const RingTable& r : {make_zmod(4), make_zmod(6), make_zmod(8),
                             make_triangular(make_zmod(2), 2,
                                             TriangularShape::Upper)}) {
    Bits whole(r.order);
    for (int a = 0; a < r.order; ++a) whole.set(a);
    CHECK(is_essential_right_ideal(r, whole));
    for (const Bits& i : right_ideals(BaseRing::finite(r)))
      CHECK(is_essential_right_ideal(r, i) == essential_naive(r, i));
  }

  RightIdeal nz{BaseRing::integers(), Bits(0), 4};
  CHECK(is_essential_right_ideal(nz.ring, nz));
  RightIdeal zz{BaseRing::integers(), Bits(0), 0};
  CHECK_FALSE(is_essential_right_ideal(zz.ring, zz));
}

TEST_CASE("idempotents") {
  CHECK(idempotents(make_zmod(4)) == std::vector<int>{0, 1});
  CHECK(idempotents(make_zmod(6)) == std::vector<int>{0, 1, 3, 4});
  CHECK(idempotents(make_zmod(2)) == std::vector<int>{0, 1});
}

TEST_CASE("von Neumann regularity and semisimplicity") {
  CHECK(is_von_neumann_regular(make_zmod(6)));
  CHECK_FALSE(is_von_neumann_regular(make_zmod(4)));
  CHECK(is_von_neumann_regular(make_zmod(1)));
  CHECK(is_semisimple(make_zmod(6)));
  CHECK_FALSE(is_semisimple(make_zmod(4)));
  CHECK_FALSE(is_semisimple(
      make_triangular(make_zmod(2), 2, TriangularShape::Upper)));
}

TEST_CASE("z2-semiperfect rings") {
  CHECK(is_z2_semiperfect(make_zmod(4)));
  CHECK(is_z2_semiperfect(make_zmod(2)));
  CHECK(is_z2_semiperfect(make_zmod(6)));  // semisimple
  CHECK(is_z2_semiperfect(make_matrix_ring(make_zmod(2), 2)));
}

TEST_CASE("opposite ring") {
  RingTable z6 = make_zmod(6);
  RingTable op = opposite_ring(z6);
  CHECK(op.mul == z6.mul);  // commutative: identical tables
  RingTable t = make_triangular(make_zmod(2), 2, TriangularShape::Upper);
  CHECK(opposite_ring(opposite_ring(t)).mul == t.mul);
}

TEST_CASE("quotient ring") {
  RingTable z4 = make_zmod(4);
  Bits i = bits_of(4, {0, 2});
  RingTable q = quotient_ring(z4, i);
  CHECK(q.order == 2);
  CHECK(rings_isomorphic(q, make_zmod(2)));
  Bits notideal = bits_of(4, {0, 1});
  CHECK_THROWS_AS(quotient_ring(z4, notideal), ArgumentError);
}

}  // TEST_SUITE
