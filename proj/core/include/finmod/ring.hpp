#ifndef FINMOD_RING_HPP
#define FINMOD_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finmod/bits.hpp"
#include "finmod/errors.hpp"

namespace finmod {

// Default cap on the order of constructed rings. Overridable per call.
inline constexpr int kDefaultRingOrderBound = 64;

// A finite unital ring as dense operation tables over indices 0..order-1.
// Zero is always index 0; one is recorded explicitly. Immutable after
// construction; validate() checks every axiom on all pairs/triples.
struct RingTable {
  int order = 0;
  std::vector<int> add;  // order*order, row-major
  std::vector<int> mul;
  int zero = 0;
  int one = 0;

  int plus(int a, int b) const { return add[a * order + b]; }
  int times(int a, int b) const { return mul[a * order + b]; }
  int neg(int a) const;  // additive inverse

  void validate() const;  // throws ValidationError naming law and tuple
};

RingTable make_zmod(int n, int bound = kDefaultRingOrderBound);
RingTable make_product(const RingTable& r1, const RingTable& r2,
                       int bound = kDefaultRingOrderBound);

enum class TriangularShape { Upper, Lower };
RingTable make_triangular(const RingTable& r, int k, TriangularShape shape,
                          int bound = kDefaultRingOrderBound);
RingTable make_matrix_ring(const RingTable& r, int k,
                           int bound = kDefaultRingOrderBound);

// The field GF(4); smallest ring not reachable from the zmod/product/matrix
// constructors.
RingTable make_gf4();

RingTable opposite_ring(const RingTable& r);

// Quotient ring R/I for a two-sided ideal I, cosets canonicalized by least
// element index. Throws ArgumentError if I is not a two-sided ideal.
RingTable quotient_ring(const RingTable& r, const Bits& ideal);

// Base ring of a module: either a finite table ring or the integers,
// represented virtually (elements never enumerated).
class BaseRing {
 public:
  static std::shared_ptr<const BaseRing> finite(RingTable table);
  static std::shared_ptr<const BaseRing> integers();

  bool is_integers() const { return !table_.has_value(); }
  const RingTable& table() const;  // throws UnsupportedError on integers

 private:
  std::optional<RingTable> table_;
};

using RingPtr = std::shared_ptr<const BaseRing>;

// A right ideal. Finite case: element bitset. Integer case: the ideal n*Z,
// stored by its nonnegative generator.
struct RightIdeal {
  RingPtr ring;
  Bits elements;       // finite case
  std::int64_t gen = 0;  // integer case
};

// The right ideal generated by a set of elements (finite rings only).
Bits right_ideal_generated(const RingTable& r, const std::vector<int>& gens);

// All right ideals of a finite ring, as bitsets, sorted. Throws
// UnsupportedError for the integer backend.
std::vector<Bits> right_ideals(const RingPtr& r);

// Essentiality of a right ideal. Finite case: I meets aR for every nonzero a
// (principal-ideal criterion). Integer case: nZ is essential iff n != 0.
bool is_essential_right_ideal(const RingPtr& r, const RightIdeal& i);
bool is_essential_right_ideal(const RingTable& r, const Bits& i);

std::vector<int> idempotents(const RingTable& r);
bool is_von_neumann_regular(const RingTable& r);

// Every right ideal is a direct summand of the regular module.
bool is_semisimple(const RingTable& r);

// R/Z2(R_R) is semisimple and idempotents lift strongly modulo Z2(R_R).
// Defined in torsion.cpp (needs the torsion machinery).
bool is_z2_semiperfect(const RingTable& r);

// Test utility: backtracking search for a ring isomorphism.
bool rings_isomorphic(const RingTable& a, const RingTable& b);

}  // namespace finmod

#endif
