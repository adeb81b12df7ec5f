#ifndef FINMOD_MODULE_HPP
#define FINMOD_MODULE_HPP

#include <memory>
#include <vector>

#include "finmod/bits.hpp"
#include "finmod/ring.hpp"

namespace finmod {

inline constexpr int kDefaultModuleOrderBound = 64;
inline constexpr int kLatticeGuard = 20000;

// A finite right module over a BaseRing. For a finite base the action is a
// full order x |R| table; for the integer backend the action of n is n-fold
// addition and no table is stored. Zero is always element 0. Immutable after
// construction.
struct ModuleTable {
  RingPtr base;
  int order = 0;
  std::vector<int> add;  // order*order
  std::vector<int> act;  // order*|R| (finite base only)
  int zero = 0;

  int plus(int a, int b) const { return add[a * order + b]; }
  int neg(int a) const;

  // scalar action; finite base only
  int apply(int m, int r) const { return act[m * base->table().order + r]; }

  // action by an integer (any base; for a finite base this acts through n*1)
  int apply_int(int m, long long n) const;

  // additive order of an element
  int elem_order(int m) const;

  void validate() const;
};

using ModulePtr = std::shared_ptr<const ModuleTable>;

struct Submodule {
  ModulePtr parent;
  Bits elements;
};

struct SubmoduleLattice {
  ModulePtr parent;
  std::vector<Bits> all;  // sorted, deduplicated; contains 0 and M
};

ModulePtr regular_module(const RingPtr& r);

// The abelian group Z_{d1} x ... x Z_{dk} as a module over the integers.
ModulePtr zbackend_module(const std::vector<int>& invariants,
                          int bound = kDefaultModuleOrderBound);

// Direct sum with the canonical injections/projections recorded as index
// maps (element of summand -> element of sum, and back).
struct DirectSum {
  ModulePtr sum;
  std::vector<int> inj1, inj2;  // summand index -> sum index
  std::vector<int> proj1, proj2;  // sum index -> summand index
};
DirectSum direct_sum(const ModulePtr& m1, const ModulePtr& m2,
                     int bound = 4096);

// Quotient M/N with the canonical projection (element -> coset index).
// Cosets are canonicalized by least element index.
struct Quotient {
  ModulePtr mod;
  std::vector<int> proj;
};
Quotient quotient_module(const ModulePtr& m, const Bits& n);

// The submodule spanned by gens: fixed-point closure under addition and
// scalar action.
Bits submodule_generated(const ModuleTable& m, const std::vector<int>& gens);

bool is_submodule(const ModuleTable& m, const Bits& s);

// Sum of two submodules (pairwise addition; already closed).
Bits submodule_sum(const ModuleTable& m, const Bits& a, const Bits& b);

// Complete submodule lattice: cyclic submodules closed under sums.
SubmoduleLattice all_submodules(const ModulePtr& m,
                                int guard = kLatticeGuard);

// Direct-summand test by complement search over the lattice. Returns the
// first complement in lattice order, if any.
std::optional<Bits> find_complement(const ModuleTable& m, const Bits& k,
                                    const std::vector<Bits>& lattice);
bool is_direct_summand(const ModulePtr& m, const Bits& k);

// Greedy generating set: no proper subset of it generates.
std::vector<int> minimal_generating_set(const ModuleTable& m);

// n essential in in_ (both submodules of m, n <= in_): n meets every nonzero
// cyclic submodule of in_.
bool is_essential_submodule(const ModuleTable& m, const Bits& n,
                            const Bits& in_);

// A submodule as a standalone module, with the index map back to the parent.
struct RestrictedModule {
  ModulePtr mod;
  std::vector<int> to_parent;    // restricted index -> parent index
  std::vector<int> from_parent;  // parent index -> restricted index or -1
};
RestrictedModule restrict_to_submodule(const ModulePtr& m, const Bits& s);

// Base-ring compatibility (both integer backend, or equal tables).
bool same_base(const ModuleTable& a, const ModuleTable& b);

}  // namespace finmod

#endif
