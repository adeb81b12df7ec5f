#ifndef FINMOD_HOM_HPP
#define FINMOD_HOM_HPP

#include <vector>

#include "finmod/module.hpp"

namespace finmod {

// Hom-search bound: |target|^(#generators of source) must stay below this.
inline constexpr long long kHomSearchBound = 1 << 16;

// Largest endomorphism ring for which the dense RingTable is materialized.
inline constexpr int kEndTableBound = 2048;

// An R-linear map stored as a full element-to-element table.
struct HomMap {
  ModulePtr source;
  ModulePtr target;
  std::vector<int> table;

  int operator()(int x) const { return table[x]; }
  bool is_identity() const;
  bool is_zero() const;
};

HomMap identity_hom(const ModulePtr& m);
HomMap zero_hom(const ModulePtr& source, const ModulePtr& target);
HomMap hom_add(const HomMap& f, const HomMap& g);
// f after g (source of f = target of g)
HomMap hom_compose(const HomMap& f, const HomMap& g);

// All R-linear maps m -> n, enumerated by generator-image assignment with
// incremental consistency propagation. Sorted by table, so the zero map is
// first. Throws SizeLimitError when the search space exceeds the bound.
std::vector<HomMap> hom_set(const ModulePtr& m, const ModulePtr& n,
                            long long bound = kHomSearchBound);

std::vector<HomMap> end_homs(const ModulePtr& m,
                             long long bound = kHomSearchBound);

// End_R(M) as a table ring under pointwise addition and composition, with
// hom index i <-> ring element i. The identity map is the ring's one.
struct EndRing {
  ModulePtr module;
  std::vector<HomMap> elements;
  RingTable ring;
  int eval(int endo, int elem) const { return elements[endo].table[elem]; }
};
EndRing end_ring(const ModulePtr& m, int table_bound = kEndTableBound);

Bits kernel(const HomMap& f);
Bits image(const HomMap& f);
Bits preimage(const HomMap& f, const Bits& k);  // k a submodule of target

// Every hom from a submodule of b into a extends to b -> a.
bool is_relatively_injective(const ModulePtr& a, const ModulePtr& b);
bool is_quasi_injective(const ModulePtr& m);

// Every hom m -> m/n lifts through the canonical projection.
bool is_quasi_projective(const ModulePtr& m);

// Baer criterion: homs from right ideals of the (finite) base ring extend.
bool is_injective_module(const ModulePtr& m);

// The canonical surjection R^g -> m on a minimal generating set splits.
bool is_projective_module(const ModulePtr& m);

// Test utility: isomorphism search via hom enumeration.
bool modules_isomorphic(const ModulePtr& a, const ModulePtr& b);

}  // namespace finmod

#endif
