#ifndef FINMOD_TORSION_HPP
#define FINMOD_TORSION_HPP

#include <vector>

#include "finmod/hom.hpp"
#include "finmod/module.hpp"

namespace finmod {

struct TorsionProfile {
  ModulePtr module;
  Bits z;   // singular submodule
  Bits z2;  // Goldie torsion submodule
};

// {r in R : x*r = 0}; on the integer backend, the additive order of x.
RightIdeal annihilator(const ModuleTable& m, int x);

// Elements annihilated by an essential right ideal.
Bits singular_submodule(const ModulePtr& m);

// z2 is the preimage of Z(M/Z(M)) under the canonical projection; the
// quotient M/z2 is checked nonsingular.
TorsionProfile goldie_torsion(const ModulePtr& m);

// f^{-1}(Z2(target)); contains Z2(source), which is asserted.
Bits preimage_z2(const HomMap& f);

// Intersection of preimage_z2 over fs; the whole module when fs is empty.
Bits t_operator(const ModulePtr& m, const std::vector<HomMap>& fs);

// n is t-essential in m: n cap L <= Z2(m) forces L <= Z2(m).
bool is_t_essential(const ModulePtr& m, const Bits& n);
bool is_t_essential(const ModulePtr& m, const Bits& n,
                    const std::vector<Bits>& lattice, const Bits& z2);

// Submodules with no proper t-essential extension; t-essentiality inside an
// extension k is evaluated with k as a standalone module.
std::vector<Bits> t_closed_submodules(const ModulePtr& m);

}  // namespace finmod

#endif
