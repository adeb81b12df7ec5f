#ifndef FINMOD_CLASSIFY_HPP
#define FINMOD_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finmod/torsion.hpp"

namespace finmod {

// Memoized per-module analysis: lattice, torsion profile, endomorphism list,
// summand verdicts. Built lazily; a module is analyzed at most once.
class Analysis {
 public:
  explicit Analysis(ModulePtr m) : m_(std::move(m)) {}

  const ModulePtr& mod() const { return m_; }
  const std::vector<Bits>& lattice();
  const TorsionProfile& torsion();
  const std::vector<HomMap>& endos();

  bool is_summand(const Bits& k);
  std::optional<Bits> complement(const Bits& k);

  // f^{-1}(Z2(M)) for an endomorphism of this module.
  Bits pz2(const HomMap& f);

  // summands of M, as lattice members
  const std::vector<Bits>& summands();

 private:
  ModulePtr m_;
  std::optional<std::vector<Bits>> lattice_;
  std::optional<TorsionProfile> torsion_;
  std::optional<std::vector<HomMap>> endos_;
  std::optional<std::vector<Bits>> summands_;
  std::map<Bits, std::optional<Bits>> complement_cache_;
};

// Explanation of a failed universally-quantified verdict (or the witness of
// an existential one): the endomorphism tables and submodules involved.
struct Witness {
  std::vector<std::vector<int>> endos;
  std::vector<std::vector<int>> submodules;
  std::string note;
};

struct PropertyReport {
  std::string instance_id;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::map<std::string, Witness> witnesses;
};

// Module predicates. Each takes the memoizing analysis and optionally emits
// a witness for a false verdict.
bool is_rickart(Analysis& a, Witness* w = nullptr);
bool is_goldie_rickart(Analysis& a, Witness* w = nullptr);
bool is_t_baer(Analysis& a, Witness* w = nullptr);
bool is_t_extending(Analysis& a, Witness* w = nullptr);
bool is_extending(Analysis& a, Witness* w = nullptr);
bool is_duo(Analysis& a, Witness* w = nullptr);
bool is_abelian_module(Analysis& a, Witness* w = nullptr);
bool has_c2(Analysis& a, Witness* w = nullptr);
bool is_relative_c2(Analysis& m, Analysis& n, Witness* w = nullptr);
bool has_sip_over_z2(Analysis& a, Witness* w = nullptr);
bool has_ssip_over_z2(Analysis& a, Witness* w = nullptr);
bool is_relative_goldie_rickart(Analysis& m, Analysis& n, Witness* w = nullptr);
bool is_semisimple_module(Analysis& a, Witness* w = nullptr);
bool is_indecomposable(Analysis& a);

// essentially-closed submodules (no proper essential extension inside M)
std::vector<Bits> closed_submodules(Analysis& a);

struct RingPredicates {
  bool right_goldie_rickart;
  bool left_goldie_rickart;
  bool right_rickart;
  bool left_rickart;
};
RingPredicates ring_predicates(const RingTable& r);

// Runs every applicable predicate in a fixed order, collecting first
// witnesses for false verdicts when requested.
PropertyReport classify(const ModulePtr& m, const std::string& instance_id,
                        bool with_witnesses = true);

}  // namespace finmod

#endif
