#ifndef FINMOD_HARNESS_INTERNAL_HPP
#define FINMOD_HARNESS_INTERNAL_HPP

#include <map>
#include <memory>

#include "finmod/harness.hpp"

namespace finmod::internal {

// One catalog instance with its memoized analysis and verdict cache.
struct Entry {
  Instance inst;
  std::shared_ptr<Analysis> an;
  std::map<std::string, bool> verdicts;
};

struct FamilyCtx {
  const GeneratedFamily* fam;
  std::vector<std::shared_ptr<Entry>> entries;
  std::vector<std::shared_ptr<Entry>> cyclic_entries;  // relative-suite factors
};

struct Ctx {
  const HarnessConfig* cfg;
  std::vector<FamilyCtx> fams;

  std::vector<std::shared_ptr<Entry>> all() const {
    std::vector<std::shared_ptr<Entry>> out;
    for (const auto& f : fams)
      for (const auto& e : f.entries) out.push_back(e);
    return out;
  }
};

Ctx build_ctx(const std::vector<GeneratedFamily>& families,
              const HarnessConfig& cfg);

// Named verdict with lazy evaluation (same names as classify()).
bool verdict(Entry& e, const std::string& name);

// Restricted-submodule helper returning a fresh entry-like analysis.
std::shared_ptr<Analysis> analyze_restricted(const ModulePtr& m, const Bits& s);

std::vector<TheoremCheck> run_registry(Ctx& ctx);

}  // namespace finmod::internal

#endif
