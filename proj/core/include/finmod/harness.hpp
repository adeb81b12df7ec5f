#ifndef FINMOD_HARNESS_HPP
#define FINMOD_HARNESS_HPP

#include <string>
#include <vector>

#include "finmod/classify.hpp"

namespace finmod {

struct HarnessConfig {
  int module_order_cap = 64;
  int zgroup_order_cap = 16;
  int end_cap = 4096;
  int family_cap = 500;
  // order cap for the factors used in the relative (pairwise) suite
  int relative_factor_cap = 8;
  int jobs = 1;
  std::vector<std::string> families;  // empty = all defaults
};

struct Instance {
  std::string id;  // canonical grammar text; parse_spec reproduces the module
  ModulePtr mod;
};

struct GeneratedFamily {
  std::string name;
  std::string ring_spec;  // canonical ring text, or "integers"
  RingPtr ring;
  std::vector<Instance> instances;
  std::vector<Instance> cyclics;  // generation seeds, subset of instances
  std::vector<std::string> skipped;  // "<id>: <reason>", caps never silent
  bool truncated = false;
};

std::vector<std::string> default_family_names();
GeneratedFamily generate_family(const std::string& name,
                                const HarnessConfig& cfg);
std::vector<GeneratedFamily> generate_families(const HarnessConfig& cfg);

enum class CheckStatus { Pass, Fail, Skipped, Partial };
std::string to_string(CheckStatus s);

// One replayed statement. A FAIL signals an implementation bug (every
// registered statement is a proved theorem) and carries the witness instance
// id, which reproduces the violation via parse_spec.
struct TheoremCheck {
  std::string id;
  std::string kind;   // implication | equivalence | construction
  std::string scope;  // per-module | per-pair | per-ring
  CheckStatus status;
  std::string detail;
  std::string witness;
};

// Fixed registry order; the completeness test enumerates this.
std::vector<std::string> registry_ids();

std::vector<TheoremCheck> run_theorems(
    const std::vector<GeneratedFamily>& families, const HarnessConfig& cfg);

struct SearchResult {
  bool found = false;
  std::string witness_id;
  int examined = 0;
};

// conjunction grammar: name or !name joined by '&', over classify verdicts,
// e.g. "goldie_rickart&!rickart". First witness in deterministic order.
SearchResult search_counterexample(const std::string& conjunction,
                                   const std::vector<GeneratedFamily>& families);

struct CrosscheckItem {
  std::string id;
  bool pass;
  std::string detail;
};
struct CrosscheckReport {
  std::vector<CrosscheckItem> items;
  bool all_pass() const;
};

// Independent-route agreement: summand-by-complement vs summand-by-idempotent,
// principal vs all-ideal essentiality, generator-image homs vs full map scan,
// t-operator vs pairwise intersection.
CrosscheckReport oracle_crosschecks(const std::vector<GeneratedFamily>& families);

}  // namespace finmod

#endif
