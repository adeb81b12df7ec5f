#include <doctest.h>

#include <set>

#include "finmod/instance.hpp"
#include "finmod/report.hpp"

using namespace finmod;

namespace {

HarnessConfig small_config() {
  HarnessConfig cfg;
  cfg.families = {"zmod4", "f2", "zbackend"};
  cfg.module_order_cap = 16;
  cfg.zgroup_order_cap = 8;
  cfg.jobs = 2;
  return cfg;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("family generation is deterministic and reproducible") {
  HarnessConfig cfg = small_config();
  auto a = generate_families(cfg);
  auto b = generate_families(cfg);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].instances.size() == b[i].instances.size());
    for (size_t j = 0; j < a[i].instances.size(); ++j) {
      CHECK(a[i].instances[j].id == b[i].instances[j].id);
      CHECK(a[i].instances[j].mod->add == b[i].instances[j].mod->add);
    }
  }
}

TEST_CASE("instance ids reproduce their modules") {
  HarnessConfig cfg = small_config();
  for (const auto& fam : generate_families(cfg))
    for (const auto& inst : fam.instances) {
      auto parsed = parse_spec(inst.id);
      REQUIRE(parsed.module);
      CHECK(parsed.module->order == inst.mod->order);
      CHECK(parsed.module->add == inst.mod->add);
      CHECK(parsed.module->act == inst.mod->act);
    }
}

TEST_CASE("instances are deduplicated") {
  HarnessConfig cfg = small_config();
  for (const auto& fam : generate_families(cfg)) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> keys;
    for (const auto& inst : fam.instances)
      CHECK(keys.insert({inst.mod->add, inst.mod->act}).second);
  }
}

TEST_CASE("cyclics of zmod4 match its right ideals") {
  HarnessConfig cfg;
  cfg.families = {"zmod4"};
  auto fams = generate_families(cfg);
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].cyclics.size() == 3);  // quotients by the 3 right ideals
}

TEST_CASE("default families cover the advertised catalogs") {
  auto names = default_family_names();
  std::set<std::string> s(names.begin(), names.end());
  for (const char* required : {"zmod4", "zmod8", "zmod6", "f2", "f4", "t2f2",
                               "m2f2", "z2xz4", "zbackend"})
    CHECK(s.count(required) == 1);
  CHECK_THROWS_AS(generate_family("nosuch", HarnessConfig{}), ArgumentError);
}

TEST_CASE("registry ids are unique and the run covers them in order") {
  auto ids = registry_ids();
  CHECK(ids.size() >= 50);
  std::set<std::string> unique(ids.begin(), ids.end());
  CHECK(unique.size() == ids.size());

  HarnessConfig cfg = small_config();
  auto fams = generate_families(cfg);
  auto checks = run_theorems(fams, cfg);
  REQUIRE(checks.size() == ids.size());
  for (size_t i = 0; i < checks.size(); ++i) {
    CHECK(checks[i].id == ids[i]);
    CHECK(checks[i].status != CheckStatus::Fail);
    if (checks[i].status == CheckStatus::Skipped)
      CHECK_FALSE(checks[i].detail.empty());  // reasons are never silent
  }
}

TEST_CASE("counterexample search contract") {
  HarnessConfig cfg;
  cfg.families = {"zbackend"};
  auto fams = generate_families(cfg);
  SearchResult hit = search_counterexample("goldie_rickart&!rickart", fams);
  CHECK(hit.found);
  CHECK(hit.witness_id == "module zabelian 4");
  SearchResult miss = search_counterexample("rickart&!goldie_rickart", fams);
  CHECK_FALSE(miss.found);
  CHECK(miss.examined == (int)fams[0].instances.size());
  CHECK_THROWS_AS(search_counterexample("nosuchverdict", fams), ArgumentError);
}

TEST_CASE("oracle crosschecks agree on the small catalog") {
  HarnessConfig cfg = small_config();
  auto fams = generate_families(cfg);
  CrosscheckReport r = oracle_crosschecks(fams);
  CHECK(r.all_pass());
  CHECK(r.items.size() == 4);
}

TEST_CASE("json records carry the schema version") {
  TheoremCheck c{"x", "implication", "per-module", CheckStatus::Pass, "d", ""};
  CHECK(report_json(c)["version"] == kReportSchemaVersion);
  SearchResult s;
  CHECK(report_json(s, "t")["version"] == kReportSchemaVersion);
  PropertyReport p{"id", {{"rickart", true}}, {}};
  auto pj = report_json(p, false);
  CHECK(pj["version"] == kReportSchemaVersion);
  CHECK(pj["verdicts"]["rickart"] == true);
}

}  // TEST_SUITE
