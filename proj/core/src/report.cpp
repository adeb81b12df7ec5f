#include "finmod/report.hpp"

namespace finmod {

Json report_json(const PropertyReport& r, bool with_witnesses) {
  Json j;
  j["version"] = kReportSchemaVersion;
  j["record"] = "classification";
  j["instance"] = r.instance_id;
  Json v = Json::object();
  for (const auto& [name, val] : r.verdicts) v[name] = val;
  j["verdicts"] = v;
  if (with_witnesses) {
    Json w = Json::object();
    for (const auto& [name, wit] : r.witnesses) {
      Json e;
      e["endomorphisms"] = wit.endos;
      e["submodules"] = wit.submodules;
      e["note"] = wit.note;
      w[name] = e;
    }
    j["witnesses"] = w;
  }
  return j;
}

Json report_json(const TheoremCheck& c) {
  Json j;
  j["version"] = kReportSchemaVersion;
  j["record"] = "theorem_check";
  j["id"] = c.id;
  j["kind"] = c.kind;
  j["scope"] = c.scope;
  j["status"] = to_string(c.status);
  j["detail"] = c.detail;
  j["witness"] = c.witness;
  // a FAIL here means the implementation is wrong: every registered
  // statement is a proved theorem
  if (c.status == CheckStatus::Fail)
    j["note"] = "FAIL indicates an implementation bug, not a mathematical "
                "discovery";
  return j;
}

Json report_json(const SearchResult& r, const std::string& target) {
  Json j;
  j["version"] = kReportSchemaVersion;
  j["record"] = "search";
  j["target"] = target;
  j["found"] = r.found;
  j["witness"] = r.witness_id;
  j["examined"] = r.examined;
  if (!r.found)
    j["note"] = "no witness found within catalog; existence is not asserted "
                "either way";
  return j;
}

Json report_json(const CrosscheckReport& r) {
  Json j;
  j["version"] = kReportSchemaVersion;
  j["record"] = "oracle_crosschecks";
  j["all_pass"] = r.all_pass();
  Json items = Json::array();
  for (const auto& it : r.items) {
    Json e;
    e["id"] = it.id;
    e["pass"] = it.pass;
    e["detail"] = it.detail;
    items.push_back(e);
  }
  j["items"] = items;
  return j;
}

}  // namespace finmod
