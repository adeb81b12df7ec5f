#ifndef FINMOD_REPORT_HPP
#define FINMOD_REPORT_HPP

#include <json.hpp>

#include "finmod/harness.hpp"

namespace finmod {

// every emitted record carries this schema version
inline constexpr const char* kReportSchemaVersion = "1";

using Json = nlohmann::ordered_json;

Json report_json(const PropertyReport& r, bool with_witnesses);
Json report_json(const TheoremCheck& c);
Json report_json(const SearchResult& r, const std::string& target);
Json report_json(const CrosscheckReport& r);

}  // namespace finmod

#endif
