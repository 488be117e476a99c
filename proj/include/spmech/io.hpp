#ifndef SPMECH_IO_HPP
#define SPMECH_IO_HPP

#include <string>

#include <json.hpp>

#include "spmech/report.hpp"
#include "spmech/rules.hpp"
#include "spmech/stochastic.hpp"
#include "spmech/strings.hpp"

namespace spmech::io {

using Json = nlohmann::ordered_json; // stable key order keeps reports byte-identical

// Rule files:
//   {"n":4, "kind":"ttc", "endowment":[0,1,2,3]}
//   {"kind":"sd", "order":[0,1,2]}
//   {"kind":"bipolar_sd", "order":[0,1,2,3], "owner_split":[[0,1],[2,3]]}
//   {"kind":"tc", "n":3, "control":[{"matched":[[0,2]], "rights":{"1":[1,"owner"],"2":[2,"broker"]}}, ...]}
//   {"kind":"hierarchical", "n":4, "control":[...]}           (owner-only)
//   {"kind":"imposed", "assignment":[0,1,2]}
//   {"kind":"bossy_demo", "order":[0,1,2]}
RuleSpec rule_from_json(const Json& j);
Json rule_to_json(const RuleSpec& spec);
RuleSpec load_rule(const std::string& path);
void save_rule(const RuleSpec& spec, const std::string& path);

Json report_to_json(const AuditReport& report);
Json validation_to_json(const ValidationReport& report);

// CSV with columns value,numerator,denominator,decimal.
std::string distribution_csv(const stochastic::ExactDistribution& d);
Json distribution_json(const stochastic::ExactDistribution& d);

void write_text_file(const std::string& path, const std::string& text);

} // namespace spmech::io

#endif
