#ifndef SPMECH_REPORT_HPP
#define SPMECH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spmech {

// Replayable witness of a failed property: ordered key/value pairs using
// the CLI preference grammar, so every counterexample can be re-checked
// against the rule without the sweep machinery.
struct Counterexample {
    std::vector<std::pair<std::string, std::string>> fields;

    void put(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
    std::string get(const std::string& key) const {
        for (auto& [k, v] : fields)
            if (k == key) return v;
        return "";
    }
    bool has(const std::string& key) const {
        for (auto& [k, v] : fields)
            if (k == key) return true;
        return false;
    }
};

struct AuditReport {
    std::string property;
    bool pass = false;
    std::optional<Counterexample> counterexample;
    int64_t work = 0;   // table lookups / rule evaluations performed
    std::string note;   // summary values, e.g. computed expectations

    static AuditReport passed(const std::string& property, int64_t work, const std::string& note = "") {
        return AuditReport{property, true, std::nullopt, work, note};
    }
    static AuditReport failed(const std::string& property, Counterexample cx, int64_t work,
                              const std::string& note = "") {
        return AuditReport{property, false, std::move(cx), work, note};
    }
};

} // namespace spmech

#endif
