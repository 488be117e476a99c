#include "spmech/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spmech::io {

namespace {

std::vector<int> int_vector(const Json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError("rule spec needs an integer array '" + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer()) throw InputError("'" + key + "' must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

int required_n(const Json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("rule spec needs an integer field 'n'");
    return j["n"].get<int>();
}

ControlRightsTable control_from_json(const Json& j, int n) {
    if (!j.contains("control") || !j["control"].is_array())
        throw InputError("trading-cycles rule needs a 'control' array");
    ControlRightsTable table;
    table.n = table.m = n;
    for (const auto& entry : j["control"]) {
        std::vector<std::pair<AgentId, ObjectId>> pairs;
        if (entry.contains("matched"))
            for (const auto& pair : entry["matched"]) {
                if (!pair.is_array() || pair.size() != 2) throw InputError("'matched' must list [agent, object] pairs");
                pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
        std::vector<std::pair<ObjectId, ControlRight>> rights;
        if (!entry.contains("rights") || !entry["rights"].is_object())
            throw InputError("control entry needs a 'rights' object");
        for (const auto& [key, value] : entry["rights"].items()) {
            const ObjectId x = std::stoi(key);
            if (!value.is_array() || value.size() != 2) throw InputError("control right must be [agent, role]");
            const std::string role = value[1].get<std::string>();
            if (role != "owner" && role != "broker") throw InputError("control role must be 'owner' or 'broker'");
            rights.emplace_back(x, ControlRight{value[0].get<int>(), role == "owner" ? Role::Owner : Role::Broker});
        }
        table.add(Submatching::from_pairs(pairs), rights);
    }
    return table;
}

Json control_to_json(const ControlRightsTable& table) {
    Json out = Json::array();
    for (const auto& [key, entry] : table.entries) {
        Json e;
        Json matched = Json::array();
        for (auto [agent, object] : entry.sigma.pairs) matched.push_back(Json::array({agent, object}));
        e["matched"] = matched;
        Json rights = Json::object();
        for (int x = 0; x < table.m; ++x)
            if (entry.lists(x))
                rights[std::to_string(x)] =
                    Json::array({entry.rights[x].agent, entry.rights[x].role == Role::Owner ? "owner" : "broker"});
        e["rights"] = rights;
        out.push_back(e);
    }
    return out;
}

} // namespace

RuleSpec rule_from_json(const Json& j) {
    if (!j.contains("kind") || !j["kind"].is_string()) throw InputError("rule spec needs a string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    try {
        if (kind == "sd") return RuleSpec::sd(int_vector(j, "order"));
        if (kind == "bossy_demo") return RuleSpec::bossy_demo(int_vector(j, "order"));
        if (kind == "ttc") return RuleSpec::ttc(int_vector(j, "endowment"));
        if (kind == "imposed") return RuleSpec::imposed_rule(Assignment::from_vector(int_vector(j, "assignment")));
        if (kind == "bipolar_sd") {
            if (!j.contains("owner_split") || !j["owner_split"].is_array() || j["owner_split"].size() != 2)
                throw InputError("bipolar_sd needs 'owner_split': [[...],[...]]");
            std::vector<ObjectId> first, second;
            for (const auto& v : j["owner_split"][0]) first.push_back(v.get<int>());
            for (const auto& v : j["owner_split"][1]) second.push_back(v.get<int>());
            return RuleSpec::bipolar_sd(int_vector(j, "order"), first, second);
        }
        if (kind == "tc") return RuleSpec::trading_cycles(control_from_json(j, required_n(j)));
        if (kind == "hierarchical") return RuleSpec::hierarchical(control_from_json(j, required_n(j)));
    } catch (const DomainError& e) {
        throw InputError(std::string("invalid rule parameters: ") + e.what());
    } catch (const CapacityError& e) {
        throw InputError(std::string("rule out of supported size: ") + e.what());
    }
    throw InputError("unknown rule kind '" + kind + "'");
}

Json rule_to_json(const RuleSpec& spec) {
    Json j;
    j["kind"] = rule_kind_name(spec.kind);
    j["n"] = spec.n;
    switch (spec.kind) {
        case RuleKind::SD:
        case RuleKind::BossyDemo:
            j["order"] = spec.order;
            break;
        case RuleKind::BipolarSD:
            j["order"] = spec.order;
            j["owner_split"] = Json::array({spec.owner_split[0], spec.owner_split[1]});
            break;
        case RuleKind::TTC:
            j["endowment"] = spec.endowment;
            break;
        case RuleKind::Imposed: {
            std::vector<int> objects;
            for (AgentId i = 0; i < spec.n; ++i) objects.push_back(spec.imposed.of(i));
            j["assignment"] = objects;
            break;
        }
        case RuleKind::HierarchicalExchange:
        case RuleKind::TradingCycles:
            j["control"] = control_to_json(spec.table);
            break;
    }
    return j;
}

RuleSpec load_rule(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open rule file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("rule file '" + path + "' is not valid JSON: " + e.what());
    }
    return rule_from_json(j);
}

void save_rule(const RuleSpec& spec, const std::string& path) {
    write_text_file(path, rule_to_json(spec).dump(2) + "\n");
}

Json report_to_json(const AuditReport& report) {
    Json j;
    j["property"] = report.property;
    j["verdict"] = report.pass ? "pass" : "fail";
    if (report.counterexample) {
        Json cx = Json::object();
        for (const auto& [key, value] : report.counterexample->fields) cx[key] = value;
        j["counterexample"] = cx;
    } else {
        j["counterexample"] = nullptr;
    }
    j["work"] = report.work;
    if (!report.note.empty()) j["note"] = report.note;
    return j;
}

Json validation_to_json(const ValidationReport& report) {
    Json j;
    j["valid"] = report.valid;
    Json issues = Json::array();
    for (const auto& issue : report.issues) {
        Json e;
        e["condition"] = issue.condition;
        Json matched = Json::array();
        for (auto [agent, object] : issue.sigma.pairs) matched.push_back(Json::array({agent, object}));
        e["submatching"] = matched;
        e["detail"] = issue.detail;
        issues.push_back(e);
    }
    j["issues"] = issues;
    return j;
}

std::string distribution_csv(const stochastic::ExactDistribution& d) {
    std::ostringstream out;
    out << "value,numerator,denominator,decimal\n";
    for (size_t k = 0; k < d.support.size(); ++k) {
        char decimal[64];
        std::snprintf(decimal, sizeof decimal, "%.12g", d.mass[k].to_double());
        out << d.support[k] << "," << d.mass[k].num().str() << "," << d.mass[k].den().str() << "," << decimal
            << "\n";
    }
    return out.str();
}

Json distribution_json(const stochastic::ExactDistribution& d) {
    Json rows = Json::array();
    for (size_t k = 0; k < d.support.size(); ++k) {
        Json row;
        row["value"] = d.support[k];
        row["numerator"] = d.mass[k].num().str();
        row["denominator"] = d.mass[k].den().str();
        row["decimal"] = d.mass[k].to_double();
        rows.push_back(row);
    }
    return rows;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file '" + path + "'");
    out << text;
}

} // namespace spmech::io
