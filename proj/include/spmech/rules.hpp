#ifndef SPMECH_RULES_HPP
#define SPMECH_RULES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spmech/model.hpp"

namespace spmech {

enum class Role : uint8_t { Owner, Broker };

struct ControlRight {
    AgentId agent = -1;
    Role role = Role::Owner;

    bool operator==(const ControlRight& o) const { return agent == o.agent && role == o.role; }
};

// Control rights of one submatching: every listed unmatched object maps to
// an unmatched agent who owns or brokers it.
struct ControlEntry {
    Submatching sigma;
    std::array<ControlRight, kMaxObjects> rights{};
    uint32_t listed_mask = 0;

    bool lists(ObjectId x) const { return (listed_mask >> x) & 1; }
};

// Declarative control-rights structure. Tables may be partial; the engine
// raises SpecIncompleteError when it reaches an unlisted submatching.
struct ControlRightsTable {
    int n = 0, m = 0;
    std::map<uint64_t, ControlEntry> entries;

    void add(const Submatching& sigma, const std::vector<std::pair<ObjectId, ControlRight>>& rights);
    const ControlEntry* find(const Submatching& sigma) const;
    bool empty() const { return entries.empty(); }
};

struct ValidationIssue {
    std::string condition;
    Submatching sigma;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    std::vector<ValidationIssue> issues;
};

// Checks the structural conditions on a control-rights table: rights are
// held by unmatched agents over unmatched objects, no owner-broker mixing,
// at most one broker (three-broker configurations are rejected outright),
// the last agent owns the last object, and ownership persists across all
// listed sigma ⊆ sigma' pairs.
ValidationReport validate_control_rights(const ControlRightsTable& table, int n, int m);

enum class RuleKind { SD, BipolarSD, TTC, HierarchicalExchange, TradingCycles, Imposed, BossyDemo };

const char* rule_kind_name(RuleKind kind);

// Declarative description of a mechanism. Construct through the factory
// functions; parameters are validated there.
struct RuleSpec {
    RuleKind kind = RuleKind::SD;
    int n = 0;
    int m = 0;
    std::string name;

    std::vector<AgentId> order;                      // SD, BipolarSD, BossyDemo
    std::vector<std::vector<ObjectId>> owner_split;  // BipolarSD: endowments of order[0], order[1]
    std::vector<ObjectId> endowment;                 // TTC
    ControlRightsTable table;                        // HierarchicalExchange, TradingCycles

    Assignment imposed;                              // Imposed

    // Per-object agent priority lists backing the list-based TC kinds
    // (SD, BipolarSD, TTC): the first unmatched agent on priority[x]
    // owns x. Filled by the factories.
    std::vector<std::vector<AgentId>> priority;

    bool is_tc_kind() const {
        return kind != RuleKind::Imposed && kind != RuleKind::BossyDemo;
    }

    static RuleSpec sd(const std::vector<AgentId>& order);
    static RuleSpec bipolar_sd(const std::vector<AgentId>& order,
                               const std::vector<ObjectId>& first_owns,
                               const std::vector<ObjectId>& second_owns);
    static RuleSpec ttc(const std::vector<ObjectId>& endowment);
    static RuleSpec hierarchical(ControlRightsTable table, const std::string& name = "hierarchical");
    static RuleSpec trading_cycles(ControlRightsTable table, const std::string& name = "tc");
    static RuleSpec imposed_rule(const Assignment& a);
    static RuleSpec bossy_demo(const std::vector<AgentId>& order);
};

// One cleared trading cycle: the cyclic sequence of (agent, object she
// points to and receives), canonically rotated to start at the least agent.
struct TraceStep {
    std::vector<std::pair<AgentId, ObjectId>> cleared_cycle;
    int step_index = 0; // clearing round under the canonical policy

    bool operator==(const TraceStep& o) const {
        return cleared_cycle == o.cleared_cycle && step_index == o.step_index;
    }
    bool operator<(const TraceStep& o) const {
        if (step_index != o.step_index) return step_index < o.step_index;
        return cleared_cycle < o.cleared_cycle;
    }
};

// Runs the rule on a profile. TC kinds clear all currently present cycles
// each round; the result does not depend on that policy (see
// all_clearing_orders, which verifies order independence explicitly).
Assignment evaluate(const RuleSpec& spec, const PreferenceProfile& profile);

std::pair<Assignment, std::vector<TraceStep>> evaluate_with_trace(const RuleSpec& spec,
                                                                  const PreferenceProfile& profile);

using CycleSequence = std::vector<std::vector<std::pair<AgentId, ObjectId>>>;

// Every maximal sequence obtainable by repeatedly clearing exactly one
// currently present cycle. Asserts that all sequences end in the same
// assignment and returns them. TC kinds only.
std::set<CycleSequence> all_clearing_orders(const RuleSpec& spec, const PreferenceProfile& profile);

// Reallocation after the first dictator switches her top, computed through
// the upgrading/downgrading chain closed form rather than a rerun of the
// serial dictatorship. Equals evaluate(SD) with new_top promoted to the
// front of the first dictator's order; cross-checked exhaustively in tests.
Assignment sd_chain_reallocation(const std::vector<AgentId>& order, const PreferenceProfile& profile,
                                 ObjectId new_top);

// ---- table generators ----------------------------------------------------

// All proper submatchings of an n-agent, m-object environment.
std::vector<Submatching> enumerate_proper_submatchings(int n, int m);

// Explicit full table for per-object priority lists (first unmatched agent
// on the list owns the object). SD, bipolar SD and TTC are instances.
ControlRightsTable control_table_from_priority_lists(int n, int m,
                                                     const std::vector<std::vector<AgentId>>& priority);

// Owner-only table equivalent to SD with the given order.
ControlRightsTable sd_control_table(const std::vector<AgentId>& order, int m);

// Trading-cycles table with agent 0 brokering object 0 while agents
// 1..n-1 own objects 1..n-1. Brokerage persists while at least three
// agents are unmatched; with two left the other agent owns the brokered
// object, which is the standard equivalent conversion.
ControlRightsTable broker_control_table(int n);

} // namespace spmech

#endif
