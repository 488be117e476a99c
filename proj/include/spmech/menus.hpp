#ifndef SPMECH_MENUS_HPP
#define SPMECH_MENUS_HPP

#include <optional>
#include <set>
#include <vector>

#include "spmech/model.hpp"
#include "spmech/rules.hpp"

// The measurement layer. Menus are computed by full enumeration of the
// agent's m! reports, with no structural shortcuts, so they can serve as a
// rule-agnostic oracle for everything else.

namespace spmech {

struct Menu {
    int m = 0;
    uint32_t items_mask = 0;

    int size() const { return __builtin_popcount(items_mask); }
    bool contains(ObjectId x) const { return (items_mask >> x) & 1; }
    bool includes(const Menu& other) const { return (items_mask & other.items_mask) == other.items_mask; }
    std::vector<ObjectId> sorted_items() const;
};

// Set of object tuples a single agent can induce for an ordered group of
// other agents; tuple coordinates follow ascending AgentId.
struct GroupMenu {
    std::vector<AgentId> group;
    std::set<std::vector<ObjectId>> items;

    int size() const { return static_cast<int>(items.size()); }
};

Menu menu_self(const RuleSpec& spec, AgentId i, const OpposingProfile& opp);
GroupMenu menu_group(const RuleSpec& spec, AgentId i, std::vector<AgentId> group, const OpposingProfile& opp);

int delta_self(const RuleSpec& spec, AgentId i, const OpposingProfile& opp);
int delta_group(const RuleSpec& spec, AgentId i, const std::vector<AgentId>& group, const OpposingProfile& opp);

// |menu of i for {j}| > 1.
bool has_power_over(const RuleSpec& spec, AgentId i, AgentId j, const OpposingProfile& opp);

struct FreedomWitness {
    OpposingProfile opp;
    ObjectId missing = -1; // in B's menu but not in A's
};

// True iff A's menu for i includes B's at every opposing profile; on
// failure returns the witnessing opposing profile and missing object.
std::optional<FreedomWitness> freedom_geq_witness(const RuleSpec& a, const RuleSpec& b, AgentId i,
                                                  int64_t budget = default_profile_budget());
bool freedom_geq(const RuleSpec& a, const RuleSpec& b, AgentId i);

// Decodes opposing-profile index k (mixed radix over the n-1 agents other
// than i, ascending, least significant first) into an OpposingProfile.
OpposingProfile opposing_at(int n, int m, AgentId i, int64_t index);

} // namespace spmech

#endif
