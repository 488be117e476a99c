#include "spmech/menus.hpp"

#include <algorithm>

namespace spmech {

std::vector<ObjectId> Menu::sorted_items() const {
    std::vector<ObjectId> out;
    for (int x = 0; x < m; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

Menu menu_self(const RuleSpec& spec, AgentId i, const OpposingProfile& opp) {
    if (i < 0 || i >= spec.n) throw DomainError("menu_self: agent out of range");
    if (opp.excluded != i) throw DomainError("menu_self: opposing profile excludes a different agent");
    Menu menu;
    menu.m = spec.m;
    PreferenceProfile profile = opp.with(all_orders(spec.m)[0]);
    for (const StrictOrder& report : all_orders(spec.m)) {
        profile.orders[i] = report;
        menu.items_mask |= 1u << evaluate(spec, profile).of(i);
    }
    return menu;
}

GroupMenu menu_group(const RuleSpec& spec, AgentId i, std::vector<AgentId> group,
                     const OpposingProfile& opp) {
    if (i < 0 || i >= spec.n) throw DomainError("menu_group: agent out of range");
    if (opp.excluded != i) throw DomainError("menu_group: opposing profile excludes a different agent");
    std::sort(group.begin(), group.end());
    for (size_t k = 0; k < group.size(); ++k) {
        if (group[k] == i) throw DomainError("menu_group: the acting agent cannot be in the group");
        if (group[k] < 0 || group[k] >= spec.n || (k > 0 && group[k] == group[k - 1]))
            throw DomainError("menu_group: group must be a set of other agents");
    }
    GroupMenu menu;
    menu.group = group;
    PreferenceProfile profile = opp.with(all_orders(spec.m)[0]);
    for (const StrictOrder& report : all_orders(spec.m)) {
        profile.orders[i] = report;
        const Assignment a = evaluate(spec, profile);
        std::vector<ObjectId> tuple;
        tuple.reserve(group.size());
        for (AgentId j : group) tuple.push_back(a.of(j));
        menu.items.insert(std::move(tuple));
    }
    return menu;
}

int delta_self(const RuleSpec& spec, AgentId i, const OpposingProfile& opp) {
    return menu_self(spec, i, opp).size();
}

int delta_group(const RuleSpec& spec, AgentId i, const std::vector<AgentId>& group,
                const OpposingProfile& opp) {
    return menu_group(spec, i, group, opp).size();
}

bool has_power_over(const RuleSpec& spec, AgentId i, AgentId j, const OpposingProfile& opp) {
    if (i == j) throw DomainError("has_power_over: the two agents must differ");
    return delta_group(spec, i, {j}, opp) > 1;
}

OpposingProfile opposing_at(int n, int m, AgentId i, int64_t index) {
    const auto& table = all_orders(m);
    const int64_t fact = factorial(m);
    OpposingProfile opp;
    opp.excluded = i;
    opp.orders.resize(n);
    for (AgentId j = 0; j < n; ++j) {
        if (j == i) continue;
        opp.orders[j] = table[static_cast<size_t>(index % fact)];
        index /= fact;
    }
    return opp;
}

std::optional<FreedomWitness> freedom_geq_witness(const RuleSpec& a, const RuleSpec& b, AgentId i,
                                                  int64_t budget) {
    if (a.n != b.n || a.m != b.m) throw DomainError("freedom comparison needs a common environment");
    const int64_t opp_count = ProfileEnumerator(a.n, a.m, budget).count() / factorial(a.m);
    for (int64_t k = 0; k < opp_count; ++k) {
        const OpposingProfile opp = opposing_at(a.n, a.m, i, k);
        const Menu ma = menu_self(a, i, opp);
        const Menu mb = menu_self(b, i, opp);
        if (!ma.includes(mb)) {
            const uint32_t missing = mb.items_mask & ~ma.items_mask;
            return FreedomWitness{opp, __builtin_ctz(missing)};
        }
    }
    return std::nullopt;
}

bool freedom_geq(const RuleSpec& a, const RuleSpec& b, AgentId i) {
    return !freedom_geq_witness(a, b, i).has_value();
}

} // namespace spmech
