#include "spmech/catalog.hpp"

#include <numeric>

namespace spmech::catalog {

namespace {

ExpectedProperties all_good_hierarchical() {
    ExpectedProperties e;
    e.strategy_proof = e.group_strategy_proof = e.efficient = true;
    e.nonbossy = e.nonautarkic = e.reallocation_proof = true;
    e.hierarchical = true;
    return e;
}

std::vector<AgentId> iota_agents(int n) {
    std::vector<AgentId> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

ControlRightsTable case_iv_table() {
    // One owner at every submatching, but which agent inherits after the
    // first dictator depends on the object she took.
    const int n = 4;
    ControlRightsTable table;
    table.n = table.m = n;
    for (const Submatching& sigma : enumerate_proper_submatchings(n, n)) {
        const uint32_t free_agents = sigma.unmatched_agents(n);
        AgentId owner;
        if (free_agents & 1) {
            owner = 0;
        } else {
            ObjectId taken = -1;
            for (auto [agent, object] : sigma.pairs)
                if (agent == 0) taken = object;
            const std::vector<AgentId> succession =
                taken == 0 ? std::vector<AgentId>{1, 2, 3} : std::vector<AgentId>{2, 1, 3};
            owner = -1;
            for (AgentId k : succession)
                if ((free_agents >> k) & 1) {
                    owner = k;
                    break;
                }
        }
        std::vector<std::pair<ObjectId, ControlRight>> rights;
        for (ObjectId x = 0; x < n; ++x)
            if (!sigma.matches_object(x)) rights.emplace_back(x, ControlRight{owner, Role::Owner});
        table.add(sigma, rights);
    }
    return table;
}

} // namespace

std::vector<CatalogEntry> standard_catalog(int n) {
    if (n != 3 && n != 4) throw DomainError("the standard catalog is defined for n = 3 and n = 4");
    std::vector<CatalogEntry> catalog;
    const std::vector<AgentId> order = iota_agents(n);

    {
        CatalogEntry e{RuleSpec::sd(order), all_good_hierarchical()};
        e.expect.bipolar_sd = true; // the degenerate split where the first agent owns everything
        catalog.push_back(std::move(e));
    }
    {
        std::vector<ObjectId> first_owns{0, 1}, second_owns;
        for (ObjectId x = 2; x < n; ++x) second_owns.push_back(x);
        CatalogEntry e{RuleSpec::bipolar_sd(order, first_owns, second_owns), all_good_hierarchical()};
        e.expect.bipolar_sd = true;
        catalog.push_back(std::move(e));
    }
    {
        std::vector<ObjectId> endowment(n);
        std::iota(endowment.begin(), endowment.end(), 0);
        CatalogEntry e{RuleSpec::ttc(endowment), all_good_hierarchical()};
        e.expect.ttc = true;
        catalog.push_back(std::move(e));
    }
    {
        RuleSpec spec = RuleSpec::trading_cycles(broker_control_table(n), "broker");
        CatalogEntry e{spec, {}};
        e.expect.strategy_proof = e.expect.group_strategy_proof = e.expect.efficient = true;
        e.expect.nonbossy = e.expect.nonautarkic = true;
        e.expect.reallocation_proof = false; // brokered trades admit profitable pair misreports
        catalog.push_back(std::move(e));
    }
    {
        std::vector<int> objects(n);
        std::iota(objects.begin(), objects.end(), 0);
        CatalogEntry e{RuleSpec::imposed_rule(Assignment::from_vector(objects)), {}};
        e.expect.strategy_proof = e.expect.group_strategy_proof = true;
        e.expect.nonbossy = e.expect.nonautarkic = true;
        e.expect.reallocation_proof = true;
        e.expect.efficient = false;
        catalog.push_back(std::move(e));
    }
    {
        CatalogEntry e{RuleSpec::bossy_demo(order), {}};
        e.expect.strategy_proof = true;
        e.expect.efficient = true;
        e.expect.nonautarkic = true;
        e.expect.nonbossy = false;
        e.expect.group_strategy_proof = false;
        // The bossy tail flip never helps the flipping agent herself, so no
        // pair manipulation survives the unilateral-safety clause.
        e.expect.reallocation_proof = true;
        catalog.push_back(std::move(e));
    }
    return catalog;
}

std::vector<CatalogEntry> structural_case_rules() {
    std::vector<CatalogEntry> rules;
    auto add_lists = [&](const std::string& name, std::vector<std::vector<AgentId>> priority) {
        RuleSpec spec = RuleSpec::hierarchical(control_table_from_priority_lists(4, 4, priority), name);
        CatalogEntry e{std::move(spec), all_good_hierarchical()};
        rules.push_back(std::move(e));
    };
    // (i) three owners at the start
    add_lists("case_i", {{0, 1, 2, 3}, {1, 0, 2, 3}, {2, 0, 1, 3}, {2, 0, 1, 3}});
    // (ii) two owners at the start and again two owners later
    add_lists("case_ii", {{0, 2, 1, 3}, {0, 2, 1, 3}, {1, 3, 0, 2}, {1, 3, 0, 2}});
    // (iii) one owner at the start, two owners after she leaves
    add_lists("case_iii", {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 2, 1, 3}, {0, 2, 1, 3}});
    // (iv) single owners throughout, succession depending on the first pick
    {
        RuleSpec spec = RuleSpec::hierarchical(case_iv_table(), "case_iv");
        CatalogEntry e{std::move(spec), all_good_hierarchical()};
        rules.push_back(std::move(e));
    }
    return rules;
}

Assignment broken_sd_inverted(const std::vector<AgentId>& order, const PreferenceProfile& profile) {
    Assignment out;
    out.n = profile.agent_count();
    uint32_t remaining = (1u << profile.object_count()) - 1;
    for (size_t k = 0; k < order.size(); ++k) {
        const StrictOrder& r = profile.of(order[k]);
        ObjectId pick = -1;
        if (k == 1) {
            for (int rank = r.m - 1; rank >= 0; --rank)
                if ((remaining >> r.at_rank(rank)) & 1) {
                    pick = r.at_rank(rank);
                    break;
                }
        } else {
            pick = r.top_among(remaining);
        }
        out.set(order[k], pick);
        remaining &= ~(1u << pick);
    }
    return out;
}

PreferenceProfile identical_preferences_profile(int n) {
    std::vector<int> ranking(n);
    for (int r = 0; r < n; ++r) ranking[r] = n - 1 - r;
    PreferenceProfile profile;
    profile.orders.assign(n, StrictOrder::from_ranking(ranking));
    return profile;
}

OpposingProfile ttc_grand_cycle_opposing(const std::vector<ObjectId>& endowment, AgentId i) {
    const int n = static_cast<int>(endowment.size());
    OpposingProfile opp;
    opp.excluded = i;
    opp.orders.resize(n);
    for (AgentId k = 0; k < n; ++k) {
        std::vector<int> ranking;
        for (int step = 1; step <= n; ++step) ranking.push_back(endowment[(k + step) % n]);
        opp.orders[k] = StrictOrder::from_ranking(ranking); // own endowment last
    }
    return opp;
}

OpposingProfile ttc_rotational_opposing(const std::vector<ObjectId>& endowment, AgentId i, AgentId j) {
    const int n = static_cast<int>(endowment.size());
    if (i == j) throw DomainError("rotational witness needs two distinct agents");
    std::vector<ObjectId> base{endowment[i]};
    for (AgentId k = 0; k < n; ++k)
        if (k != i && k != j) base.push_back(endowment[k]);
    base.push_back(endowment[j]);

    OpposingProfile opp;
    opp.excluded = i;
    opp.orders.resize(n);
    for (AgentId k = 0; k < n; ++k) {
        if (k == i) continue;
        std::vector<int> ranking;
        for (ObjectId x : base)
            if (x != endowment[k]) ranking.push_back(x);
        ranking.push_back(endowment[k]);
        opp.orders[k] = StrictOrder::from_ranking(ranking);
    }
    opp.orders[i] = opp.orders[i == 0 ? 1 : 0]; // placeholder slot, never read
    return opp;
}

PreferenceProfile broker_example_profile(int n) {
    if (n < 3) throw DomainError("the broker example needs at least three agents");
    PreferenceProfile profile;
    profile.orders.resize(n);
    auto with_top = [&](ObjectId top) {
        std::vector<int> ranking{top};
        for (ObjectId x = 0; x < n; ++x)
            if (x != top) ranking.push_back(x);
        return StrictOrder::from_ranking(ranking);
    };
    profile.orders[0] = with_top(1);
    profile.orders[1] = with_top(2);
    profile.orders[2] = with_top(0);
    for (AgentId k = 3; k < n; ++k) profile.orders[k] = with_top(k);
    return profile;
}

} // namespace spmech::catalog
