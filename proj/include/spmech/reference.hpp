#ifndef SPMECH_REFERENCE_HPP
#define SPMECH_REFERENCE_HPP

#include <algorithm>
#include <vector>

#include "spmech/model.hpp"
#include "spmech/rules.hpp"

// Plain serial reference implementations, written independently of the
// trading-cycles engine and of the parallel sweep kernels. Tests and the
// benchmark compare against these.

namespace spmech::reference {

// Serial dictatorship by sequential top picks.
inline Assignment sd(const std::vector<AgentId>& order, const PreferenceProfile& profile) {
    Assignment out;
    out.n = profile.agent_count();
    uint32_t remaining = (1u << profile.object_count()) - 1;
    for (AgentId i : order) {
        ObjectId x = profile.of(i).top_among(remaining);
        out.set(i, x);
        remaining &= ~(1u << x);
    }
    return out;
}

// Textbook top-trading-cycles loop: repeatedly follow top pointers from an
// arbitrary unmatched agent until an agent repeats, clear that cycle.
inline Assignment ttc(const std::vector<ObjectId>& endowment, const PreferenceProfile& profile) {
    const int n = profile.agent_count();
    Assignment out;
    out.n = n;
    std::vector<AgentId> owner_of(profile.object_count());
    for (AgentId i = 0; i < n; ++i) owner_of[endowment[i]] = i;

    uint32_t free_agents = (1u << n) - 1;
    uint32_t free_objects = (1u << profile.object_count()) - 1;
    while (free_agents) {
        std::vector<int> seen(n, 0);
        int cur = __builtin_ctz(free_agents);
        while (!seen[cur]) {
            seen[cur] = 1;
            cur = owner_of[profile.of(cur).top_among(free_objects)];
        }
        // cur starts a cycle
        int walker = cur;
        std::vector<std::pair<AgentId, ObjectId>> cleared;
        do {
            ObjectId x = profile.of(walker).top_among(free_objects);
            cleared.emplace_back(walker, x);
            walker = owner_of[x];
        } while (walker != cur);
        for (auto [i, x] : cleared) {
            out.set(i, x);
            free_agents &= ~(1u << i);
            free_objects &= ~(1u << x);
        }
    }
    return out;
}

// Direct quantifier-by-quantifier strategy-proofness check; no rule table,
// no parallelism. Returns true when no profitable deviation exists.
inline bool strategy_proof_naive(const RuleSpec& spec, int64_t budget = default_profile_budget()) {
    ProfileEnumerator profiles(spec.n, spec.m, budget);
    const auto& orders = all_orders(spec.m);
    PreferenceProfile profile;
    for (int64_t p = 0; p < profiles.count(); ++p) {
        profiles.decode(p, profile);
        const Assignment truthful = evaluate(spec, profile);
        for (AgentId i = 0; i < spec.n; ++i) {
            PreferenceProfile deviated = profile;
            for (const StrictOrder& lie : orders) {
                deviated.orders[i] = lie;
                if (profile.of(i).prefers(evaluate(spec, deviated).of(i), truthful.of(i))) return false;
            }
        }
    }
    return true;
}

} // namespace spmech::reference

#endif
