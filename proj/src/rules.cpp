#include "spmech/rules.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace spmech {

namespace {

std::string submatching_str(const Submatching& sigma) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto [i, x] : sigma.pairs) {
        if (!first) os << ", ";
        first = false;
        os << i << ":" << x;
    }
    os << "}";
    return os.str();
}

std::vector<AgentId> check_agent_permutation(const std::vector<AgentId>& order) {
    const int n = static_cast<int>(order.size());
    std::vector<bool> seen(n, false);
    for (int i : order) {
        if (i < 0 || i >= n || seen[i]) throw DomainError("agent ordering is not a permutation");
        seen[i] = true;
    }
    return order;
}

} // namespace

const char* rule_kind_name(RuleKind kind) {
    switch (kind) {
        case RuleKind::SD: return "sd";
        case RuleKind::BipolarSD: return "bipolar_sd";
        case RuleKind::TTC: return "ttc";
        case RuleKind::HierarchicalExchange: return "hierarchical";
        case RuleKind::TradingCycles: return "tc";
        case RuleKind::Imposed: return "imposed";
        case RuleKind::BossyDemo: return "bossy_demo";
    }
    return "?";
}

void ControlRightsTable::add(const Submatching& sigma,
                             const std::vector<std::pair<ObjectId, ControlRight>>& rights) {
    ControlEntry entry;
    entry.sigma = sigma;
    for (auto& [x, r] : rights) {
        if (x < 0 || x >= kMaxObjects) throw DomainError("control right for object out of range");
        entry.rights[x] = r;
        entry.listed_mask |= 1u << x;
    }
    entries[sigma.key(n)] = std::move(entry);
}

const ControlEntry* ControlRightsTable::find(const Submatching& sigma) const {
    auto it = entries.find(sigma.key(n));
    return it == entries.end() ? nullptr : &it->second;
}

// ---- rule spec factories ---------------------------------------------------

RuleSpec RuleSpec::sd(const std::vector<AgentId>& order) {
    RuleSpec spec;
    spec.kind = RuleKind::SD;
    spec.n = spec.m = static_cast<int>(order.size());
    spec.order = check_agent_permutation(order);
    spec.priority.assign(spec.m, spec.order);
    spec.name = "sd";
    return spec;
}

RuleSpec RuleSpec::bipolar_sd(const std::vector<AgentId>& order,
                              const std::vector<ObjectId>& first_owns,
                              const std::vector<ObjectId>& second_owns) {
    RuleSpec spec;
    spec.kind = RuleKind::BipolarSD;
    spec.n = spec.m = static_cast<int>(order.size());
    spec.order = check_agent_permutation(order);
    if (spec.n < 2) throw DomainError("bipolar SD needs at least two agents");
    spec.owner_split = {first_owns, second_owns};
    std::vector<bool> covered(spec.m, false);
    for (int side = 0; side < 2; ++side)
        for (ObjectId x : spec.owner_split[side]) {
            if (x < 0 || x >= spec.m || covered[x]) throw DomainError("owner split is not a partition of the objects");
            covered[x] = true;
        }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
        throw DomainError("owner split is not a partition of the objects");

    // First unmatched of (i1, i2, rest) owns the i1 side, and symmetrically;
    // after both polar agents are matched this is the plain dictator order.
    std::vector<AgentId> lead = spec.order;
    std::vector<AgentId> colead = spec.order;
    std::swap(colead[0], colead[1]);
    spec.priority.assign(spec.m, lead);
    for (ObjectId x : spec.owner_split[1]) spec.priority[x] = colead;
    spec.name = "bipolar_sd";
    return spec;
}

RuleSpec RuleSpec::ttc(const std::vector<ObjectId>& endowment) {
    RuleSpec spec;
    spec.kind = RuleKind::TTC;
    spec.n = spec.m = static_cast<int>(endowment.size());
    std::vector<bool> seen(spec.m, false);
    for (ObjectId x : endowment) {
        if (x < 0 || x >= spec.m || seen[x]) throw DomainError("endowment is not a bijection");
        seen[x] = true;
    }
    spec.endowment = endowment;
    // An endowed object leaves together with its owner, so the tail of the
    // list is never consulted; it is fixed for determinism all the same.
    spec.priority.assign(spec.m, {});
    for (AgentId i = 0; i < spec.n; ++i) {
        auto& list = spec.priority[endowment[i]];
        list.push_back(i);
        for (AgentId j = 0; j < spec.n; ++j)
            if (j != i) list.push_back(j);
    }
    spec.name = "ttc";
    return spec;
}

RuleSpec RuleSpec::hierarchical(ControlRightsTable table, const std::string& name) {
    for (auto& [key, entry] : table.entries)
        for (int x = 0; x < kMaxObjects; ++x)
            if (entry.lists(x) && entry.rights[x].role == Role::Broker)
                throw DomainError("hierarchical exchange tables are owner-only; broker found at " +
                                  submatching_str(entry.sigma));
    RuleSpec spec;
    spec.kind = RuleKind::HierarchicalExchange;
    spec.n = table.n;
    spec.m = table.m;
    spec.table = std::move(table);
    spec.name = name;
    return spec;
}

RuleSpec RuleSpec::trading_cycles(ControlRightsTable table, const std::string& name) {
    RuleSpec spec;
    spec.kind = RuleKind::TradingCycles;
    spec.n = table.n;
    spec.m = table.m;
    spec.table = std::move(table);
    spec.name = name;
    return spec;
}

RuleSpec RuleSpec::imposed_rule(const Assignment& a) {
    RuleSpec spec;
    spec.kind = RuleKind::Imposed;
    spec.n = spec.m = a.n;
    spec.imposed = a;
    spec.name = "imposed";
    return spec;
}

RuleSpec RuleSpec::bossy_demo(const std::vector<AgentId>& order) {
    if (order.size() < 3) throw DomainError("bossy demo needs at least three agents");
    RuleSpec spec;
    spec.kind = RuleKind::BossyDemo;
    spec.n = spec.m = static_cast<int>(order.size());
    spec.order = check_agent_permutation(order);
    spec.name = "bossy_demo";
    return spec;
}

// ---- trading-cycles engine -------------------------------------------------

namespace {

struct EngineState {
    int n = 0, m = 0;
    uint32_t free_agents = 0;
    uint32_t free_objects = 0;
    Submatching sigma;
    Assignment assignment;

    void match(AgentId i, ObjectId x) {
        free_agents &= ~(1u << i);
        free_objects &= ~(1u << x);
        sigma.add(i, x);
        assignment.set(i, x);
    }
    bool complete() const { return free_agents == 0; }
};

EngineState initial_state(const RuleSpec& spec) {
    EngineState st;
    st.n = spec.n;
    st.m = spec.m;
    st.free_agents = (1u << spec.n) - 1;
    st.free_objects = (1u << spec.m) - 1;
    st.assignment.n = spec.n;
    return st;
}

// Control rights for every currently unmatched object.
void resolve_rights(const RuleSpec& spec, const EngineState& st, std::array<ControlRight, kMaxObjects>& rights) {
    if (!spec.priority.empty()) {
        for (int x = 0; x < st.m; ++x) {
            if (!((st.free_objects >> x) & 1)) continue;
            for (AgentId i : spec.priority[x]) {
                if ((st.free_agents >> i) & 1) {
                    rights[x] = ControlRight{i, Role::Owner};
                    break;
                }
            }
        }
        return;
    }
    const ControlEntry* entry = spec.table.find(st.sigma);
    if (!entry)
        throw SpecIncompleteError("control table has no entry for reached submatching " + submatching_str(st.sigma));
    int brokers = 0;
    for (int x = 0; x < st.m; ++x) {
        if (!((st.free_objects >> x) & 1)) continue;
        if (!entry->lists(x))
            throw SpecIncompleteError("control table entry at " + submatching_str(st.sigma) +
                                      " does not cover object " + std::to_string(x));
        const ControlRight r = entry->rights[x];
        if (r.agent < 0 || r.agent >= st.n || !((st.free_agents >> r.agent) & 1))
            throw DomainError("control right for object " + std::to_string(x) + " at " +
                              submatching_str(st.sigma) + " is not held by an unmatched agent");
        if (r.role == Role::Broker) ++brokers;
        rights[x] = r;
    }
    if (brokers >= 3)
        throw UnsupportedConfigError("three-broker configuration reached at " + submatching_str(st.sigma));
    if (brokers > 1)
        throw UnsupportedConfigError("multiple brokers at " + submatching_str(st.sigma));
}

using Cycle = std::vector<std::pair<AgentId, ObjectId>>;

// All trading cycles currently present: owners point to their most
// preferred unmatched object, a broker to her most preferred unmatched
// object among those she does not broker, and objects point to their
// controllers. Cycles are returned ordered by their least agent and
// rotated to start there.
std::vector<Cycle> present_cycles(const RuleSpec& spec, const EngineState& st,
                                  const PreferenceProfile& profile) {
    std::array<ControlRight, kMaxObjects> rights{};
    resolve_rights(spec, st, rights);

    std::array<int8_t, kMaxObjects> points{};
    points.fill(-1);
    std::array<int8_t, kMaxObjects> controls{}; // agent -> brokered object or -1
    controls.fill(-1);
    std::array<bool, kMaxObjects> is_controller{};
    for (int x = 0; x < st.m; ++x) {
        if (!((st.free_objects >> x) & 1)) continue;
        is_controller[rights[x].agent] = true;
        if (rights[x].role == Role::Broker) controls[rights[x].agent] = static_cast<int8_t>(x);
    }
    for (int i = 0; i < st.n; ++i) {
        if (!((st.free_agents >> i) & 1) || !is_controller[i]) continue;
        uint32_t menu = st.free_objects;
        if (controls[i] >= 0) menu &= ~(1u << controls[i]);
        if (menu == 0) throw DomainError("broker controls the only unmatched object");
        points[i] = static_cast<int8_t>(profile.of(i).top_among(menu));
    }

    // agent -> agent successor through the pointed object's controller
    std::array<int8_t, kMaxObjects> succ{};
    succ.fill(-1);
    for (int i = 0; i < st.n; ++i)
        if (points[i] >= 0) succ[i] = static_cast<int8_t>(rights[points[i]].agent);

    std::vector<Cycle> cycles;
    std::array<uint8_t, kMaxObjects> color{}; // 0 new, 1 on current walk, 2 done
    for (int start = 0; start < st.n; ++start) {
        if (succ[start] < 0 || color[start] != 0) continue;
        std::vector<int> walk;
        int cur = start;
        while (cur >= 0 && color[cur] == 0) {
            color[cur] = 1;
            walk.push_back(cur);
            cur = succ[cur];
        }
        if (cur >= 0 && color[cur] == 1) {
            auto it = std::find(walk.begin(), walk.end(), cur);
            Cycle cycle;
            for (auto w = it; w != walk.end(); ++w) cycle.emplace_back(*w, points[*w]);
            auto least = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), least, cycle.end());
            cycles.push_back(std::move(cycle));
        }
        for (int w : walk) color[w] = 2;
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

void clear_cycle(EngineState& st, const Cycle& cycle) {
    for (auto [i, x] : cycle) st.match(i, x);
}

Assignment run_tc(const RuleSpec& spec, const PreferenceProfile& profile, std::vector<TraceStep>* trace) {
    EngineState st = initial_state(spec);
    int round = 0;
    while (!st.complete()) {
        auto cycles = present_cycles(spec, st, profile);
        if (cycles.empty()) throw DomainError("no trading cycle present; control table is inconsistent");
        for (auto& cycle : cycles) {
            clear_cycle(st, cycle);
            if (trace) trace->push_back(TraceStep{cycle, round});
        }
        ++round;
    }
    return st.assignment;
}

Assignment run_bossy_demo(const RuleSpec& spec, const PreferenceProfile& profile) {
    // The head agent takes her reported top. The tail agents are served in
    // the listed order unless the head's last-ranked object is object 0,
    // in which case the tail order is reversed. Strategy-proof but bossy:
    // the head's tail ranking moves other agents without moving her.
    std::vector<AgentId> serve(spec.order.begin() + 1, spec.order.end());
    const StrictOrder& head = profile.of(spec.order[0]);
    if (head.at_rank(spec.m - 1) == 0) std::reverse(serve.begin(), serve.end());
    serve.insert(serve.begin(), spec.order[0]);

    Assignment out;
    out.n = spec.n;
    uint32_t remaining = (1u << spec.m) - 1;
    for (AgentId i : serve) {
        ObjectId x = profile.of(i).top_among(remaining);
        out.set(i, x);
        remaining &= ~(1u << x);
    }
    return out;
}

void check_profile_shape(const RuleSpec& spec, const PreferenceProfile& profile) {
    if (profile.agent_count() != spec.n || profile.object_count() != spec.m)
        throw DomainError("profile shape does not match the rule");
}

} // namespace

Assignment evaluate(const RuleSpec& spec, const PreferenceProfile& profile) {
    check_profile_shape(spec, profile);
    switch (spec.kind) {
        case RuleKind::Imposed: return spec.imposed;
        case RuleKind::BossyDemo: return run_bossy_demo(spec, profile);
        default: return run_tc(spec, profile, nullptr);
    }
}

std::pair<Assignment, std::vector<TraceStep>> evaluate_with_trace(const RuleSpec& spec,
                                                                  const PreferenceProfile& profile) {
    check_profile_shape(spec, profile);
    if (!spec.is_tc_kind())
        throw DomainError(std::string("cycle traces exist only for trading-cycle kinds, not ") +
                          rule_kind_name(spec.kind));
    std::vector<TraceStep> trace;
    Assignment a = run_tc(spec, profile, &trace);
    return {a, trace};
}

std::set<CycleSequence> all_clearing_orders(const RuleSpec& spec, const PreferenceProfile& profile) {
    check_profile_shape(spec, profile);
    if (!spec.is_tc_kind())
        throw DomainError(std::string("clearing orders exist only for trading-cycle kinds, not ") +
                          rule_kind_name(spec.kind));

    std::set<CycleSequence> sequences;
    std::set<uint32_t> finals;
    CycleSequence current;

    std::function<void(const EngineState&)> rec = [&](const EngineState& st) {
        if (st.complete()) {
            sequences.insert(current);
            finals.insert(st.assignment.pack());
            return;
        }
        auto cycles = present_cycles(spec, st, profile);
        if (cycles.empty()) throw DomainError("no trading cycle present; control table is inconsistent");
        for (auto& cycle : cycles) {
            EngineState next = st;
            clear_cycle(next, cycle);
            current.push_back(cycle);
            rec(next);
            current.pop_back();
        }
    };
    rec(initial_state(spec));

    if (finals.size() != 1)
        throw DomainError("clearing order changed the final assignment; control table is inconsistent");
    return sequences;
}

// ---- Appendix-style chain reallocation -------------------------------------

Assignment sd_chain_reallocation(const std::vector<AgentId>& order, const PreferenceProfile& profile,
                                 ObjectId new_top) {
    check_agent_permutation(order);
    const int n = static_cast<int>(order.size());
    const int m = profile.object_count();
    if (profile.agent_count() != n) throw DomainError("profile shape does not match the ordering");
    if (new_top < 0 || new_top >= m) throw DomainError("new top object out of range");

    // Work in dictator-position space.
    std::array<const StrictOrder*, kMaxObjects> pref{};
    for (int p = 0; p < n; ++p) pref[p] = &profile.of(order[p]);
    Assignment mu;
    mu.n = n;
    {
        uint32_t remaining = (1u << m) - 1;
        for (int p = 0; p < n; ++p) {
            const ObjectId x = pref[p]->top_among(remaining);
            mu.set(p, x);
            remaining &= ~(1u << x);
        }
    }

    Assignment result = mu;
    if (new_top != mu.of(0)) {
        int m_pos = -1;
        for (int p = 0; p < n; ++p)
            if (mu.of(p) == new_top) m_pos = p;
        assert(m_pos > 0);

        // Upgrading chain: positions that would grab the object freed by
        // their predecessor on the chain.
        std::array<int, kMaxObjects> w{};
        int w_len = 1;
        w[0] = 0;
        for (;;) {
            int next = -1;
            for (int i = w[w_len - 1] + 1; i < n; ++i)
                if (pref[i]->prefers(mu.of(w[w_len - 1]), mu.of(i))) {
                    next = i;
                    break;
                }
            if (next < 0) break;
            w[w_len++] = next;
        }

        auto W = [&](int i) { // last upgrading position strictly before i
            int best = 0;
            for (int s = 0; s < w_len; ++s)
                if (w[s] < i) best = w[s];
            return best;
        };
        auto v = [&](int i) { // original owner of i's favourite among later originals
            int best = -1;
            for (int k = i + 1; k < n; ++k)
                if (best < 0 || pref[i]->prefers(mu.of(k), mu.of(best))) best = k;
            assert(best > i);
            return best;
        };
        auto gamma = [&](int i) {
            const int wi = W(i);
            for (int k = i + 1; k < n; ++k)
                if (!pref[i]->prefers(mu.of(wi), mu.of(k))) return v(i);
            return wi;
        };

        // The gamma walk from m_pos is strictly increasing, then strictly
        // decreasing, and terminates at position 0.
        std::array<int, 2 * kMaxObjects + 2> chain{};
        int chain_len = 1;
        chain[0] = m_pos;
        while (chain[chain_len - 1] != 0) {
            if (chain_len > 2 * n) throw DomainError("gamma walk failed to terminate");
            chain[chain_len] = gamma(chain[chain_len - 1]);
            ++chain_len;
        }
        bool decreasing = false;
        for (int t = 1; t < chain_len; ++t) {
            if (chain[t] == chain[t - 1]) throw DomainError("gamma walk stalled");
            if (chain[t] < chain[t - 1]) decreasing = true;
            else if (decreasing) throw DomainError("gamma walk increased after decreasing");
        }

        result.set(0, new_top);
        for (int t = 0; t + 1 < chain_len; ++t) result.set(chain[t], mu.of(chain[t + 1]));
    }

    // Back to agent space.
    Assignment out;
    out.n = n;
    for (int p = 0; p < n; ++p) out.set(order[p], result.of(p));
    return out;
}

// ---- table generators ------------------------------------------------------

std::vector<Submatching> enumerate_proper_submatchings(int n, int m) {
    if (n < 1 || n > kMaxObjects || m < 1 || m > kMaxObjects)
        throw CapacityError("submatching enumeration supports up to 8 agents and objects");
    std::vector<Submatching> out;
    for (uint32_t agents = 0; agents < (1u << n); ++agents) {
        const int k = __builtin_popcount(agents);
        if (k >= n || k > m) continue;
        std::vector<AgentId> chosen;
        for (int i = 0; i < n; ++i)
            if ((agents >> i) & 1) chosen.push_back(i);
        // all injective object choices for the chosen agents
        std::vector<int> objs(m);
        std::iota(objs.begin(), objs.end(), 0);
        std::vector<int> pick(k, -1);
        std::function<void(int, uint32_t)> rec = [&](int slot, uint32_t used) {
            if (slot == k) {
                std::vector<std::pair<AgentId, ObjectId>> pairs;
                for (int s = 0; s < k; ++s) pairs.emplace_back(chosen[s], pick[s]);
                out.push_back(Submatching::from_pairs(pairs));
                return;
            }
            for (int x = 0; x < m; ++x) {
                if ((used >> x) & 1) continue;
                pick[slot] = x;
                rec(slot + 1, used | (1u << x));
            }
        };
        rec(0, 0);
    }
    return out;
}

ControlRightsTable control_table_from_priority_lists(int n, int m,
                                                     const std::vector<std::vector<AgentId>>& priority) {
    ControlRightsTable table;
    table.n = n;
    table.m = m;
    for (const Submatching& sigma : enumerate_proper_submatchings(n, m)) {
        const uint32_t free_agents = sigma.unmatched_agents(n);
        std::vector<std::pair<ObjectId, ControlRight>> rights;
        for (int x = 0; x < m; ++x) {
            if (sigma.matches_object(x)) continue;
            for (AgentId i : priority[x])
                if ((free_agents >> i) & 1) {
                    rights.emplace_back(x, ControlRight{i, Role::Owner});
                    break;
                }
        }
        table.add(sigma, rights);
    }
    return table;
}

ControlRightsTable sd_control_table(const std::vector<AgentId>& order, int m) {
    check_agent_permutation(order);
    return control_table_from_priority_lists(static_cast<int>(order.size()), m,
                                             std::vector<std::vector<AgentId>>(m, order));
}

ControlRightsTable broker_control_table(int n) {
    if (n < 3) throw DomainError("broker table needs at least three agents");
    ControlRightsTable table;
    table.n = table.m = n;
    for (const Submatching& sigma : enumerate_proper_submatchings(n, n)) {
        const uint32_t free_agents = sigma.unmatched_agents(n);
        const int remaining = __builtin_popcount(free_agents);
        auto least_other = [&]() -> AgentId {
            for (int i = 1; i < n; ++i)
                if ((free_agents >> i) & 1) return i;
            throw DomainError("no candidate owner");
        };
        std::vector<std::pair<ObjectId, ControlRight>> rights;
        for (int x = 0; x < n; ++x) {
            if (sigma.matches_object(x)) continue;
            if (remaining == 1) {
                rights.emplace_back(x, ControlRight{static_cast<AgentId>(__builtin_ctz(free_agents)), Role::Owner});
            } else if (x == 0 && (free_agents & 1)) {
                if (remaining >= 3) rights.emplace_back(x, ControlRight{0, Role::Broker});
                else rights.emplace_back(x, ControlRight{least_other(), Role::Owner});
            } else if (x >= 1 && ((free_agents >> x) & 1)) {
                rights.emplace_back(x, ControlRight{x, Role::Owner}); // original owner
            } else {
                rights.emplace_back(x, ControlRight{least_other(), Role::Owner});
            }
        }
        table.add(sigma, rights);
    }
    return table;
}

// ---- validation ------------------------------------------------------------

ValidationReport validate_control_rights(const ControlRightsTable& table, int n, int m) {
    ValidationReport report;
    auto flag = [&](const std::string& condition, const Submatching& sigma, const std::string& detail) {
        report.valid = false;
        report.issues.push_back(ValidationIssue{condition, sigma, detail});
    };

    for (auto& [key, entry] : table.entries) {
        const Submatching& sigma = entry.sigma;
        const uint32_t free_agents = sigma.unmatched_agents(n);
        const uint32_t free_objects = sigma.unmatched_objects(m);

        if ((entry.listed_mask & free_objects) != free_objects)
            flag("domain", sigma, "some unmatched object has no control right");
        if (entry.listed_mask & ~free_objects)
            flag("domain", sigma, "control right listed for a matched object");

        int brokers = 0;
        std::array<bool, kMaxObjects> owns{}, brokes{};
        for (int x = 0; x < m; ++x) {
            if (!entry.lists(x) || !((free_objects >> x) & 1)) continue;
            const ControlRight r = entry.rights[x];
            if (r.agent < 0 || r.agent >= n || !((free_agents >> r.agent) & 1)) {
                flag("domain", sigma, "object " + std::to_string(x) + " is controlled by a matched or invalid agent");
                continue;
            }
            if (r.role == Role::Broker) {
                ++brokers;
                brokes[r.agent] = true;
            } else {
                owns[r.agent] = true;
            }
        }
        for (int i = 0; i < n; ++i)
            if (owns[i] && brokes[i])
                flag("owner-broker-mix", sigma, "agent " + std::to_string(i) + " both owns and brokers");
        if (brokers >= 3)
            flag("three-brokers", sigma, "three-broker configurations are not supported");
        else if (brokers > 1)
            flag("broker-count", sigma, "more than one broker");
        if (__builtin_popcount(free_agents) == 1 && brokers > 0)
            flag("last-agent", sigma, "the last remaining agent must own the last object");
    }

    // Ownership persistence across every listed sigma ⊆ sigma' pair.
    for (auto& [k1, e1] : table.entries) {
        for (auto& [k2, e2] : table.entries) {
            if (k1 == k2 || !e2.sigma.contains(e1.sigma)) continue;
            const uint32_t free_agents2 = e2.sigma.unmatched_agents(n);
            const uint32_t free_objects2 = e2.sigma.unmatched_objects(m);
            for (int x = 0; x < m; ++x) {
                if (!e1.lists(x) || e1.rights[x].role != Role::Owner) continue;
                const AgentId i = e1.rights[x].agent;
                if (!((free_agents2 >> i) & 1) || !((free_objects2 >> x) & 1)) continue;
                if (!e2.lists(x) || !(e2.rights[x] == ControlRight{i, Role::Owner}))
                    flag("persistence", e2.sigma,
                         "agent " + std::to_string(i) + " lost ownership of object " + std::to_string(x) +
                             " inherited from " + submatching_str(e1.sigma));
            }
        }
    }
    return report;
}

} // namespace spmech
