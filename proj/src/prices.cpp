#include "spmech/prices.hpp"

#include <algorithm>
#include <array>

#include "spmech/menus.hpp"
#include "spmech/strings.hpp"
#include "spmech/sweep.hpp"

namespace spmech::prices {

namespace {

using Edge = PriceConstraintSystem::Edge;

// Tarjan strongly connected components on <= 8 nodes, allocation-free.
// An optional extra edge stands in for a hypothesis under test.
struct Scc {
    int count = 0;
    std::array<int8_t, kMaxObjects> component{};

    Scc(int m, const std::vector<Edge>& edges, const Edge* extra = nullptr)
        : m_(m), edges_(&edges), extra_(extra) {
        component.fill(-1);
        index_.fill(-1);
        for (int v = 0; v < m; ++v)
            if (index_[v] < 0) strongconnect(v);
    }

private:
    void visit_targets(int v, int& lowv) {
        auto relax = [&](int w) {
            if (index_[w] < 0) {
                strongconnect(w);
                lowv = std::min(lowv, low_[w]);
            } else if (on_stack_[w]) {
                lowv = std::min(lowv, index_[w]);
            }
        };
        for (const Edge& e : *edges_)
            if (e.lo == v) relax(e.hi);
        if (extra_ && extra_->lo == v) relax(extra_->hi);
    }

    void strongconnect(int v) {
        index_[v] = low_[v] = next_++;
        stack_[sp_++] = static_cast<int8_t>(v);
        on_stack_[v] = true;
        int lowv = low_[v];
        visit_targets(v, lowv);
        low_[v] = lowv;
        if (low_[v] == index_[v]) {
            for (;;) {
                const int w = stack_[--sp_];
                on_stack_[w] = false;
                component[w] = static_cast<int8_t>(count);
                if (w == v) break;
            }
            ++count;
        }
    }

    int m_;
    const std::vector<Edge>* edges_;
    const Edge* extra_;
    std::array<int, kMaxObjects> index_{}, low_{};
    std::array<bool, kMaxObjects> on_stack_{};
    std::array<int8_t, kMaxObjects> stack_{};
    int sp_ = 0, next_ = 0;
};

bool feasible_with(const PriceConstraintSystem& system, const Edge* extra) {
    const Scc scc(system.m, system.edges, extra);
    for (const Edge& e : system.edges)
        if (e.strict && scc.component[e.lo] == scc.component[e.hi]) return false;
    if (extra && extra->strict && scc.component[extra->lo] == scc.component[extra->hi]) return false;
    return true;
}

} // namespace

PriceConstraintSystem support_constraints(const RuleSpec& ttc_spec, const PreferenceProfile& profile,
                                          const Assignment& assignment) {
    if (ttc_spec.kind != RuleKind::TTC) throw DomainError("supporting prices are defined for TTC rules");
    if (!(evaluate(ttc_spec, profile) == assignment))
        throw DomainError("price system is defined only at the rule's own output");

    PriceConstraintSystem system;
    system.m = ttc_spec.m;
    for (AgentId i = 0; i < ttc_spec.n; ++i) {
        const ObjectId got = assignment.of(i);
        const ObjectId endowed = ttc_spec.endowment[i];
        system.weak(got, endowed); // the received object is affordable
        const StrictOrder& ri = profile.of(i);
        for (int r = 0; r < ri.rank(got); ++r) system.strict(endowed, ri.at_rank(r));
    }
    return system;
}

bool feasible(const PriceConstraintSystem& system) { return feasible_with(system, nullptr); }

bool holds_universally(const PriceConstraintSystem& system, ObjectId a, ObjectId b) {
    if (a == b) return true;
    const Edge negation{b, a, true}; // p_b < p_a
    return !feasible_with(system, &negation);
}

std::vector<ObjectId> BudgetSet::sorted_items(int m) const {
    std::vector<ObjectId> out;
    for (int x = 0; x < m; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

BudgetSet budget_intersection(const PriceConstraintSystem& system, AgentId i,
                              const std::vector<ObjectId>& endowment) {
    BudgetSet budget;
    budget.agent = i;
    const ObjectId endowed = endowment[i];
    for (ObjectId x = 0; x < system.m; ++x)
        if (holds_universally(system, x, endowed)) budget.objects_mask |= 1u << x;
    return budget;
}

std::vector<Rational> sample_price_vector(const PriceConstraintSystem& system) {
    if (!feasible(system)) throw DomainError("price system is infeasible");
    const Scc scc(system.m, system.edges);

    // Longest strict-edge path over the condensation. Tarjan emits
    // components in reverse topological order, so descending ids walk the
    // condensation topologically.
    std::vector<int64_t> level(scc.count, 0);
    for (int c = scc.count - 1; c >= 0; --c) {
        for (const auto& e : system.edges) {
            const int from = scc.component[e.lo];
            const int to = scc.component[e.hi];
            if (from == to) continue;
            if (from == c) level[to] = std::max(level[to], level[c] + (e.strict ? 1 : 0));
        }
    }
    std::vector<Rational> prices(system.m, Rational(0));
    for (int x = 0; x < system.m; ++x) prices[x] = Rational(level[scc.component[x]]);

    for (const auto& e : system.edges) {
        if (e.strict ? !(prices[e.lo] < prices[e.hi]) : !(prices[e.lo] <= prices[e.hi]))
            throw DomainError("sampled price vector violates a constraint");
    }
    return prices;
}

AuditReport verify_cor_menu_budget(const std::vector<ObjectId>& endowment, int workers) {
    const RuleSpec spec = RuleSpec::ttc(endowment);
    const RuleTable table = build_rule_table(spec, workers);
    const MenuMasks menus = build_menu_masks(table);
    const int64_t count = table.count();

    auto scan = [&](int64_t p, AgentId* bad) {
        const PreferenceProfile profile = table.profiles.at(p);
        const PriceConstraintSystem system = support_constraints(spec, profile, table.at(p));
        for (AgentId i = 0; i < table.n; ++i) {
            const BudgetSet budget = budget_intersection(system, i, endowment);
            if (budget.objects_mask != menus.self_menu[i][table.profiles.opposing_index(p, i)]) {
                if (bad) *bad = i;
                return true;
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, workers, [&](int64_t p) { return scan(p, nullptr); });
    const int64_t work = count * table.n;
    if (hit < 0) return AuditReport::passed("menu-equals-budget-intersection", work);

    AgentId bad = -1;
    scan(hit, &bad);
    Counterexample cx;
    cx.put("profile", profile_to_string(table.profiles.at(hit)));
    cx.put("agent", std::to_string(bad));
    return AuditReport::failed("menu-equals-budget-intersection", cx, work);
}

AuditReport verify_prop_freedom_prices(const std::vector<ObjectId>& endowment, int workers) {
    const RuleSpec spec = RuleSpec::ttc(endowment);
    const RuleTable table = build_rule_table(spec, workers);
    const MenuMasks menus = build_menu_masks(table);
    const int64_t count = table.count();

    auto scan = [&](int64_t p, AgentId* wi, AgentId* wj) {
        const PreferenceProfile profile = table.profiles.at(p);
        const PriceConstraintSystem system = support_constraints(spec, profile, table.at(p));
        for (AgentId i = 0; i < table.n; ++i) {
            const uint32_t mi = menus.self_menu[i][table.profiles.opposing_index(p, i)];
            for (AgentId j = 0; j < table.n; ++j) {
                if (j == i) continue;
                const uint32_t mj = menus.self_menu[j][table.profiles.opposing_index(p, j)];
                const bool included = (mj & mi) == mi; // menu_i subset of menu_j
                const bool priced = holds_universally(system, endowment[i], endowment[j]);
                if (included != priced) {
                    if (wi) *wi = i, *wj = j;
                    return true;
                }
            }
        }
        return false;
    };
    const int64_t hit = find_first(count, workers, [&](int64_t p) { return scan(p, nullptr, nullptr); });
    const int64_t work = count * table.n * table.n;
    if (hit < 0) return AuditReport::passed("freedom-vs-prices", work);

    AgentId i = -1, j = -1;
    scan(hit, &i, &j);
    Counterexample cx;
    cx.put("profile", profile_to_string(table.profiles.at(hit)));
    cx.put("agent_i", std::to_string(i));
    cx.put("agent_j", std::to_string(j));
    return AuditReport::failed("freedom-vs-prices", cx, work);
}

ClearingRelation clearing_order_relation(const RuleSpec& ttc_spec, const PreferenceProfile& profile) {
    const auto sequences = all_clearing_orders(ttc_spec, profile);
    ClearingRelation rel;
    rel.n = ttc_spec.n;
    rel.weakly_before.assign(rel.n, std::vector<bool>(rel.n, true));
    for (const CycleSequence& seq : sequences) {
        std::vector<int> position(rel.n, -1);
        for (size_t pos = 0; pos < seq.size(); ++pos)
            for (auto [agent, object] : seq[pos]) position[agent] = static_cast<int>(pos);
        for (AgentId i = 0; i < rel.n; ++i)
            for (AgentId j = 0; j < rel.n; ++j)
                if (position[i] > position[j]) rel.weakly_before[i][j] = false;
    }
    return rel;
}

AuditReport verify_clearing_vs_prices(const std::vector<ObjectId>& endowment) {
    const RuleSpec spec = RuleSpec::ttc(endowment);
    const ProfileEnumerator profiles(spec.n, spec.m);
    int64_t work = 0;
    for (int64_t p = 0; p < profiles.count(); ++p) {
        const PreferenceProfile profile = profiles.at(p);
        const PriceConstraintSystem system = support_constraints(spec, profile, evaluate(spec, profile));
        const ClearingRelation rel = clearing_order_relation(spec, profile);
        work += spec.n * spec.n;
        for (AgentId i = 0; i < spec.n; ++i)
            for (AgentId j = 0; j < spec.n; ++j) {
                if (i == j) continue;
                // p_{w_i} <= p_{w_j} universally iff i is matched weakly after j
                const bool priced = holds_universally(system, endowment[i], endowment[j]);
                const bool after = rel.weakly_before[j][i];
                if (priced != after) {
                    Counterexample cx;
                    cx.put("profile", profile_to_string(profile));
                    cx.put("agent_i", std::to_string(i));
                    cx.put("agent_j", std::to_string(j));
                    return AuditReport::failed("clearing-order-vs-prices", cx, work);
                }
            }
    }
    return AuditReport::passed("clearing-order-vs-prices", work);
}

} // namespace spmech::prices
