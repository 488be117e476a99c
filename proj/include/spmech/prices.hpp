#ifndef SPMECH_PRICES_HPP
#define SPMECH_PRICES_HPP

#include <vector>

#include "spmech/rational.hpp"
#include "spmech/report.hpp"
#include "spmech/rules.hpp"

// Supporting price systems for top-trading-cycle allocations, represented
// implicitly as weak/strict order constraints over the object prices.
// Universal statements are decided by infeasibility of the negation; the
// price set itself is never sampled. All constraints are order constraints,
// so solutions shift freely and nonnegativity never binds.

namespace spmech::prices {

struct PriceConstraintSystem {
    int m = 0;
    struct Edge {
        ObjectId lo = -1, hi = -1; // p_lo <= p_hi, or p_lo < p_hi when strict
        bool strict = false;
    };
    std::vector<Edge> edges;

    void weak(ObjectId lo, ObjectId hi) { edges.push_back(Edge{lo, hi, false}); }
    void strict(ObjectId lo, ObjectId hi) { edges.push_back(Edge{lo, hi, true}); }
};

// Constraints making `assignment` a price-supported outcome of the TTC rule:
// each agent's object is affordable and everything she strictly prefers is
// not. The assignment must be the rule's output at the profile.
PriceConstraintSystem support_constraints(const RuleSpec& ttc_spec, const PreferenceProfile& profile,
                                          const Assignment& assignment);

// True iff the constraint digraph has no directed cycle through a strict
// edge (checked on the strongly connected components).
bool feasible(const PriceConstraintSystem& system);

// p_a <= p_b in every feasible solution, decided as infeasibility of
// system + {p_b < p_a}.
bool holds_universally(const PriceConstraintSystem& system, ObjectId a, ObjectId b);

struct BudgetSet {
    AgentId agent = -1;
    uint32_t objects_mask = 0;

    bool contains(ObjectId x) const { return (objects_mask >> x) & 1; }
    std::vector<ObjectId> sorted_items(int m) const;
};

// Intersection over all supporting price vectors of the agent's budget set.
BudgetSet budget_intersection(const PriceConstraintSystem& system, AgentId i,
                              const std::vector<ObjectId>& endowment);

// Feasible witness via longest-strict-path levels on the condensation;
// satisfies every edge (replay-checked).
std::vector<Rational> sample_price_vector(const PriceConstraintSystem& system);

// Menu equals the budget-set intersection at every profile and agent.
AuditReport verify_cor_menu_budget(const std::vector<ObjectId>& endowment, int workers = 0);

// Menu inclusion between two agents iff their endowment prices compare
// universally, at every profile and ordered pair.
AuditReport verify_prop_freedom_prices(const std::vector<ObjectId>& endowment, int workers = 0);

// weakly_before[i][j]: in every one-cycle-at-a-time clearing sequence, i's
// cycle is cleared at a position <= j's.
struct ClearingRelation {
    int n = 0;
    std::vector<std::vector<bool>> weakly_before;
};
ClearingRelation clearing_order_relation(const RuleSpec& ttc_spec, const PreferenceProfile& profile);

// Cross-check: j always matched weakly before i iff p_{w_i} <= p_{w_j}
// universally; swept over all profiles of the environment.
AuditReport verify_clearing_vs_prices(const std::vector<ObjectId>& endowment);

} // namespace spmech::prices

#endif
