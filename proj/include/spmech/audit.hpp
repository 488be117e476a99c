#ifndef SPMECH_AUDIT_HPP
#define SPMECH_AUDIT_HPP

#include <functional>
#include <string>
#include <vector>

#include "spmech/menus.hpp"
#include "spmech/report.hpp"
#include "spmech/rules.hpp"
#include "spmech/sweep.hpp"

namespace spmech::audit {

// Sweep artifacts for one rule, built once and shared by all checks.
struct Audited {
    RuleSpec spec;
    RuleTable table;
    MenuMasks menus;
    int workers = 0;

    static Audited build(const RuleSpec& spec, int workers = 0,
                         int64_t budget = default_profile_budget());
    // Same artifacts for an arbitrary mechanism function; used for negative
    // controls and toy mechanisms that no RuleSpec expresses.
    static Audited build_fn(int n, int m, const std::string& name,
                            const std::function<Assignment(const PreferenceProfile&)>& fn,
                            int workers = 0, int64_t budget = default_profile_budget());
};

AuditReport check_strategy_proof(const Audited& a);
// Same verdict as check_strategy_proof by a different route: every agent's
// outcome must be optimal in her enumerated menu.
AuditReport check_hammond(const Audited& a);
AuditReport check_nonbossy(const Audited& a);
AuditReport check_nonautarkic(const Audited& a);

enum class GroupSpMode { Direct, Papai };
// Direct mode enumerates coalition misreports and is limited to n = 3;
// Papai mode is strategy-proofness plus non-bossiness.
AuditReport check_group_sp(const Audited& a, GroupSpMode mode);

// Brute force over all n! assignments at every profile.
AuditReport check_efficiency(const Audited& a);
AuditReport check_reallocation_proof(const Audited& a);

AuditReport pareto_dominates_rule(const Audited& a, const Audited& b);
// The freedom side of the dominance equivalence: weakly larger menus for
// every agent at every opposing profile, strictly larger somewhere.
AuditReport freedom_dominates(const Audited& a, const Audited& b);
// Both sides of the dominance/freedom equivalence computed independently;
// passes iff they agree (whether both true or both false).
AuditReport verify_thm_menu_pareto(const Audited& a, const Audited& b);

// Fiber-counting implications: where an agent is non-bossy at (i, opp),
// delta_{i|-i} <= delta_{i|i}; where non-autarkic, >=; and any two of
// {non-autarkic, non-bossy, equality everywhere} imply the third.
AuditReport verify_lemma_fibers(const Audited& a);

// At the identical-preference profile the realized menu sizes are exactly
// 1..n and each menu is a lower set of the common order.
AuditReport verify_extreme_menus(const Audited& a);

AuditReport check_power_transitivity(const Audited& a);

// Menu inclusion implies power: at every profile and ordered pair, if i's
// menu includes j's then i can move j's object. Holds for every
// strategy-proof rule.
AuditReport verify_lemma_inclusion_power(const Audited& a);

// Power over j iff own menu includes j's, at every profile and pair.
AuditReport verify_prop_menu_superset(const Audited& a);

// Which agents reach a full menu at some opposing profile.
std::vector<bool> agents_with_full_menu(const Audited& a);
AuditReport verify_full_menu(const Audited& a, bool expect_all_agents);

// Exact per-agent counts of receiving the k-th ranked object across all
// profiles; passes iff the counts are agent-independent for every k.
AuditReport check_balanced(const Audited& a);

struct BilateralPower {
    int max_delta = 0;
    AgentId i = -1, j = -1;
    int64_t opp_index = -1;
};
BilateralPower max_bilateral_power(const Audited& a);

// Re-checks a failed report's counterexample directly against the rule,
// without the sweep machinery.
bool replay_counterexample(const RuleSpec& spec, const AuditReport& report);

} // namespace spmech::audit

#endif
