#ifndef SPMECH_STOCHASTIC_HPP
#define SPMECH_STOCHASTIC_HPP

#include <cstdint>
#include <vector>

#include "spmech/rational.hpp"
#include "spmech/report.hpp"
#include "spmech/sweep.hpp"

// Exact impartial-culture laws. Probabilities are integer counts over
// integer totals; nothing in this module touches floating point except the
// clearly labelled Monte Carlo smoke helper.

namespace spmech::stochastic {

struct ExactDistribution {
    std::vector<int64_t> support; // strictly increasing
    std::vector<Rational> mass;   // aligned with support, sums to exactly 1

    Rational mass_at(int64_t value) const;
    Rational tail_gt(int64_t value) const; // P[X > value]
    Rational expectation() const;
    void check_normalised() const; // throws DomainError on any violation
};

// Rank of the assigned object in the agent's own reported order, 1 = top.
int rank_of(const RuleSpec& spec, const PreferenceProfile& profile, AgentId i);

// Law of the rank over all (m!)^n profiles.
ExactDistribution exact_rank_distribution(const RuleTable& table, AgentId i);
// Law of the menu size over all (m!)^(n-1) opposing profiles.
ExactDistribution exact_delta_distribution(const MenuMasks& menus, AgentId i);

// P[rank > r | menu size = s] for a strategy-proof rule with a uniform
// independent own order: (m-r)!(m-s)!/(m!(m-r-s)!) when r+s <= m, else 0.
Rational closed_form_conditional(int m, int r, int s);

// Compares the empirical conditional law from the full sweep against the
// closed form, for every (r, s) with positive menu-size probability.
AuditReport verify_conditional_law(const RuleTable& table, const MenuMasks& menus, AgentId i);

// (m-1)x(m-1) anti-triangular matrix linking the menu-size law to the rank
// tail law; invertible by back substitution.
struct RankMatrix {
    int m = 0;
    std::vector<std::vector<Rational>> entry; // [r-1][s-1]
};
RankMatrix rank_matrix(int m);
// tail[r] = sum_s M[r][s] * delta_mass[s], for laws restricted to 1..m-1.
std::vector<Rational> apply(const RankMatrix& matrix, const std::vector<Rational>& delta_mass);
std::vector<Rational> invert_apply(const RankMatrix& matrix, const std::vector<Rational>& rank_tail);

enum class FosdResult { Dominates, Dominated, Equal, Incomparable };
// First-order stochastic dominance of d1 over d2 ("dominates" means d1 is
// the stochastically larger distribution).
FosdResult fosd_compare(const ExactDistribution& d1, const ExactDistribution& d2);

// Menu-size comparison vs FOSD of the rank laws at two fixed opposing
// profiles; both sides computed independently. Environments must have the
// same number of objects.
AuditReport verify_prop_delta_rank(const RuleSpec& a, AgentId i, const OpposingProfile& opp_a,
                                   const RuleSpec& b, AgentId j, const OpposingProfile& opp_b);

// Exact E[(1/n) sum_i delta_i] over the impartial culture; equals
// (n+1)/2 for efficient group-strategy-proof assignment rules.
AuditReport verify_expected_avg_delta(const RuleTable& table, const MenuMasks& menus);

// Exact E[delta_i] = m * P[rank_i = 1].
AuditReport verify_cor_top_probability(const RuleTable& table, const MenuMasks& menus, AgentId i);

// Approximate, seeded sampling for sizes beyond the exact sweep budget.
// Never used by exact identities or the acceptance suite.
std::vector<double> mc_rank_frequencies(const RuleSpec& spec, AgentId i, int samples, uint64_t seed);

} // namespace spmech::stochastic

#endif
