#ifndef SPMECH_VOTING_HPP
#define SPMECH_VOTING_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "spmech/rational.hpp"
#include "spmech/report.hpp"

// Binary voting games as two-outcome strategy-proof mechanisms. A vote of 1
// means the voter prefers outcome 1 over outcome 0. Opposing profiles are
// bitmasks over the n-1 other voters in ascending index order.

namespace spmech::voting {

struct BinaryRule {
    int n = 0;
    std::vector<uint8_t> table; // size 2^n, indexed by the vote bitmask (voter 0 = LSB)
    std::optional<std::pair<int64_t, std::vector<int64_t>>> weighted; // [quota; weights]

    static BinaryRule from_table(int n, std::vector<uint8_t> table);
    static BinaryRule weighted_majority(int64_t quota, const std::vector<int64_t>& weights);

    int outcome(uint32_t votes) const { return table[votes]; }
    bool monotone() const;
    bool surjective() const;
};

// Full vote mask from voter i's vote and the others' mask.
uint32_t compose_votes(int n, int i, uint32_t opp, int vote);

bool decisive(const BinaryRule& rule, int i, uint32_t opp);

// Menu of voter i at the opposing profile: {0}, {1} or {0, 1}.
std::set<int> menu_binary(const BinaryRule& rule, int i, uint32_t opp);

// Share of opposing profiles at which the voter is decisive, exact.
Rational banzhaf(const BinaryRule& rule, int i);

// Computed twice: by the opposing-profile coalition formula and by pivot
// counting over the n! voter orderings; the two must agree.
Rational shapley_shubik(const BinaryRule& rule, int i);

enum class CultureModel { Bernoulli, Homogeneity };

// Exact expected menu size of voter i: 1 + P[decisive] under the model.
// Bernoulli draws the others i.i.d. fair; homogeneity draws p uniformly on
// [0,1] first, integrating the decisiveness polynomial term by term.
Rational expected_delta(const BinaryRule& rule, int i, CultureModel model);

struct PowerIndexReport {
    std::vector<Rational> banzhaf;
    std::vector<Rational> shapley_shubik;
    std::vector<Rational> expected_delta_bernoulli;
    std::vector<Rational> expected_delta_homogeneity;
};
PowerIndexReport power_indices(const BinaryRule& rule);

// The constant rule against the unanimity rule: the latter must
// Pareto-dominate and grant everyone weakly larger menus, strictly
// somewhere — the dominance/freedom equivalence in a two-outcome world.
AuditReport verify_example_imposition(int n);

// Every monotone binary rule with n voters; used by the identity suites.
std::vector<BinaryRule> all_monotone_rules(int n);

} // namespace spmech::voting

#endif
