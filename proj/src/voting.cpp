#include "spmech/voting.hpp"

#include <algorithm>
#include <numeric>

namespace spmech::voting {

BinaryRule BinaryRule::from_table(int n, std::vector<uint8_t> table) {
    if (n < 1 || n > 20) throw CapacityError("binary rules support 1 <= n <= 20 voters");
    if (table.size() != (size_t{1} << n)) throw DomainError("binary rule table must have 2^n entries");
    for (uint8_t v : table)
        if (v > 1) throw DomainError("binary rule outcomes must be 0 or 1");
    BinaryRule rule;
    rule.n = n;
    rule.table = std::move(table);
    return rule;
}

BinaryRule BinaryRule::weighted_majority(int64_t quota, const std::vector<int64_t>& weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 1 || n > 20) throw CapacityError("binary rules support 1 <= n <= 20 voters");
    std::vector<uint8_t> table(size_t{1} << n, 0);
    for (uint32_t votes = 0; votes < (1u << n); ++votes) {
        int64_t total = 0;
        for (int i = 0; i < n; ++i)
            if ((votes >> i) & 1) total += weights[i];
        table[votes] = total >= quota ? 1 : 0;
    }
    BinaryRule rule = from_table(n, std::move(table));
    rule.weighted = {quota, weights};
    return rule;
}

bool BinaryRule::monotone() const {
    for (uint32_t votes = 0; votes < (1u << n); ++votes)
        for (int i = 0; i < n; ++i)
            if (!((votes >> i) & 1) && outcome(votes) > outcome(votes | (1u << i))) return false;
    return true;
}

bool BinaryRule::surjective() const {
    bool zero = false, one = false;
    for (uint32_t votes = 0; votes < (1u << n); ++votes) (outcome(votes) ? one : zero) = true;
    return zero && one;
}

uint32_t compose_votes(int n, int i, uint32_t opp, int vote) {
    if (i < 0 || i >= n) throw DomainError("voter out of range");
    const uint32_t low = opp & ((1u << i) - 1);
    const uint32_t high = opp >> i;
    return low | (static_cast<uint32_t>(vote) << i) | (high << (i + 1));
}

bool decisive(const BinaryRule& rule, int i, uint32_t opp) {
    return rule.outcome(compose_votes(rule.n, i, opp, 0)) != rule.outcome(compose_votes(rule.n, i, opp, 1));
}

std::set<int> menu_binary(const BinaryRule& rule, int i, uint32_t opp) {
    return {rule.outcome(compose_votes(rule.n, i, opp, 0)), rule.outcome(compose_votes(rule.n, i, opp, 1))};
}

Rational banzhaf(const BinaryRule& rule, int i) {
    const uint32_t opp_count = 1u << (rule.n - 1);
    int64_t decisive_count = 0;
    for (uint32_t opp = 0; opp < opp_count; ++opp)
        if (decisive(rule, i, opp)) ++decisive_count;
    return Rational(decisive_count, static_cast<int64_t>(opp_count));
}

namespace {

// Coalition-sum route: sum over decisive opposing profiles of
// s!(n-1-s)!/n! with s the number of supporters among the others.
Rational shapley_coalition_sum(const BinaryRule& rule, int i) {
    const int n = rule.n;
    Rational total(0);
    for (uint32_t opp = 0; opp < (1u << (n - 1)); ++opp) {
        if (!decisive(rule, i, opp)) continue;
        const int s = __builtin_popcount(opp);
        total += Rational::factorial(s) * Rational::factorial(n - 1 - s) / Rational::factorial(n);
    }
    return total;
}

// Roll-call route: the share of the n! voter orderings in which i pivots,
// voters before i voting 1 and voters after voting 0.
Rational shapley_pivot_count(const BinaryRule& rule, int i) {
    const int n = rule.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int64_t pivots = 0;
    do {
        uint32_t votes = 0;
        int position = -1;
        for (int t = 0; t < n; ++t) {
            if (perm[t] == i) {
                position = t;
                break;
            }
            votes |= 1u << perm[t];
        }
        const uint32_t with_i = votes | (1u << i);
        if (rule.outcome(with_i) != rule.outcome(votes) &&
            (position >= 0)) // i flips the outcome when joining her predecessors
            ++pivots;
    } while (std::next_permutation(perm.begin(), perm.end()));
    int64_t permutations = 1;
    for (int k = 2; k <= n; ++k) permutations *= k;
    return Rational(pivots, permutations);
}

} // namespace

Rational shapley_shubik(const BinaryRule& rule, int i) {
    const Rational by_sum = shapley_coalition_sum(rule, i);
    const Rational by_pivots = shapley_pivot_count(rule, i);
    if (by_sum != by_pivots)
        throw DomainError("Shapley-Shubik routes disagree: " + by_sum.str() + " vs " + by_pivots.str());
    return by_sum;
}

Rational expected_delta(const BinaryRule& rule, int i, CultureModel model) {
    const int n = rule.n;
    if (model == CultureModel::Bernoulli) return Rational(1) + banzhaf(rule, i);

    // P[decisive | p] = sum over decisive opposing profiles of
    // p^s (1-p)^(n-1-s); expand into monomial coefficients and integrate
    // term by term over p in [0,1].
    std::vector<BigInt> coeff(n, 0); // coefficient of p^t
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (int a = 0; a <= n; ++a) {
        binom[a][0] = 1;
        for (int b = 1; b <= a; ++b) binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
    }
    for (uint32_t opp = 0; opp < (1u << (n - 1)); ++opp) {
        if (!decisive(rule, i, opp)) continue;
        const int s = __builtin_popcount(opp);
        const int k = n - 1 - s;
        // p^s (1-p)^k = sum_t (-1)^t C(k,t) p^(s+t)
        for (int t = 0; t <= k; ++t) {
            const BigInt c = binom[k][t];
            if (t % 2 == 0) coeff[s + t] += c;
            else coeff[s + t] -= c;
        }
    }
    Rational integral(0);
    for (int t = 0; t < n; ++t) integral += Rational(coeff[t], t + 1);
    return Rational(1) + integral;
}

PowerIndexReport power_indices(const BinaryRule& rule) {
    PowerIndexReport report;
    for (int i = 0; i < rule.n; ++i) {
        report.banzhaf.push_back(banzhaf(rule, i));
        report.shapley_shubik.push_back(shapley_shubik(rule, i));
        report.expected_delta_bernoulli.push_back(expected_delta(rule, i, CultureModel::Bernoulli));
        report.expected_delta_homogeneity.push_back(expected_delta(rule, i, CultureModel::Homogeneity));
    }
    return report;
}

AuditReport verify_example_imposition(int n) {
    if (n < 2) throw DomainError("the imposition example needs at least two voters");
    // Outcome 0 plays the imposed alternative: the constant rule always
    // picks 0, the unanimity rule picks 1 exactly when everyone votes 1.
    BinaryRule constant = BinaryRule::from_table(n, std::vector<uint8_t>(size_t{1} << n, 0));
    std::vector<uint8_t> unanimity_table(size_t{1} << n, 0);
    unanimity_table.back() = 1;
    BinaryRule unanimity = BinaryRule::from_table(n, std::move(unanimity_table));

    int64_t work = 0;
    // Pareto dominance of unanimity over the constant rule: a vote of 1
    // means the voter strictly prefers outcome 1.
    bool some_strict = false;
    for (uint32_t votes = 0; votes < (1u << n); ++votes) {
        const int a = unanimity.outcome(votes);
        const int b = constant.outcome(votes);
        ++work;
        if (a == b) continue;
        for (int i = 0; i < n; ++i) {
            const int preferred = (votes >> i) & 1;
            if (a != preferred) {
                Counterexample cx;
                cx.put("votes", std::to_string(votes));
                cx.put("voter", std::to_string(i));
                return AuditReport::failed("imposition-example", cx, work, "dominance violated");
            }
        }
        some_strict = true;
    }
    // Menu inclusion for every voter at every opposing profile, strict
    // somewhere.
    bool strictly_larger = false;
    for (int i = 0; i < n; ++i)
        for (uint32_t opp = 0; opp < (1u << (n - 1)); ++opp) {
            ++work;
            const auto mu = menu_binary(unanimity, i, opp);
            const auto mc = menu_binary(constant, i, opp);
            if (!std::includes(mu.begin(), mu.end(), mc.begin(), mc.end())) {
                Counterexample cx;
                cx.put("voter", std::to_string(i));
                cx.put("opposing", std::to_string(opp));
                return AuditReport::failed("imposition-example", cx, work, "menu inclusion violated");
            }
            if (mu.size() > mc.size()) strictly_larger = true;
        }
    if (!some_strict || !strictly_larger) {
        Counterexample cx;
        cx.put("reason", some_strict ? "no strictly larger menu" : "no strict welfare improvement");
        return AuditReport::failed("imposition-example", cx, work);
    }
    return AuditReport::passed("imposition-example", work,
                               "unanimity dominates the constant rule and enlarges every menu");
}

std::vector<BinaryRule> all_monotone_rules(int n) {
    if (n < 1 || n > 4) throw CapacityError("monotone rule enumeration is limited to n <= 4");
    std::vector<BinaryRule> rules;
    const uint32_t cells = 1u << n;
    for (uint64_t bits = 0; bits < (uint64_t{1} << cells); ++bits) {
        std::vector<uint8_t> table(cells);
        for (uint32_t v = 0; v < cells; ++v) table[v] = (bits >> v) & 1;
        BinaryRule rule = BinaryRule::from_table(n, std::move(table));
        if (rule.monotone()) rules.push_back(std::move(rule));
    }
    return rules;
}

} // namespace spmech::voting
