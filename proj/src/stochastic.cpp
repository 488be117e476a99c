#include "spmech/stochastic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "spmech/menus.hpp"
#include "spmech/strings.hpp"

namespace spmech::stochastic {

Rational ExactDistribution::mass_at(int64_t value) const {
    for (size_t k = 0; k < support.size(); ++k)
        if (support[k] == value) return mass[k];
    return Rational(0);
}

Rational ExactDistribution::tail_gt(int64_t value) const {
    Rational tail(0);
    for (size_t k = 0; k < support.size(); ++k)
        if (support[k] > value) tail += mass[k];
    return tail;
}

Rational ExactDistribution::expectation() const {
    Rational e(0);
    for (size_t k = 0; k < support.size(); ++k) e += mass[k] * Rational(support[k]);
    return e;
}

void ExactDistribution::check_normalised() const {
    Rational total(0);
    for (size_t k = 0; k < support.size(); ++k) {
        if (mass[k] < Rational(0)) throw DomainError("distribution has a negative mass");
        if (k > 0 && support[k] <= support[k - 1]) throw DomainError("distribution support is not increasing");
        total += mass[k];
    }
    if (total != Rational(1)) throw DomainError("distribution masses sum to " + total.str() + ", not 1");
}

int rank_of(const RuleSpec& spec, const PreferenceProfile& profile, AgentId i) {
    if (i < 0 || i >= spec.n) throw DomainError("rank_of: agent out of range");
    return profile.of(i).rank(evaluate(spec, profile).of(i)) + 1;
}

namespace {

ExactDistribution from_counts(const std::vector<int64_t>& counts, int64_t first_value, int64_t total) {
    ExactDistribution out;
    for (size_t k = 0; k < counts.size(); ++k) {
        if (counts[k] == 0) continue;
        out.support.push_back(first_value + static_cast<int64_t>(k));
        out.mass.push_back(Rational(counts[k], total));
    }
    out.check_normalised();
    return out;
}

} // namespace

ExactDistribution exact_rank_distribution(const RuleTable& table, AgentId i) {
    const auto& orders = all_orders(table.m);
    std::vector<int64_t> counts(table.m, 0);
    for (int64_t p = 0; p < table.count(); ++p)
        ++counts[orders[table.profiles.digit(p, i)].rank(table.object_of(p, i))];
    return from_counts(counts, 1, table.count());
}

ExactDistribution exact_delta_distribution(const MenuMasks& menus, AgentId i) {
    std::vector<int64_t> counts(menus.m, 0);
    for (int64_t opp = 0; opp < menus.opp_count; ++opp) ++counts[menus.delta_self(i, opp) - 1];
    return from_counts(counts, 1, menus.opp_count);
}

Rational closed_form_conditional(int m, int r, int s) {
    if (r < 1 || r > m - 1 || s < 1 || s > m - 1) throw DomainError("conditional law needs 1 <= r, s <= m-1");
    if (r + s > m) return Rational(0);
    // (m-r)!(m-s)! / (m!(m-r-s)!)
    return Rational::factorial(m - r) * Rational::factorial(m - s) /
           (Rational::factorial(m) * Rational::factorial(m - r - s));
}

AuditReport verify_conditional_law(const RuleTable& table, const MenuMasks& menus, AgentId i) {
    const int m = table.m;
    const auto& orders = all_orders(m);
    // joint counts over (menu size, rank)
    std::vector<std::vector<int64_t>> joint(m + 1, std::vector<int64_t>(m + 1, 0));
    for (int64_t p = 0; p < table.count(); ++p) {
        const int64_t opp = table.profiles.opposing_index(p, i);
        const int s = menus.delta_self(i, opp);
        const int rank = orders[table.profiles.digit(p, i)].rank(table.object_of(p, i)) + 1;
        ++joint[s][rank];
    }
    const int64_t work = table.count();

    for (int s = 1; s <= m - 1; ++s) {
        int64_t total = 0;
        for (int rank = 1; rank <= m; ++rank) total += joint[s][rank];
        if (total == 0) continue; // conditioning on a null event is skipped, not defaulted
        for (int r = 1; r <= m - 1; ++r) {
            int64_t above = 0;
            for (int rank = r + 1; rank <= m; ++rank) above += joint[s][rank];
            const Rational empirical(above, total);
            const Rational closed = closed_form_conditional(m, r, s);
            if (empirical != closed) {
                Counterexample cx;
                cx.put("agent", std::to_string(i));
                cx.put("r", std::to_string(r));
                cx.put("s", std::to_string(s));
                cx.put("empirical", empirical.str());
                cx.put("closed_form", closed.str());
                return AuditReport::failed("conditional-rank-law", cx, work);
            }
        }
    }
    return AuditReport::passed("conditional-rank-law", work);
}

RankMatrix rank_matrix(int m) {
    if (m < 2) throw DomainError("rank matrix needs m >= 2");
    RankMatrix matrix;
    matrix.m = m;
    matrix.entry.assign(m - 1, std::vector<Rational>(m - 1, Rational(0)));
    for (int r = 1; r <= m - 1; ++r)
        for (int s = 1; s <= m - 1; ++s) matrix.entry[r - 1][s - 1] = closed_form_conditional(m, r, s);
    return matrix;
}

std::vector<Rational> apply(const RankMatrix& matrix, const std::vector<Rational>& delta_mass) {
    const int k = matrix.m - 1;
    if (static_cast<int>(delta_mass.size()) != k) throw DomainError("delta law must list masses for sizes 1..m-1");
    std::vector<Rational> tail(k, Rational(0));
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) tail[r] += matrix.entry[r][s] * delta_mass[s];
    return tail;
}

std::vector<Rational> invert_apply(const RankMatrix& matrix, const std::vector<Rational>& rank_tail) {
    const int k = matrix.m - 1;
    if (static_cast<int>(rank_tail.size()) != k) throw DomainError("rank tail law must list P[rank > r] for r = 1..m-1");
    std::vector<Rational> delta(k, Rational(0));
    // Row r has its last nonzero at s = m - r: solve from the bottom row up.
    for (int r = k; r >= 1; --r) {
        const int s = matrix.m - r; // unknown solved by this row
        Rational acc = rank_tail[r - 1];
        for (int s2 = 1; s2 < s; ++s2) acc -= matrix.entry[r - 1][s2 - 1] * delta[s2 - 1];
        delta[s - 1] = acc / matrix.entry[r - 1][s - 1];
    }
    return delta;
}

FosdResult fosd_compare(const ExactDistribution& d1, const ExactDistribution& d2) {
    std::vector<int64_t> grid;
    for (int64_t v : d1.support) grid.push_back(v);
    for (int64_t v : d2.support) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    bool geq = true, leq = true;
    for (int64_t v : grid) {
        const Rational t1 = d1.tail_gt(v);
        const Rational t2 = d2.tail_gt(v);
        if (t1 < t2) geq = false;
        if (t1 > t2) leq = false;
    }
    if (geq && leq) return FosdResult::Equal;
    if (geq) return FosdResult::Dominates;
    if (leq) return FosdResult::Dominated;
    return FosdResult::Incomparable;
}

AuditReport verify_prop_delta_rank(const RuleSpec& a, AgentId i, const OpposingProfile& opp_a,
                                   const RuleSpec& b, AgentId j, const OpposingProfile& opp_b) {
    if (a.m != b.m)
        throw DomainError("menu-size/rank comparison requires equally sized outcome sets");
    const int m = a.m;

    auto rank_law = [m](const RuleSpec& spec, AgentId agent, const OpposingProfile& opp) {
        std::vector<int64_t> counts(m, 0);
        PreferenceProfile profile = opp.with(all_orders(m)[0]);
        for (const StrictOrder& report : all_orders(m)) {
            profile.orders[agent] = report;
            ++counts[report.rank(evaluate(spec, profile).of(agent))];
        }
        return from_counts(counts, 1, factorial(m));
    };

    const int delta_a = delta_self(a, i, opp_a);
    const int delta_b = delta_self(b, j, opp_b);
    const ExactDistribution rho_a = rank_law(a, i, opp_a);
    const ExactDistribution rho_b = rank_law(b, j, opp_b);

    const FosdResult cmp = fosd_compare(rho_b, rho_a);
    const bool fosd_side = cmp == FosdResult::Dominates || cmp == FosdResult::Equal;
    const bool delta_side = delta_a >= delta_b;
    const int64_t work = 2 * factorial(m);

    std::ostringstream note;
    note << "delta=" << delta_a << " vs " << delta_b << ", fosd="
         << (fosd_side ? "holds" : "fails");
    if (delta_side == fosd_side) return AuditReport::passed("delta-rank-equivalence", work, note.str());

    Counterexample cx;
    cx.put("agent_i", std::to_string(i));
    cx.put("agent_j", std::to_string(j));
    cx.put("opposing_i", opposing_to_string(opp_a));
    cx.put("opposing_j", opposing_to_string(opp_b));
    cx.put("delta_i", std::to_string(delta_a));
    cx.put("delta_j", std::to_string(delta_b));
    return AuditReport::failed("delta-rank-equivalence", cx, work, note.str());
}

AuditReport verify_expected_avg_delta(const RuleTable& table, const MenuMasks& menus) {
    Rational sum(0);
    int64_t total = 0;
    for (AgentId i = 0; i < table.n; ++i)
        for (int64_t opp = 0; opp < menus.opp_count; ++opp) total += menus.delta_self(i, opp);
    sum = Rational(total, static_cast<int64_t>(table.n) * menus.opp_count);

    const Rational expected(table.n + 1, 2);
    const int64_t work = table.n * menus.opp_count;
    if (sum == expected)
        return AuditReport::passed("expected-average-menu-size", work, sum.str());
    Counterexample cx;
    cx.put("computed", sum.str());
    cx.put("expected", expected.str());
    return AuditReport::failed("expected-average-menu-size", cx, work, sum.str());
}

AuditReport verify_cor_top_probability(const RuleTable& table, const MenuMasks& menus, AgentId i) {
    int64_t delta_total = 0;
    for (int64_t opp = 0; opp < menus.opp_count; ++opp) delta_total += menus.delta_self(i, opp);
    const Rational expected_delta(delta_total, menus.opp_count);

    const auto& orders = all_orders(table.m);
    int64_t tops = 0;
    for (int64_t p = 0; p < table.count(); ++p)
        if (orders[table.profiles.digit(p, i)].top() == table.object_of(p, i)) ++tops;
    const Rational top_probability(tops, table.count());

    const int64_t work = menus.opp_count + table.count();
    if (expected_delta == Rational(table.m) * top_probability)
        return AuditReport::passed("menu-size-vs-top-probability", work,
                                   "E[delta]=" + expected_delta.str() + ", P[rank=1]=" + top_probability.str());
    Counterexample cx;
    cx.put("agent", std::to_string(i));
    cx.put("expected_delta", expected_delta.str());
    cx.put("top_probability", top_probability.str());
    return AuditReport::failed("menu-size-vs-top-probability", cx, work);
}

std::vector<double> mc_rank_frequencies(const RuleSpec& spec, AgentId i, int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto& orders = all_orders(spec.m);
    std::uniform_int_distribution<size_t> pick(0, orders.size() - 1);
    std::vector<int64_t> counts(spec.m, 0);
    PreferenceProfile profile;
    profile.orders.resize(spec.n);
    for (int s = 0; s < samples; ++s) {
        for (AgentId k = 0; k < spec.n; ++k) profile.orders[k] = orders[pick(rng)];
        ++counts[rank_of(spec, profile, i) - 1];
    }
    std::vector<double> freq(spec.m, 0.0);
    for (int r = 0; r < spec.m; ++r) freq[r] = static_cast<double>(counts[r]) / samples;
    return freq;
}

} // namespace spmech::stochastic
