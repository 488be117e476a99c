#ifndef SPMECH_SWEEP_HPP
#define SPMECH_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "spmech/model.hpp"
#include "spmech/rules.hpp"

namespace spmech {

// Number of workers for sweep kernels: 0 = all hardware threads,
// 1 = plain serial loop (no OpenMP), k = k threads.
int resolve_workers(int workers);

// Dense map from profile index to packed assignment: the whole rule as a
// lookup table. Built once per rule, consumed by every exhaustive check.
struct RuleTable {
    int n = 0, m = 0;
    ProfileEnumerator profiles;
    std::vector<uint32_t> packed;

    RuleTable(int n_, int m_, int64_t budget) : n(n_), m(m_), profiles(n_, m_, budget) {}

    ObjectId object_of(int64_t p, AgentId i) const { return (packed[p] >> (4 * i)) & 0xF; }
    Assignment at(int64_t p) const { return Assignment::unpack(packed[p], n); }
    int64_t count() const { return profiles.count(); }
};

RuleTable build_rule_table(const RuleSpec& spec, int workers = 0,
                           int64_t budget = default_profile_budget());

// Menu bitmasks per (agent, opposing profile): menu_self as object sets and
// menu_{i|j} projections for every ordered pair.
struct MenuMasks {
    int n = 0, m = 0;
    int64_t opp_count = 0;
    std::vector<std::vector<uint8_t>> self_menu;                 // [i][opp]
    std::vector<std::vector<std::vector<uint8_t>>> pair_menu;    // [i][j][opp], j != i

    int delta_self(AgentId i, int64_t opp) const { return __builtin_popcount(self_menu[i][opp]); }
    int delta_pair(AgentId i, AgentId j, int64_t opp) const {
        return __builtin_popcount(pair_menu[i][j][opp]);
    }
    bool power(AgentId i, AgentId j, int64_t opp) const { return delta_pair(i, j, opp) > 1; }
};

MenuMasks build_menu_masks(const RuleTable& table);

// ---- kernels ---------------------------------------------------------------

// Smallest index in [0, count) satisfying pred, or -1. The parallel version
// scans blocks dynamically but always returns the same index as the serial
// one: the minimum over all hits.
int64_t find_first(int64_t count, int workers, const std::function<bool(int64_t)>& pred);

// Element-wise sum of int64 tallies over an index range. fn(i, tally) adds
// the contribution of index i; merging is associative so the result does
// not depend on the number of workers.
void tally_over(int64_t count, int workers, std::vector<int64_t>& tally,
                const std::function<void(int64_t, std::vector<int64_t>&)>& fn);

} // namespace spmech

#endif
