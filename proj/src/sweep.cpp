#include "spmech/sweep.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spmech {

int resolve_workers(int workers) {
#ifdef _OPENMP
    if (workers <= 0) return omp_get_max_threads();
    return workers;
#else
    (void)workers;
    return 1;
#endif
}

RuleTable build_rule_table(const RuleSpec& spec, int workers, int64_t budget) {
    RuleTable table(spec.n, spec.m, budget);
    const int64_t count = table.count();
    table.packed.resize(count);
    const int nw = resolve_workers(workers);

    if (nw == 1) {
        PreferenceProfile scratch;
        for (int64_t p = 0; p < count; ++p) {
            table.profiles.decode(p, scratch);
            table.packed[p] = evaluate(spec, scratch).pack();
        }
        return table;
    }

#ifdef _OPENMP
#pragma omp parallel num_threads(nw)
    {
        PreferenceProfile scratch;
#pragma omp for schedule(static)
        for (int64_t p = 0; p < count; ++p) {
            table.profiles.decode(p, scratch);
            table.packed[p] = evaluate(spec, scratch).pack();
        }
    }
#endif
    return table;
}

MenuMasks build_menu_masks(const RuleTable& table) {
    MenuMasks masks;
    masks.n = table.n;
    masks.m = table.m;
    masks.opp_count = table.profiles.opposing_count();
    masks.self_menu.assign(table.n, std::vector<uint8_t>(masks.opp_count, 0));
    masks.pair_menu.assign(table.n,
                           std::vector<std::vector<uint8_t>>(table.n, std::vector<uint8_t>(masks.opp_count, 0)));

    for (int64_t p = 0; p < table.count(); ++p) {
        for (AgentId i = 0; i < table.n; ++i) {
            const int64_t opp = table.profiles.opposing_index(p, i);
            masks.self_menu[i][opp] |= static_cast<uint8_t>(1u << table.object_of(p, i));
            for (AgentId j = 0; j < table.n; ++j)
                if (j != i) masks.pair_menu[i][j][opp] |= static_cast<uint8_t>(1u << table.object_of(p, j));
        }
    }
    return masks;
}

int64_t find_first(int64_t count, int workers, const std::function<bool(int64_t)>& pred) {
    const int nw = resolve_workers(workers);
    if (nw == 1) {
        for (int64_t i = 0; i < count; ++i)
            if (pred(i)) return i;
        return -1;
    }

    std::atomic<int64_t> best(count);
#ifdef _OPENMP
    // Fine enough blocks to feed every worker even on coarse index spaces;
    // the minimum-index merge keeps the result scheduling-independent.
    const int64_t kBlock = std::clamp<int64_t>(count / (static_cast<int64_t>(nw) * 16), 1, 8192);
    const int64_t blocks = (count + kBlock - 1) / kBlock;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nw)
    for (int64_t b = 0; b < blocks; ++b) {
        const int64_t lo = b * kBlock;
        if (lo >= best.load(std::memory_order_relaxed)) continue;
        const int64_t hi = std::min(lo + kBlock, count);
        for (int64_t i = lo; i < hi; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) break;
            if (pred(i)) {
                int64_t cur = best.load(std::memory_order_relaxed);
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                break;
            }
        }
    }
#else
    for (int64_t i = 0; i < count; ++i)
        if (pred(i)) return i;
    return -1;
#endif
    const int64_t found = best.load();
    return found == count ? -1 : found;
}

void tally_over(int64_t count, int workers, std::vector<int64_t>& tally,
                const std::function<void(int64_t, std::vector<int64_t>&)>& fn) {
    const int nw = resolve_workers(workers);
    if (nw == 1) {
        for (int64_t i = 0; i < count; ++i) fn(i, tally);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel num_threads(nw)
    {
        std::vector<int64_t> local(tally.size(), 0);
#pragma omp for schedule(static)
        for (int64_t i = 0; i < count; ++i) fn(i, local);
#pragma omp critical
        {
            for (size_t k = 0; k < tally.size(); ++k) tally[k] += local[k];
        }
    }
#else
    for (int64_t i = 0; i < count; ++i) fn(i, tally);
#endif
}

} // namespace spmech
