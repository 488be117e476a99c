// Benchmark comparing the serial sweep path against the OpenMP kernels,
// plus the naive (table-free) strategy-proofness checker as a baseline.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "spmech/audit.hpp"
#include "spmech/catalog.hpp"
#include "spmech/reference.hpp"
#include "spmech/sweep.hpp"

using namespace spmech;

namespace {

template <typename Fn>
double time_once(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void bench_rule(const RuleSpec& spec) {
    std::printf("%-10s n=%d\n", spec.name.c_str(), spec.n);

    double serial_build = 0, parallel_build = 0;
    RuleTable serial_table(spec.n, spec.m, default_profile_budget());
    serial_build = time_once([&] { serial_table = build_rule_table(spec, 1); });
    RuleTable parallel_table(spec.n, spec.m, default_profile_budget());
    parallel_build = time_once([&] { parallel_table = build_rule_table(spec, 0); });
    if (serial_table.packed != parallel_table.packed) {
        std::printf("  table mismatch between serial and parallel builds!\n");
        std::exit(1);
    }
    std::printf("  table build      serial %8.3fs   openmp %8.3fs\n", serial_build, parallel_build);

    audit::Audited serial{spec, std::move(serial_table), {}, 1};
    serial.menus = build_menu_masks(serial.table);
    audit::Audited parallel{spec, std::move(parallel_table), {}, 0};
    parallel.menus = build_menu_masks(parallel.table);

    bool sp_serial = false, sp_parallel = false;
    const double t_sp_serial = time_once([&] { sp_serial = audit::check_strategy_proof(serial).pass; });
    const double t_sp_parallel = time_once([&] { sp_parallel = audit::check_strategy_proof(parallel).pass; });
    std::printf("  strategy-proof   serial %8.3fs   openmp %8.3fs   (verdicts %d/%d)\n", t_sp_serial,
                t_sp_parallel, sp_serial, sp_parallel);

    bool re_serial = false, re_parallel = false;
    const double t_re_serial = time_once([&] { re_serial = audit::check_reallocation_proof(serial).pass; });
    const double t_re_parallel =
        time_once([&] { re_parallel = audit::check_reallocation_proof(parallel).pass; });
    std::printf("  realloc-proof    serial %8.3fs   openmp %8.3fs   (verdicts %d/%d)\n", t_re_serial,
                t_re_parallel, re_serial, re_parallel);

    if (spec.n <= 3) {
        bool naive = false;
        const double t_naive = time_once([&] { naive = reference::strategy_proof_naive(spec); });
        std::printf("  naive reference  serial %8.3fs   (verdict %d)\n", t_naive, naive);
        if (naive != sp_serial) {
            std::printf("  naive reference disagrees with the sweep!\n");
            std::exit(1);
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    int n = 3;
    for (int i = 1; i + 1 < argc + 1; ++i)
        if (argv[i] && std::strcmp(argv[i], "--n") == 0 && i + 1 < argc) n = std::atoi(argv[i + 1]);
    if (n != 3 && n != 4) {
        std::printf("usage: spmech_bench [--n 3|4]\n");
        return 2;
    }
    for (const auto& entry : catalog::standard_catalog(n)) bench_rule(entry.spec);
    return 0;
}
