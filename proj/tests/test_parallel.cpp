#include <doctest.h>

#include "spmech/audit.hpp"
#include "spmech/catalog.hpp"
#include "spmech/sweep.hpp"

using namespace spmech;

// The sweep kernels must produce identical results whether they run on the
// plain serial path or on any number of OpenMP workers.

TEST_SUITE_BEGIN("parallel");

TEST_CASE("rule tables are identical across worker counts") {
    for (const auto& entry : catalog::standard_catalog(3)) {
        CAPTURE(entry.spec.name);
        const RuleTable serial = build_rule_table(entry.spec, 1);
        const RuleTable two = build_rule_table(entry.spec, 2);
        const RuleTable all = build_rule_table(entry.spec, 0);
        CHECK(serial.packed == two.packed);
        CHECK(serial.packed == all.packed);
    }
}

TEST_CASE("find_first returns the least hit regardless of workers") {
    auto pred = [](int64_t i) { return i % 7919 == 0 && i > 0; };
    for (int workers : {1, 2, 0}) {
        CHECK(find_first(100000, workers, pred) == 7919);
        CHECK(find_first(7919, workers, pred) == -1);
        CHECK(find_first(0, workers, pred) == -1);
    }
    // a dense predicate still yields the first index
    for (int workers : {1, 2, 0}) CHECK(find_first(1 << 20, workers, [](int64_t i) { return i >= 3; }) == 3);
}

TEST_CASE("tallies merge associatively") {
    auto fn = [](int64_t i, std::vector<int64_t>& t) {
        t[i % 5] += i;
        t[5] += 1;
    };
    std::vector<int64_t> serial(6, 0), parallel(6, 0);
    tally_over(200000, 1, serial, fn);
    tally_over(200000, 0, parallel, fn);
    CHECK(serial == parallel);
}

TEST_CASE("audit verdicts and counterexamples are worker-independent") {
    for (const auto& entry : catalog::standard_catalog(3)) {
        CAPTURE(entry.spec.name);
        const audit::Audited serial = audit::Audited::build(entry.spec, 1);
        const audit::Audited parallel = audit::Audited::build(entry.spec, 0);
        for (auto check : {audit::check_strategy_proof, audit::check_nonbossy, audit::check_efficiency,
                           audit::check_reallocation_proof, audit::check_power_transitivity}) {
            const AuditReport a = check(serial);
            const AuditReport b = check(parallel);
            CHECK(a.pass == b.pass);
            CHECK(a.counterexample.has_value() == b.counterexample.has_value());
            if (a.counterexample && b.counterexample)
                CHECK(a.counterexample->fields == b.counterexample->fields);
        }
    }
}

TEST_SUITE_END();
