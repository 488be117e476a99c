#include <doctest.h>

#include <random>

#include "spmech/catalog.hpp"
#include "spmech/reference.hpp"
#include "spmech/rules.hpp"
#include "spmech/strings.hpp"

using namespace spmech;

TEST_SUITE_BEGIN("rules");

TEST_CASE("serial dictatorship picks tops in order") {
    const RuleSpec sd = RuleSpec::sd({0, 1, 2});
    const PreferenceProfile profile = profile_from_string("abc,abc,abc");
    CHECK(assignment_to_string(evaluate(sd, profile)) == "abc");
}

TEST_CASE("engine matches the serial reference on every profile") {
    for (const auto& order : {std::vector<AgentId>{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}) {
        const RuleSpec sd = RuleSpec::sd(order);
        ProfileEnumerator profiles(3, 3);
        for (int64_t p = 0; p < profiles.count(); ++p) {
            const PreferenceProfile profile = profiles.at(p);
            CHECK(evaluate(sd, profile) == reference::sd(order, profile));
        }
    }
    // sampled at n = 4
    std::mt19937_64 rng(7);
    ProfileEnumerator profiles(4, 4);
    const RuleSpec sd = RuleSpec::sd({3, 1, 0, 2});
    for (int s = 0; s < 500; ++s) {
        const int64_t p = static_cast<int64_t>(rng() % profiles.count());
        const PreferenceProfile profile = profiles.at(p);
        CHECK(evaluate(sd, profile) == reference::sd({3, 1, 0, 2}, profile));
    }
}

TEST_CASE("ttc clears a two-cycle and a self-cycle") {
    const RuleSpec ttc = RuleSpec::ttc({0, 1, 2});
    const PreferenceProfile profile = profile_from_string("bac,abc,cab");
    CHECK(assignment_to_string(evaluate(ttc, profile)) == "bac");
}

TEST_CASE("ttc engine matches the textbook reference") {
    const std::vector<ObjectId> endowment{1, 2, 0};
    const RuleSpec ttc = RuleSpec::ttc(endowment);
    ProfileEnumerator profiles(3, 3);
    for (int64_t p = 0; p < profiles.count(); ++p) {
        const PreferenceProfile profile = profiles.at(p);
        CHECK(evaluate(ttc, profile) == reference::ttc(endowment, profile));
    }
    std::mt19937_64 rng(11);
    ProfileEnumerator big(4, 4);
    const std::vector<ObjectId> endowment4{2, 3, 1, 0};
    const RuleSpec ttc4 = RuleSpec::ttc(endowment4);
    for (int s = 0; s < 500; ++s) {
        const PreferenceProfile profile = big.at(static_cast<int64_t>(rng() % big.count()));
        CHECK(evaluate(ttc4, profile) == reference::ttc(endowment4, profile));
    }
}

TEST_CASE("sd equals bipolar with a degenerate split and its control table") {
    const RuleSpec sd = RuleSpec::sd({1, 0, 2});
    const RuleSpec bipolar = RuleSpec::bipolar_sd({1, 0, 2}, {0, 1, 2}, {});
    const RuleSpec tabled = RuleSpec::hierarchical(sd_control_table({1, 0, 2}, 3));
    ProfileEnumerator profiles(3, 3);
    for (int64_t p = 0; p < profiles.count(); ++p) {
        const PreferenceProfile profile = profiles.at(p);
        const Assignment a = evaluate(sd, profile);
        CHECK(a == evaluate(bipolar, profile));
        CHECK(a == evaluate(tabled, profile));
    }
}

TEST_CASE("ttc equals its hierarchical-exchange table") {
    const std::vector<ObjectId> endowment{0, 1, 2, 3};
    const RuleSpec ttc = RuleSpec::ttc(endowment);
    const RuleSpec tabled = RuleSpec::hierarchical(control_table_from_priority_lists(4, 4, ttc.priority));
    std::mt19937_64 rng(13);
    ProfileEnumerator profiles(4, 4);
    for (int s = 0; s < 400; ++s) {
        const PreferenceProfile profile = profiles.at(static_cast<int64_t>(rng() % profiles.count()));
        CHECK(evaluate(ttc, profile) == evaluate(tabled, profile));
    }
}

TEST_CASE("traces expose the clearing rounds") {
    const RuleSpec ttc = RuleSpec::ttc({0, 1, 2});
    // everyone tops their own endowment: three singleton cycles in round 0
    auto [self_assign, self_trace] = evaluate_with_trace(ttc, profile_from_string("abc,bca,cab"));
    CHECK(self_trace.size() == 3);
    for (const TraceStep& step : self_trace) {
        CHECK(step.step_index == 0);
        CHECK(step.cleared_cycle.size() == 1);
    }
    // one grand cycle
    auto [grand_assign, grand_trace] = evaluate_with_trace(ttc, profile_from_string("bca,cab,abc"));
    CHECK(grand_trace.size() == 1);
    CHECK(grand_trace[0].cleared_cycle.size() == 3);

    // serial dictatorship: singleton cycles in dictator order, one per round
    const RuleSpec sd = RuleSpec::sd({2, 0, 1});
    auto [sd_assign, sd_trace] = evaluate_with_trace(sd, profile_from_string("abc,abc,abc"));
    REQUIRE(sd_trace.size() == 3);
    for (int k = 0; k < 3; ++k) {
        CHECK(sd_trace[k].step_index == k);
        CHECK(sd_trace[k].cleared_cycle.size() == 1);
    }
    CHECK(sd_trace[0].cleared_cycle[0].first == 2);

    CHECK_THROWS_AS(evaluate_with_trace(RuleSpec::bossy_demo({0, 1, 2}), profile_from_string("abc,abc,abc")),
                    DomainError);
}

TEST_CASE("all clearing orders") {
    const RuleSpec ttc = RuleSpec::ttc({0, 1, 2});
    CHECK(all_clearing_orders(ttc, profile_from_string("abc,bca,cab")).size() == 6); // 3 singletons
    CHECK(all_clearing_orders(ttc, profile_from_string("bca,cab,abc")).size() == 1); // grand cycle

    const RuleSpec ttc4 = RuleSpec::ttc({0, 1, 2, 3});
    // two disjoint two-cycles: 0 and 1 swap, 2 and 3 swap
    CHECK(all_clearing_orders(ttc4, profile_from_string("bacd,abcd,dcab,cdab")).size() == 2);
}

TEST_CASE("clearing order never changes the outcome") {
    ProfileEnumerator profiles(3, 3);
    const RuleSpec broker = RuleSpec::trading_cycles(broker_control_table(3), "broker");
    const RuleSpec ttc = RuleSpec::ttc({2, 0, 1});
    for (int64_t p = 0; p < profiles.count(); ++p) {
        const PreferenceProfile profile = profiles.at(p);
        CHECK_NOTHROW(all_clearing_orders(broker, profile)); // asserts agreement internally
        CHECK_NOTHROW(all_clearing_orders(ttc, profile));
    }
    // sampled at n = 4, where several rounds of simultaneous cycles occur
    std::mt19937_64 rng(17);
    ProfileEnumerator big(4, 4);
    const RuleSpec broker4 = RuleSpec::trading_cycles(broker_control_table(4), "broker");
    const RuleSpec ttc4 = RuleSpec::ttc({1, 0, 3, 2});
    for (int s = 0; s < 200; ++s) {
        const PreferenceProfile profile = big.at(static_cast<int64_t>(rng() % big.count()));
        CHECK_NOTHROW(all_clearing_orders(broker4, profile));
        CHECK_NOTHROW(all_clearing_orders(ttc4, profile));
    }
}

TEST_CASE("every evaluation is an injective assignment") {
    ProfileEnumerator profiles(3, 3);
    for (const auto& entry : catalog::standard_catalog(3)) {
        CAPTURE(entry.spec.name);
        for (int64_t p = 0; p < profiles.count(); ++p) {
            const Assignment a = evaluate(entry.spec, profiles.at(p));
            uint32_t seen = 0;
            for (AgentId i = 0; i < a.n; ++i) seen |= 1u << a.of(i);
            CHECK(__builtin_popcount(seen) == a.n);
        }
    }
}

TEST_CASE("three-broker configurations are rejected at evaluation") {
    ControlRightsTable table;
    table.n = table.m = 3;
    table.add(Submatching::empty(), {{0, ControlRight{0, Role::Broker}},
                                     {1, ControlRight{1, Role::Broker}},
                                     {2, ControlRight{2, Role::Broker}}});
    const RuleSpec rule = RuleSpec::trading_cycles(std::move(table), "three_brokers");
    CHECK_THROWS_AS(evaluate(rule, profile_from_string("abc,abc,abc")), UnsupportedConfigError);
}

TEST_CASE("chain reallocation closed form") {
    // promoting c for the first dictator rotates the whole allocation
    const PreferenceProfile all_abc = profile_from_string("abc,abc,abc");
    CHECK(assignment_to_string(sd_chain_reallocation({0, 1, 2}, all_abc, 2)) == "cab");
    // promoting the object already held changes nothing
    CHECK(assignment_to_string(sd_chain_reallocation({0, 1, 2}, all_abc, 0)) == "abc");

    // exhaustive cross-check against the direct rerun at n = 3
    ProfileEnumerator profiles(3, 3);
    std::vector<AgentId> order{0, 1, 2};
    do {
        for (int64_t p = 0; p < profiles.count(); ++p) {
            const PreferenceProfile profile = profiles.at(p);
            for (ObjectId top = 0; top < 3; ++top) {
                PreferenceProfile modified = profile;
                std::vector<int> ranking{top};
                for (int r = 0; r < 3; ++r)
                    if (profile.of(order[0]).at_rank(r) != top) ranking.push_back(profile.of(order[0]).at_rank(r));
                modified.orders[order[0]] = StrictOrder::from_ranking(ranking);
                CHECK(sd_chain_reallocation(order, profile, top) == reference::sd(order, modified));
            }
        }
    } while (std::next_permutation(order.begin(), order.end()));

    CHECK_THROWS_AS(sd_chain_reallocation({0, 1, 2}, all_abc, 5), DomainError);
}

TEST_CASE("control table validation") {
    CHECK(validate_control_rights(sd_control_table({0, 1, 2}, 3), 3, 3).valid);
    CHECK(validate_control_rights(broker_control_table(3), 3, 3).valid);
    CHECK(validate_control_rights(broker_control_table(4), 4, 4).valid);

    SUBCASE("matched agent controlling an object") {
        ControlRightsTable table;
        table.n = table.m = 3;
        table.add(Submatching::from_pairs({{0, 0}}),
                  {{1, ControlRight{0, Role::Owner}}, {2, ControlRight{2, Role::Owner}}});
        const auto report = validate_control_rights(table, 3, 3);
        CHECK_FALSE(report.valid);
        CHECK(report.issues.front().condition == "domain");
    }
    SUBCASE("ownership must persist") {
        ControlRightsTable table;
        table.n = table.m = 3;
        table.add(Submatching::empty(), {{0, ControlRight{0, Role::Owner}},
                                         {1, ControlRight{1, Role::Owner}},
                                         {2, ControlRight{2, Role::Owner}}});
        // agent 1 unmatched but loses object 1 to agent 2
        table.add(Submatching::from_pairs({{0, 0}}),
                  {{1, ControlRight{2, Role::Owner}}, {2, ControlRight{2, Role::Owner}}});
        const auto report = validate_control_rights(table, 3, 3);
        CHECK_FALSE(report.valid);
        bool found = false;
        for (const auto& issue : report.issues) found |= issue.condition == "persistence";
        CHECK(found);
    }
    SUBCASE("owner-broker mixing and broker counts") {
        ControlRightsTable table;
        table.n = table.m = 3;
        table.add(Submatching::empty(), {{0, ControlRight{0, Role::Broker}},
                                         {1, ControlRight{0, Role::Owner}},
                                         {2, ControlRight{2, Role::Owner}}});
        const auto report = validate_control_rights(table, 3, 3);
        CHECK_FALSE(report.valid);
        CHECK(report.issues.front().condition == "owner-broker-mix");

        ControlRightsTable three;
        three.n = three.m = 3;
        three.add(Submatching::empty(), {{0, ControlRight{0, Role::Broker}},
                                         {1, ControlRight{1, Role::Broker}},
                                         {2, ControlRight{2, Role::Broker}}});
        const auto rejected = validate_control_rights(three, 3, 3);
        CHECK_FALSE(rejected.valid);
        bool found = false;
        for (const auto& issue : rejected.issues) found |= issue.condition == "three-brokers";
        CHECK(found);
    }
}

TEST_CASE("partial tables raise a specification error when reached") {
    ControlRightsTable table;
    table.n = table.m = 3;
    table.add(Submatching::empty(), {{0, ControlRight{0, Role::Owner}},
                                     {1, ControlRight{1, Role::Owner}},
                                     {2, ControlRight{2, Role::Owner}}});
    const RuleSpec rule = RuleSpec::hierarchical(std::move(table), "partial");
    // everyone self-points: resolved in one round, no missing entry
    CHECK(assignment_to_string(evaluate(rule, profile_from_string("abc,bac,cab"))) == "abc");
    // a second round is reached and has no entry
    CHECK_THROWS_AS(evaluate(rule, profile_from_string("abc,abc,abc")), SpecIncompleteError);
}

TEST_CASE("hierarchical factory rejects brokers") {
    CHECK_THROWS_AS(RuleSpec::hierarchical(broker_control_table(3)), DomainError);
}

TEST_CASE("bossy demo definition") {
    const RuleSpec bossy = RuleSpec::bossy_demo({0, 1, 2});
    // head takes her top; tail served (1,2) when her last object is not a
    CHECK(assignment_to_string(evaluate(bossy, profile_from_string("bac,abc,abc"))) == "bac");
    // head ranks object a last: tail order flips to (2,1), head unmoved
    CHECK(assignment_to_string(evaluate(bossy, profile_from_string("bca,abc,abc"))) == "bca");
}

TEST_SUITE_END();
