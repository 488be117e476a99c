#include <doctest.h>

#include "spmech/audit.hpp"
#include "spmech/catalog.hpp"
#include "spmech/io.hpp"
#include "spmech/repro.hpp"

using namespace spmech;

TEST_SUITE_BEGIN("io");

TEST_CASE("preference grammar round trips") {
    CHECK(order_to_string(order_from_string("acb")) == "acb");
    CHECK(order_from_string("acb").top() == 0);
    CHECK(order_from_string("acb").rank(1) == 2);

    const PreferenceProfile profile = profile_from_string("abc,bca,cab");
    CHECK(profile.agent_count() == 3);
    CHECK(profile_to_string(profile) == "abc,bca,cab");

    CHECK_THROWS_AS(order_from_string("aab"), InputError);
    CHECK_THROWS_AS(order_from_string("abz"), InputError);
    CHECK_THROWS_AS(order_from_string("ab", 3), InputError);
    CHECK_THROWS_AS(profile_from_string("abc,ab"), InputError);
    CHECK_THROWS_AS(profile_from_string(""), InputError);

    const OpposingProfile opp = opposing_from_string("abc,bca", 1);
    CHECK(opp.excluded == 1);
    CHECK(order_to_string(opp.orders[0]) == "abc");
    CHECK(order_to_string(opp.orders[2]) == "bca");
    CHECK(opposing_to_string(opp) == "abc,bca");

    CHECK(assignment_to_string(assignment_from_string("bca")) == "bca");
    CHECK_THROWS_AS(assignment_from_string("bb"), InputError);
}

TEST_CASE("rule json round trips preserve behaviour") {
    std::vector<RuleSpec> specs;
    for (const auto& e : catalog::standard_catalog(3)) specs.push_back(e.spec);
    for (const auto& e : catalog::standard_catalog(4)) specs.push_back(e.spec);
    for (const auto& e : catalog::structural_case_rules()) specs.push_back(e.spec);
    for (const RuleSpec& spec : specs) {
        CAPTURE(spec.name);
        const RuleSpec reloaded = io::rule_from_json(io::rule_to_json(spec));
        REQUIRE(reloaded.n == spec.n);
        ProfileEnumerator profiles(spec.n, spec.m);
        const int64_t stride = spec.n == 3 ? 7 : 7919;
        for (int64_t p = 0; p < profiles.count(); p += stride) {
            const PreferenceProfile profile = profiles.at(p);
            CHECK(evaluate(spec, profile) == evaluate(reloaded, profile));
        }
    }
}

TEST_CASE("documented rule snippets parse") {
    using io::Json;
    const RuleSpec ttc = io::rule_from_json(Json::parse(R"({"n":4,"kind":"ttc","endowment":[0,1,2,3]})"));
    CHECK(ttc.kind == RuleKind::TTC);
    CHECK(ttc.n == 4);

    const RuleSpec sd = io::rule_from_json(Json::parse(R"({"kind":"sd","order":[0,1,2]})"));
    CHECK(sd.kind == RuleKind::SD);

    const RuleSpec bipolar = io::rule_from_json(
        Json::parse(R"({"kind":"bipolar_sd","order":[0,1,2,3],"owner_split":[[0,1],[2,3]]})"));
    CHECK(bipolar.kind == RuleKind::BipolarSD);

    const RuleSpec tc = io::rule_from_json(Json::parse(
        R"({"kind":"tc","n":3,"control":[
             {"matched":[],"rights":{"0":[0,"broker"],"1":[1,"owner"],"2":[2,"owner"]}},
             {"matched":[[1,1]],"rights":{"0":[2,"owner"],"2":[2,"owner"]}}]})"));
    CHECK(tc.kind == RuleKind::TradingCycles);
    CHECK(tc.table.entries.size() == 2);

    CHECK_THROWS_AS(io::rule_from_json(Json::parse(R"({"kind":"nope"})")), InputError);
    CHECK_THROWS_AS(io::rule_from_json(Json::parse(R"({"kind":"sd","order":[0,0,1]})")), InputError);
}

TEST_CASE("reports serialise with stable fields") {
    AuditReport report;
    report.property = "strategy-proofness";
    report.pass = false;
    Counterexample cx;
    cx.put("profile", "abc,bca,cab");
    cx.put("agent", "1");
    report.counterexample = cx;
    report.work = 42;
    const io::Json j = io::report_to_json(report);
    CHECK(j["verdict"] == "fail");
    CHECK(j["counterexample"]["profile"] == "abc,bca,cab");
    CHECK(j["work"] == 42);
}

TEST_CASE("distribution csv format") {
    stochastic::ExactDistribution d{{1, 3}, {Rational(1, 3), Rational(2, 3)}};
    const std::string csv = io::distribution_csv(d);
    CHECK(csv.rfind("value,numerator,denominator,decimal\n", 0) == 0);
    CHECK(csv.find("1,1,3,0.333333333333\n") != std::string::npos);
    CHECK(csv.find("3,2,3,0.666666666667\n") != std::string::npos);
}

TEST_CASE("the reproduction registry is exhaustive and stable") {
    const std::vector<std::string> expected{
        "thm1",          "cor2-falsifiable", "prop3",
        "lemmaB1",       "matrixB",          "corB-top",
        "prop-extreme",  "prop-avg-delta",   "lemma-inclusion-power",
        "prop-superset", "cor-transitive",   "cor-hierarchical-catalog",
        "thm2-catalog",  "cor-longvelez",    "obs-bilateral",
        "lemma-sd-power", "thm6-catalog",    "appD-chain",
        "appC-straffin", "ex-imposition",    "ex-nontrans",
    };
    CHECK(repro::all_ids() == expected);
    for (const std::string& id : expected) CHECK(repro::known_id(id));
    CHECK_FALSE(repro::known_id("thm3"));
    CHECK_THROWS_AS(repro::run("thm3", 3), InputError);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    const RuleSpec broker = RuleSpec::trading_cycles(broker_control_table(3), "broker");
    auto render = [&](int workers) {
        const audit::Audited a = audit::Audited::build(broker, workers);
        io::Json list = io::Json::array();
        for (const AuditReport& report :
             {audit::check_strategy_proof(a), audit::check_reallocation_proof(a),
              audit::check_power_transitivity(a), audit::check_balanced(a)})
            list.push_back(io::report_to_json(report));
        return list.dump(2);
    };
    const std::string once = render(1);
    CHECK(once == render(1));
    CHECK(once == render(2)); // worker count never leaks into the artifact
}

TEST_CASE("validation reports serialise") {
    ControlRightsTable table;
    table.n = table.m = 3;
    table.add(Submatching::from_pairs({{0, 0}}),
              {{1, ControlRight{0, Role::Owner}}, {2, ControlRight{2, Role::Owner}}});
    const io::Json j = io::validation_to_json(validate_control_rights(table, 3, 3));
    CHECK(j["valid"] == false);
    CHECK(j["issues"].size() > 0);
}

TEST_SUITE_END();
