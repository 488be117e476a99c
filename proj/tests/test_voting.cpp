#include <doctest.h>

#include "spmech/voting.hpp"

using namespace spmech;
namespace vt = spmech::voting;

TEST_SUITE_BEGIN("voting");

TEST_CASE("decisiveness and binary menus") {
    const vt::BinaryRule majority = vt::BinaryRule::weighted_majority(2, {1, 1, 1});
    // others split one-one: the voter tips the scale
    CHECK(vt::decisive(majority, 0, 0b01));
    CHECK(vt::menu_binary(majority, 0, 0b01) == std::set<int>{0, 1});
    // unanimous others: no influence
    CHECK_FALSE(vt::decisive(majority, 0, 0b11));
    CHECK(vt::menu_binary(majority, 0, 0b11) == std::set<int>{1});
    CHECK_FALSE(vt::decisive(majority, 0, 0b00));

    // a dictator is decisive everywhere
    vt::BinaryRule dictator = vt::BinaryRule::weighted_majority(1, {1, 0, 0});
    for (uint32_t opp = 0; opp < 4; ++opp) CHECK(vt::decisive(dictator, 0, opp));
}

TEST_CASE("banzhaf indices") {
    const vt::BinaryRule majority = vt::BinaryRule::weighted_majority(2, {1, 1, 1});
    for (int i = 0; i < 3; ++i) CHECK(vt::banzhaf(majority, i) == Rational(1, 2));

    const vt::BinaryRule dictator = vt::BinaryRule::weighted_majority(1, {1, 0, 0});
    CHECK(vt::banzhaf(dictator, 0) == Rational(1));
    CHECK(vt::banzhaf(dictator, 1) == Rational(0));

    const vt::BinaryRule weighted = vt::BinaryRule::weighted_majority(3, {2, 1, 1});
    CHECK(vt::banzhaf(weighted, 0) == Rational(3, 4));
    CHECK(vt::banzhaf(weighted, 1) == Rational(1, 4));
    CHECK(vt::banzhaf(weighted, 2) == Rational(1, 4));
}

TEST_CASE("shapley-shubik by both routes") {
    const vt::BinaryRule majority = vt::BinaryRule::weighted_majority(2, {1, 1, 1});
    for (int i = 0; i < 3; ++i) CHECK(vt::shapley_shubik(majority, i) == Rational(1, 3));

    const vt::BinaryRule dictator = vt::BinaryRule::weighted_majority(1, {1, 0, 0});
    CHECK(vt::shapley_shubik(dictator, 0) == Rational(1));
    CHECK(vt::shapley_shubik(dictator, 2) == Rational(0));

    const vt::BinaryRule weighted = vt::BinaryRule::weighted_majority(3, {2, 1, 1});
    CHECK(vt::shapley_shubik(weighted, 0) == Rational(2, 3));
    CHECK(vt::shapley_shubik(weighted, 1) == Rational(1, 6));
    CHECK(vt::shapley_shubik(weighted, 2) == Rational(1, 6));

    // the two routes also agree on a non-monotone rule: odd parity
    std::vector<uint8_t> parity(8);
    for (uint32_t v = 0; v < 8; ++v) parity[v] = __builtin_popcount(v) & 1;
    const vt::BinaryRule xor_rule = vt::BinaryRule::from_table(3, parity);
    CHECK_FALSE(xor_rule.monotone());
    for (int i = 0; i < 3; ++i) {
        CHECK(vt::banzhaf(xor_rule, i) == Rational(1));
        // always decisive: both routes give 1, and nothing forces the
        // usual normalisation without monotonicity
        CHECK(vt::shapley_shubik(xor_rule, i) == Rational(1));
    }
}

TEST_CASE("expected menu sizes reproduce the power indices") {
    const vt::BinaryRule majority = vt::BinaryRule::weighted_majority(2, {1, 1, 1});
    CHECK(vt::expected_delta(majority, 0, vt::CultureModel::Bernoulli) == Rational(3, 2));
    CHECK(vt::expected_delta(majority, 0, vt::CultureModel::Homogeneity) == Rational(4, 3));

    const vt::BinaryRule dictator = vt::BinaryRule::weighted_majority(1, {1, 0, 0});
    CHECK(vt::expected_delta(dictator, 0, vt::CultureModel::Bernoulli) == Rational(2));
    CHECK(vt::expected_delta(dictator, 0, vt::CultureModel::Homogeneity) == Rational(2));

    const vt::BinaryRule weighted = vt::BinaryRule::weighted_majority(3, {2, 1, 1});
    for (int i = 0; i < 3; ++i) {
        CHECK(vt::expected_delta(weighted, i, vt::CultureModel::Bernoulli) ==
              Rational(1) + vt::banzhaf(weighted, i));
        CHECK(vt::expected_delta(weighted, i, vt::CultureModel::Homogeneity) ==
              Rational(1) + vt::shapley_shubik(weighted, i));
    }
}

TEST_CASE("identities across every monotone game up to four voters") {
    for (int n = 1; n <= 4; ++n) {
        const auto rules = vt::all_monotone_rules(n);
        // Dedekind counts of monotone boolean functions
        const std::vector<size_t> expected{3, 6, 20, 168};
        CHECK(rules.size() == expected[n - 1]);
        for (const auto& rule : rules) {
            Rational ss_sum(0);
            for (int i = 0; i < n; ++i) {
                const Rational s = vt::shapley_shubik(rule, i);
                ss_sum += s;
                CHECK(vt::expected_delta(rule, i, vt::CultureModel::Bernoulli) ==
                      Rational(1) + vt::banzhaf(rule, i));
                CHECK(vt::expected_delta(rule, i, vt::CultureModel::Homogeneity) == Rational(1) + s);
            }
            if (rule.surjective()) CHECK(ss_sum == Rational(1));
        }
    }
}

TEST_CASE("imposition example across sizes") {
    CHECK(vt::verify_example_imposition(2).pass);
    CHECK(vt::verify_example_imposition(3).pass);
}

TEST_CASE("capacity guards") {
    CHECK_THROWS_AS(vt::BinaryRule::weighted_majority(1, std::vector<int64_t>(21, 1)), CapacityError);
    CHECK_THROWS_AS(vt::all_monotone_rules(5), CapacityError);
    CHECK_THROWS_AS(vt::BinaryRule::from_table(2, {0, 1}), DomainError);
}

TEST_SUITE_END();
