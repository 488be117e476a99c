#include <doctest.h>

#include <set>

#include "spmech/model.hpp"
#include "spmech/rules.hpp"
#include "spmech/strings.hpp"

using namespace spmech;

TEST_SUITE_BEGIN("model");

TEST_CASE("order enumeration is lexicographic and complete") {
    CHECK(OrderEnumerator(1).count() == 1);
    CHECK(order_to_string(OrderEnumerator(1).at(0)) == "a");

    OrderEnumerator three(3);
    CHECK(three.count() == 6);
    CHECK(order_to_string(three.at(0)) == "abc");
    CHECK(order_to_string(three.at(5)) == "cba");

    // count and uniqueness by set insertion
    std::set<std::string> seen;
    for (const StrictOrder& order : OrderEnumerator(4)) seen.insert(order_to_string(order));
    CHECK(seen.size() == 24);

    CHECK_THROWS_AS(OrderEnumerator(0), CapacityError);
    CHECK_THROWS_AS(OrderEnumerator(9), CapacityError);
}

TEST_CASE("rank_of inverts ranking for every enumerated order") {
    for (int m = 1; m <= 5; ++m)
        for (const StrictOrder& order : OrderEnumerator(m))
            for (int r = 0; r < m; ++r) CHECK(order.rank(order.at_rank(r)) == r);
}

TEST_CASE("order_index is the enumeration position") {
    for (int m = 1; m <= 5; ++m) {
        const auto& table = all_orders(m);
        for (size_t k = 0; k < table.size(); ++k) CHECK(order_index(table[k]) == static_cast<int>(k));
    }
}

TEST_CASE("profile enumeration counts") {
    CHECK(ProfileEnumerator(1, 2).count() == 2);
    CHECK(ProfileEnumerator(3, 3).count() == 216);
    CHECK(ProfileEnumerator(4, 4).count() == 331776);
    CHECK_THROWS_AS(ProfileEnumerator(8, 8), CapacityError); // (8!)^8 over budget
    CHECK_THROWS_AS(ProfileEnumerator(3, 3, 100), CapacityError);
}

TEST_CASE("profile index arithmetic") {
    ProfileEnumerator e(3, 3);
    for (int64_t p : {int64_t{0}, int64_t{1}, int64_t{41}, int64_t{215}}) {
        for (AgentId i = 0; i < 3; ++i) {
            const int64_t opp = e.opposing_index(p, i);
            CHECK(opp < e.opposing_count());
            CHECK(e.compose(opp, i, e.digit(p, i)) == p);
            CHECK(e.digit(e.with_digit(p, i, 3), i) == 3);
            // other agents' digits survive a with_digit
            for (AgentId j = 0; j < 3; ++j)
                if (j != i) CHECK(e.digit(e.with_digit(p, i, 3), j) == e.digit(p, j));
        }
    }
    // profiles decode to the digit orders
    const PreferenceProfile profile = e.at(41);
    for (AgentId i = 0; i < 3; ++i) CHECK(order_index(profile.of(i)) == e.digit(41, i));
}

TEST_CASE("top-rich checks") {
    std::vector<StrictOrder> full(all_orders(3).begin(), all_orders(3).end());
    CHECK(check_top_rich(full, 3));

    // a and b can top, c never does
    std::vector<StrictOrder> narrow{order_from_string("abc"), order_from_string("bac")};
    CHECK_FALSE(check_top_rich(narrow, 3));

    std::vector<StrictOrder> pair{order_from_string("ab"), order_from_string("ba")};
    CHECK(check_top_rich(pair, 2));

    CHECK_THROWS_AS(check_top_rich({}, 2), DomainError);
}

TEST_CASE("pointwise Pareto domination") {
    const PreferenceProfile all_abc = profile_from_string("abc,abc,abc");
    const Assignment mu1 = assignment_from_string("abc");
    CHECK_FALSE(assignment_pareto_dominates(mu1, mu1, all_abc));

    // agent 0 improves, agent 1 worsens
    CHECK_FALSE(assignment_pareto_dominates(assignment_from_string("bac"), mu1, all_abc));

    const PreferenceProfile swap = profile_from_string("ba,ab");
    CHECK(assignment_pareto_dominates(assignment_from_string("ba"), assignment_from_string("ab"), swap));
}

TEST_CASE("submatchings are canonical and ordered by inclusion") {
    Submatching s = Submatching::from_pairs({{2, 0}, {0, 2}});
    CHECK(s.pairs.front().first == 0);
    CHECK(s.key(3) != Submatching::from_pairs({{2, 2}, {0, 0}}).key(3));
    CHECK_THROWS_AS(Submatching::from_pairs({{0, 1}, {0, 2}}), DomainError);
    CHECK_THROWS_AS(Submatching::from_pairs({{0, 1}, {1, 1}}), DomainError);

    const auto family = enumerate_proper_submatchings(3, 3);
    CHECK(family.size() == 28); // 1 empty + 9 singletons + 18 pairs

    std::set<uint64_t> keys;
    for (const auto& sigma : family) {
        keys.insert(sigma.key(3));
        CHECK(sigma.contains(sigma)); // reflexive
    }
    CHECK(keys.size() == family.size());

    // antisymmetry and transitivity on the enumerated family
    for (const auto& a : family)
        for (const auto& b : family) {
            if (a.contains(b) && b.contains(a)) CHECK(a == b);
            for (const auto& c : family)
                if (a.contains(b) && b.contains(c)) CHECK(a.contains(c));
        }
}

TEST_CASE("the assignment relevance map projects to the own object") {
    const RelevanceMap relevance = RelevanceMap::own_object();
    const Assignment a = assignment_from_string("cab");
    for (AgentId i = 0; i < 3; ++i) CHECK(relevance.project(i, a) == a.of(i));
}

TEST_CASE("budget honours SPMECH_BUDGET") {
    CHECK(default_profile_budget() == 1000000000);
    setenv("SPMECH_BUDGET", "100", 1);
    CHECK(default_profile_budget() == 100);
    CHECK_THROWS_AS(ProfileEnumerator(3, 3, default_profile_budget()), CapacityError);
    setenv("SPMECH_BUDGET", "bogus", 1);
    CHECK_THROWS_AS(default_profile_budget(), InputError);
    unsetenv("SPMECH_BUDGET");
    CHECK(default_profile_budget() == 1000000000);
}

TEST_SUITE_END();
