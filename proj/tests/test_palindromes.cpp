#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "bitword.hpp"
#include "palindromes.hpp"
#include "qseries.hpp"
#include "testutil.hpp"

using namespace palin;
using testutil::part;

namespace {

std::set<Partition> enumerate_set(std::uint64_t n) {
    std::set<Partition> out;
    PalindromeStream stream(n);
    while (auto p = stream.next()) CHECK(out.insert(std::move(*p)).second);
    return out;
}

const std::set<Partition> kTable11 = {
    part({11}),          part({7, 4}),
    part({5, 5, 1}),     part({5, 4, 2}),
    part({5, 3, 3}),     part({3, 3, 3, 1, 1}),
    part({3, 3, 2, 2, 1}), part({3, 2, 2, 2, 2}),
    part({2, 2, 2, 2, 1, 1, 1}), part({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1})};

}  // namespace

TEST_CASE("case plans for n = 29 reproduce the generation table") {
    const auto plans = case_plans(29);
    REQUIRE(plans.size() == 10);
    // Columns: tag, k, l, zeros, ones, x, y, multiplicity; ordered by word
    // length descending, then zeros descending.
    const std::tuple<CaseTag, std::uint64_t, std::uint64_t, std::uint64_t, std::uint64_t,
                     std::uint64_t, std::uint64_t, unsigned long>
        expected[] = {
            {CaseTag::case1, 14, 0, 28, 0, 2, 30, 1},
            {CaseTag::case1, 0, 14, 0, 28, 2, 30, 1},
            {CaseTag::case2b, 9, 0, 18, 1, 3, 20, 1},
            {CaseTag::case2a, 0, 9, 1, 18, 3, 20, 1},
            {CaseTag::case2a, 6, 1, 13, 2, 4, 15, 7},
            {CaseTag::case2b, 1, 6, 2, 13, 4, 15, 7},
            {CaseTag::case2b, 5, 1, 10, 3, 5, 12, 6},
            {CaseTag::case2a, 1, 5, 3, 10, 5, 12, 6},
            {CaseTag::case1, 4, 2, 8, 4, 6, 10, 15},
            {CaseTag::case1, 2, 4, 4, 8, 6, 10, 15},
        };
    mpz_class total = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        const auto& [tag, k, l, zeros, ones, x, y, mult] = expected[i];
        CHECK(plans[i].tag == tag);
        CHECK(plans[i].k == k);
        CHECK(plans[i].l == l);
        CHECK(plans[i].zeros == zeros);
        CHECK(plans[i].ones == ones);
        CHECK(plans[i].factor_x == x);
        CHECK(plans[i].factor_y == y);
        CHECK(plans[i].multiplicity == mult);
        total += plans[i].multiplicity;
    }
    CHECK(total == 60);
}

TEST_CASE("case plans for small n") {
    const auto plans3 = case_plans(3);
    REQUIRE(plans3.size() == 2);
    CHECK(plans3[0].factor_x == 2);
    CHECK(plans3[0].factor_y == 4);
    CHECK(plans3[0].multiplicity == 1);
    CHECK(plans3[1].multiplicity == 1);

    const auto plans11 = case_plans(11);
    std::set<std::uint64_t> lengths;
    mpz_class total = 0;
    for (const auto& plan : plans11) {
        lengths.insert(plan.word_length());
        total += plan.multiplicity;
    }
    CHECK(lengths == std::set<std::uint64_t>{10, 7, 6});
    CHECK(total == 10);

    CHECK_THROWS_AS(case_plans(0), std::domain_error);
}

TEST_CASE("assemble reproduces the worked examples") {
    const auto plans = case_plans(29);
    // Length-15 pair: case 2a is (k=6, l=1), case 2b is (k=1, l=6).
    const CasePlan& plan2a = plans[4];
    const CasePlan& plan2b = plans[5];
    CHECK(assemble(plan2b, Partition{}) == part({14, 14, 1}));
    CHECK(assemble(plan2b, part({6})) == part({14, 8, 7}));
    CHECK(assemble(plan2a, part({1, 1, 1, 1, 1, 1})) ==
          part({3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
    CHECK_THROWS_AS(assemble(plan2b, part({7})), std::domain_error);

    // Length-28 pair has k*l = 0 and yields the trivial partitions.
    CHECK(assemble(plans[0], Partition{}) ==
          Partition(std::vector<std::uint64_t>(29, 1)));
    CHECK(assemble(plans[1], Partition{}) == part({29}));

    // n = 11, case 1 with k = 1, l = 2: the three tau choices.
    for (const auto& plan : case_plans(11)) {
        if (plan.tag != CaseTag::case1 || plan.k != 1) continue;
        CHECK(assemble(plan, Partition{}) == part({5, 5, 1}));
        CHECK(assemble(plan, part({1})) == part({5, 4, 2}));
        CHECK(assemble(plan, part({2})) == part({5, 3, 3}));
    }
}

TEST_CASE("enumeration matches the reference sets") {
    CHECK(enumerate_set(11) == kTable11);
    CHECK(enumerate_set(1) == std::set<Partition>{part({1})});
    CHECK(enumerate_set(29).size() == 60);

    const auto at14 = enumerate_set(14);
    CHECK(at14.size() == 10);
    for (const Partition& p : {part({4, 4, 2, 2, 2}), part({4, 3, 3, 3, 1}),
                               part({5, 5, 2, 2}), part({5, 4, 4, 1})})
        CHECK(at14.count(p) == 0);
}

TEST_CASE("enumerated palindromes are sound, fixed by reversal, closed under conjugation") {
    for (std::uint64_t n = 1; n <= 60; ++n) {
        const auto set = enumerate_set(n);
        CHECK(mpz_class(set.size()) == pp_count(n));
        for (const Partition& p : set) {
            CHECK(p.weight() == n);
            CHECK(is_palindrome(encode(p)));
            CHECK(reverse_partition(p) == p);
            CHECK(set.count(conjugate(p)) == 1);
        }
    }
}

TEST_CASE("pp_count spot values") {
    CHECK(pp_count(11) == 10);
    CHECK(pp_count(23) == 36);
    CHECK(pp_count(35) == 104);
    CHECK(pp_count(3) == 2);
    CHECK(pp_count(50) == 76);  // agrees with the brute-force oracle
}

TEST_CASE("pl spot values") {
    CHECK(pl_count(11) == 3);
    CHECK(pl_count(29) == 5);
    CHECK(pl_count(3) == 1);
    CHECK(pl_count(1) == 1);
}

TEST_CASE("plan shape laws up to n = 200") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const auto plans = case_plans(n);
        std::set<std::uint64_t> lengths;
        std::map<std::uint64_t, std::multiset<std::uint64_t>> split_by_length;
        for (const auto& plan : plans) {
            // Both counts odd would put lambda_1 and lambda'_1 both even.
            CHECK_FALSE((plan.zeros % 2 == 1 && plan.ones % 2 == 1));
            CHECK(plan.multiplicity == binomial(plan.k + plan.l, plan.k));
            CHECK(static_cast<std::uint64_t>(plan.factor_x) *
                      static_cast<std::uint64_t>(plan.factor_y) ==
                  2 * (n + 1));
            lengths.insert(plan.word_length());
            const std::multiset<std::uint64_t> split{plan.zeros, plan.ones};
            auto [it, inserted] = split_by_length.try_emplace(plan.word_length(), split);
            if (!inserted) CHECK(it->second == split);  // unique split per length
        }
        CHECK(pl_count(n) == lengths.size());
    }
}

TEST_CASE("nontrivial witnesses") {
    REQUIRE(nontrivial_witness(8).has_value());
    CHECK(*nontrivial_witness(8) == part({5, 3}));
    CHECK_FALSE(nontrivial_witness(6).has_value());
    CHECK_FALSE(nontrivial_witness(3).has_value());
    CHECK_FALSE(nontrivial_witness(1).has_value());

    for (std::uint64_t n = 1; n <= 300; ++n) {
        const auto w = nontrivial_witness(n);
        const bool expect_none = (n == 3) || testutil::is_prime(n + 1);
        CHECK(w.has_value() == !expect_none);
        if (w) {
            CHECK(w->weight() == n);
            CHECK(is_palindrome(encode(*w)));
            CHECK(*w != part({n}));
            CHECK(*w != Partition(std::vector<std::uint64_t>(n, 1)));
        }
    }
}

TEST_CASE("pp_count equals 2 exactly at n = 3 and prime successors, up to 300") {
    for (std::uint64_t n = 2; n <= 300; ++n)
        CHECK((pp_count(n) == 2) == (n == 3 || testutil::is_prime(n + 1)));
}
