#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgf/semigroup.hpp"
#include "support/oracles.hpp"

#include <numeric>
#include <random>

using namespace cgf;

TEST_CASE("GeneratorSet construction") {
    GeneratorSet S({6, 4, 6});
    CHECK(S.gens() == std::vector<long long>{4, 6});
    CHECK(S.gcd() == 2);
    CHECK(S.reduced() == std::vector<long long>{2, 3});
    CHECK_THROWS_AS(GeneratorSet({}), std::invalid_argument);
    CHECK_THROWS_AS(GeneratorSet({0, 3}), std::invalid_argument);
}

TEST_CASE("membership examples") {
    GeneratorSet s27({2, 7});
    CHECK(!semigroup_contains(s27, 5));
    CHECK(semigroup_contains(s27, 9));
    GeneratorSet s46({4, 6});
    CHECK(semigroup_contains(s46, 10));
    CHECK(!semigroup_contains(s46, 7));
    GeneratorSet one({1});
    for (long long x : {0, 1, 2, 17, 1000}) CHECK(semigroup_contains(one, x));
    CHECK(semigroup_contains(s46, 0));
}

TEST_CASE("apery examples") {
    CHECK(apery_set(GeneratorSet({3, 5})) == std::vector<long long>{0, 10, 5});
    CHECK(apery_set(GeneratorSet({2, 3})) == std::vector<long long>{0, 3});
    CHECK(apery_set(GeneratorSet({1})) == std::vector<long long>{0});
    CHECK_THROWS_AS(apery_set(GeneratorSet({4, 6})), std::invalid_argument);
}

TEST_CASE("frobenius examples") {
    CHECK(frobenius_number(GeneratorSet({3, 5})) == 7);
    CHECK(frobenius_number(GeneratorSet({2, 3})) == 1);
    CHECK(frobenius_number(GeneratorSet({1})) == -1);
    CHECK(frobenius_number(GeneratorSet({1, 5})) == -1);
    CHECK_THROWS_AS(frobenius_number(GeneratorSet({4, 6})), std::invalid_argument);
}

TEST_CASE("selmer bound examples") {
    CHECK(selmer_bound(GeneratorSet({3, 5})) == 7);  // tight: F(3,5) = 7
    CHECK(selmer_bound(GeneratorSet({6, 9, 20})) == 88);
    CHECK(frobenius_number(GeneratorSet({6, 9, 20})) == 43);
    CHECK(selmer_bound(GeneratorSet({2, 3})) == 1);  // tight: F(2,3) = 1
    CHECK(selmer_bound(GeneratorSet({2, 7})) == 5);  // tight: F(2,7) = 5
    CHECK_THROWS_AS(selmer_bound(GeneratorSet({1})), std::invalid_argument);
    CHECK_THROWS_AS(selmer_bound(GeneratorSet({4, 6})), std::invalid_argument);
}

TEST_CASE("count_representable examples") {
    CHECK(count_representable({2, 3, 3, 8, 12}, GeneratorSet({4, 6})) == 2);
    CHECK(count_representable({3, 5, 14}, GeneratorSet({2, 7})) == 1);
    CHECK(count_representable({9, 9, 1, 4}, GeneratorSet({1})) == 4);
}

namespace {

std::vector<long long> random_gcd1_set(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(2, 5);
    std::uniform_int_distribution<long long> lo(2, 60);
    std::uniform_int_distribution<long long> hi(2, 200);
    while (true) {
        std::vector<long long> gens{lo(rng)};
        for (int i = size(rng); i > 1; --i) gens.push_back(hi(rng));
        long long g = 0;
        for (long long v : gens) g = std::gcd(g, v);
        if (g == 1) return gens;
    }
}

}  // namespace

TEST_CASE("frobenius agrees with the DP oracle and respects the bound") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        auto gens = random_gcd1_set(rng);
        GeneratorSet S(gens);
        long long frob = frobenius_number(S);
        CHECK(frob == test::frobenius_by_dp(gens));
        if (S.gens().size() >= 2) CHECK(frob <= selmer_bound(S));
        // everything past the Frobenius number is a member
        for (long long x = frob + 1; x <= frob + 20; ++x)
            CHECK(semigroup_contains(S, x));
    }
}

TEST_CASE("apery table satisfies its defining conditions") {
    std::mt19937 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        auto gens = random_gcd1_set(rng);
        GeneratorSet S(gens);
        const long long m = S.reduced().front();
        const auto& ap = S.apery();
        REQUIRE(static_cast<long long>(ap.size()) == m);
        const long long limit = *std::max_element(ap.begin(), ap.end()) + 1;
        auto reach = test::reachable_table(S.reduced(), limit);
        for (long long r = 0; r < m; ++r) {
            CHECK(ap[static_cast<std::size_t>(r)] % m == r);
            CHECK(reach[static_cast<std::size_t>(ap[static_cast<std::size_t>(r)])]);
            long long below = ap[static_cast<std::size_t>(r)] - m;
            if (below >= 0) CHECK(!reach[static_cast<std::size_t>(below)]);
        }
    }
}

TEST_CASE("membership agrees with brute-force enumeration") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long long> entry(2, 30);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<long long> gens;
        for (int i = size(rng); i > 0; --i) gens.push_back(entry(rng));
        GeneratorSet S(gens);
        for (long long x = 0; x <= 200; ++x)
            CHECK(semigroup_contains(S, x) == test::member_by_enumeration(gens, x));
    }
}
