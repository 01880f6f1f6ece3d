#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgf/cyclotomic.hpp"

#include <random>

using namespace cgf;

namespace {

IntPoly make(std::vector<long long> coeffs) {
    std::vector<BigInt> big(coeffs.begin(), coeffs.end());
    return IntPoly{std::move(big)};
}

IntPoly inflate(const IntPoly& p, long long s) {
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree()) * s + 1, BigInt(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k * s] = p.coeffs()[k];
    return IntPoly{std::move(out)};
}

}  // namespace

TEST_CASE("factor_profile") {
    FactorProfile fp = factor_profile(105);
    CHECK(fp.prime_factors == std::vector<long long>{3, 5, 7});
    CHECK(fp.omega == 3);
    CHECK(fp.radical == 105);
    fp = factor_profile(12);
    CHECK(fp.prime_factors == std::vector<long long>{2, 3});
    CHECK(fp.omega == 2);
    CHECK(fp.radical == 6);
    fp = factor_profile(1);
    CHECK(fp.prime_factors.empty());
    CHECK(fp.omega == 0);
    CHECK(fp.radical == 1);
    CHECK_THROWS_AS(factor_profile(0), std::invalid_argument);
}

TEST_CASE("divisors_of") {
    CHECK(divisors_of(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors_of(1) == std::vector<long long>{1});
    CHECK(divisors_of(17) == std::vector<long long>{1, 17});
}

TEST_CASE("cyclotomic_poly small cases") {
    CHECK(cyclotomic_poly(1) == make({-1, 1}));
    CHECK(cyclotomic_poly(2) == make({1, 1}));
    CHECK(cyclotomic_poly(5) == make({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(6) == make({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == make({1, 0, -1, 0, 1}));
}

TEST_CASE("Phi_105 has minimum coefficient -2") {
    const IntPoly& p = cyclotomic_poly(105);
    CHECK(p.degree() == 48);
    CHECK(min_coefficient(p) == -2);
}

TEST_CASE("Phi_15 is flat") {
    const IntPoly& p = cyclotomic_poly(15);
    CHECK(p == make({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    CHECK(is_flat(p));
}

TEST_CASE("product over divisors gives q^n - 1") {
    for (long long n = 1; n <= 300; ++n) {
        IntPoly prod = IntPoly::constant(1);
        for (long long d : divisors_of(n)) prod = poly_mul(prod, cyclotomic_poly(d));
        std::vector<BigInt> expect(static_cast<std::size_t>(n) + 1, BigInt(0));
        expect.front() = -1;
        expect.back() = 1;
        CHECK(prod == IntPoly{std::move(expect)});
    }
}

TEST_CASE("inflation identities for prime multiples") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> pick_n(1, 60);
    const long long primes[] = {2, 3, 5, 7, 11, 13};
    for (int trial = 0; trial < 60; ++trial) {
        long long n = pick_n(rng);
        long long p = primes[rng() % 6];
        if (n % p != 0) {
            CHECK(poly_mul(cyclotomic_poly(n), cyclotomic_poly(n * p)) ==
                  inflate(cyclotomic_poly(n), p));
        } else {
            CHECK(cyclotomic_poly(n * p) == inflate(cyclotomic_poly(n), p));
        }
    }
}

TEST_CASE("flatness for at most two distinct odd prime factors") {
    for (long long n = 1; n <= 300; ++n) {
        int odd_primes = 0;
        for (long long p : factor_profile(n).prime_factors)
            if (p % 2 == 1) ++odd_primes;
        if (odd_primes <= 2) CHECK(is_flat(cyclotomic_poly(n)));
    }
}

TEST_CASE("divisor_multiset") {
    CHECK(divisor_multiset({2, 3}) == DivisorMultiset{1, 1, 2, 3});
    CHECK(divisor_multiset({6}) == DivisorMultiset{1, 2, 3, 6});
    CHECK(divisor_multiset({4, 4}) == DivisorMultiset{1, 1, 2, 2, 4, 4});
    CHECK(divisor_multiset({}).empty());
}

TEST_CASE("polynomiality_delta examples") {
    auto delta = polynomiality_delta(QuotientSpec::make({105, 3, 5, 7}, {35, 21, 15, 1}));
    REQUIRE(delta.has_value());
    CHECK(*delta == DivisorMultiset{105});

    CHECK(!polynomiality_delta(QuotientSpec::make({4, 5}, {2, 3})));

    delta = polynomiality_delta(QuotientSpec::make({6, 1}, {2, 3}));
    REQUIRE(delta.has_value());
    CHECK(*delta == DivisorMultiset{6});

    CHECK_THROWS_AS(polynomiality_delta(QuotientSpec::make({2}, {1, 2})),
                    std::invalid_argument);
}

TEST_CASE("delta product reconstructs the quotient, with sign for #A > #B") {
    // equal sizes: product of Phi_d over Delta equals the expansion
    QuotientSpec spec = QuotientSpec::make({105, 3, 5, 7}, {35, 21, 15, 1});
    CHECK(*expand_quotient(spec) == cyclotomic_poly(105));

    // #A - #B = 1: the quotient is minus the Phi-product
    spec = QuotientSpec::make({2}, {});
    auto delta = polynomiality_delta(spec);
    REQUIRE(delta.has_value());
    CHECK(*delta == DivisorMultiset{1, 2});
    IntPoly prod = IntPoly::constant(-1);  // (-1)^(#A-#B)
    for (long long d : *delta) prod = poly_mul(prod, cyclotomic_poly(d));
    CHECK(prod == *expand_quotient(spec));
}

TEST_CASE("delta presence matches exact division on random specs") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<long long> entry(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = size(rng);
        std::vector<long long> a, b;
        for (int i = 0; i < n; ++i) a.push_back(entry(rng));
        for (int i = 0; i < n; ++i) b.push_back(entry(rng));
        QuotientSpec spec = QuotientSpec::make(a, b);
        auto delta = polynomiality_delta(spec);
        auto expansion = expand_quotient(spec);
        CHECK(delta.has_value() == expansion.has_value());
        if (delta) {
            IntPoly prod = IntPoly::constant(1);
            for (long long d : *delta) prod = poly_mul(prod, cyclotomic_poly(d));
            CHECK(prod == *expansion);
        }
    }
}

TEST_CASE("cgf_form examples") {
    auto form = cgf_form(make({1, 1, 2, 1, 1}));
    REQUIRE(form.has_value());
    CHECK(form->alpha == 1);
    CHECK(form->beta == 0);
    CHECK(form->cyclo_indices == std::vector<long long>{3, 4});
    CHECK(form->phi1_multiplicity == 0);
    CHECK(form->expand() == make({1, 1, 2, 1, 1}));

    form = cgf_form(make({0, 2}));
    REQUIRE(form.has_value());
    CHECK(form->alpha == 2);
    CHECK(form->beta == 1);
    CHECK(form->cyclo_indices.empty());

    CHECK(!cgf_form(make({1, 1, 0, 1})));

    CHECK_THROWS_AS(cgf_form(IntPoly{}), std::invalid_argument);
    CHECK_THROWS_AS(cgf_form(make({1, -1})), std::invalid_argument);
}

TEST_CASE("cgf_form round-trips random cyclotomic products") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long long> idx(2, 20);
    std::uniform_int_distribution<long long> alpha(1, 9);
    std::uniform_int_distribution<int> count(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        IntPoly p = IntPoly::monomial(alpha(rng), static_cast<std::size_t>(rng() % 3));
        std::vector<long long> used;
        for (int i = count(rng); i > 0; --i) {
            long long d = idx(rng);
            used.push_back(d);
            p = poly_mul(p, cyclotomic_poly(d));
        }
        if (min_coefficient(p) < 0) continue;  // only CGFs are valid inputs
        auto form = cgf_form(p);
        REQUIRE(form.has_value());
        CHECK(form->expand() == p);
    }
}
