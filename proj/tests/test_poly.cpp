#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cgf/poly.hpp"

#include <random>

using namespace cgf;

namespace {

IntPoly make(std::vector<long long> coeffs) {
    std::vector<BigInt> big(coeffs.begin(), coeffs.end());
    return IntPoly{std::move(big)};
}

IntPoly random_poly(std::mt19937& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    std::vector<BigInt> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPoly{std::move(c)};
}

}  // namespace

TEST_CASE("IntPoly basics") {
    CHECK(IntPoly{}.is_zero());
    CHECK(IntPoly{}.degree() == -1);
    CHECK(make({1, 0, 0}).degree() == 0);  // trailing zeros trimmed
    CHECK(IntPoly::constant(0).is_zero());
    CHECK(IntPoly::one_minus_q_pow(3) == make({1, 0, 0, -1}));
    CHECK(make({-1, 2, 1}).to_string() == "-1 + 2*q + q^2");
}

TEST_CASE("QuotientSpec validation") {
    QuotientSpec spec = QuotientSpec::make({4, 3}, {2, 1});
    CHECK(spec.a == std::vector<long long>{3, 4});
    CHECK(spec.b == std::vector<long long>{1, 2});
    CHECK_THROWS_AS(QuotientSpec::make({0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(QuotientSpec::make({2}, {-1}), std::invalid_argument);
}

TEST_CASE("poly_mul examples") {
    CHECK(poly_mul(make({1, 1}), make({1, -1})) == make({1, 0, -1}));
    CHECK(poly_mul(make({1, -1, 1}), make({1, 1})) == make({1, 0, 0, 1}));
    IntPoly p = make({2, 0, -1, 5});
    CHECK(poly_mul(p, IntPoly::constant(1)) == p);
    CHECK(poly_mul(p, IntPoly{}).is_zero());
}

TEST_CASE("poly_divexact examples") {
    CHECK(*poly_divexact(IntPoly::one_minus_q_pow(6), IntPoly::one_minus_q_pow(2)) ==
          make({1, 0, 1, 0, 1}));
    CHECK(!poly_divexact(IntPoly::one_minus_q_pow(3), IntPoly::one_minus_q_pow(2)));
    IntPoly p = make({3, -1, 4});
    CHECK(*poly_divexact(p, p) == IntPoly::constant(1));
    CHECK_THROWS_AS(poly_divexact(p, IntPoly{}), std::invalid_argument);
    // non-integer quotient coefficient
    CHECK(!poly_divexact(make({1, 1}), make({2, 2})));
    CHECK(*poly_divexact(IntPoly{}, p) == IntPoly{});
}

TEST_CASE("expand_quotient examples") {
    CHECK(*expand_quotient(QuotientSpec::make({3, 4}, {1, 2})) == make({1, 1, 2, 1, 1}));
    CHECK(*expand_quotient(QuotientSpec::make({2}, {2})) == IntPoly::constant(1));
    auto p = expand_quotient(QuotientSpec::make({3, 5, 14}, {2, 3, 7}));
    REQUIRE(p.has_value());
    CHECK(*p == make({1, 0, 1, 0, 1, -1, 1, 0, 1, 0, 1}));
    CHECK(min_coefficient(*p) == -1);
    CHECK(!expand_quotient(QuotientSpec::make({4, 5}, {2, 3})));
    CHECK(*expand_quotient(QuotientSpec::make({}, {})) == IntPoly::constant(1));
}

TEST_CASE("expand_quotient cap is an error, not truncation") {
    CHECK_THROWS_AS(expand_quotient(QuotientSpec::make({50, 60}, {1}), 100), CapExceededError);
    try {
        expand_quotient(QuotientSpec::make({50, 60}, {1}), 100);
    } catch (const CapExceededError& e) {
        CHECK(e.required_degree == 109);
        CHECK(e.degree_cap == 100);
    }
    // within the cap nothing changes
    CHECK(expand_quotient(QuotientSpec::make({50, 60}, {1}), 110).has_value());
}

TEST_CASE("coefficient inspection") {
    CHECK(min_coefficient(IntPoly::constant(5)) == 5);
    CHECK(min_coefficient(make({1, 1, 0, -1, -1})) == -1);
    CHECK_THROWS_AS(min_coefficient(IntPoly{}), std::invalid_argument);
    CHECK(is_flat(make({1, -1, 1})));
    CHECK(max_abs_coeff(make({1, -1, 1})) == 1);
    CHECK(!is_flat(make({1, 1, 2, 1, 1})));
    CHECK(max_abs_coeff(make({1, 1, -2, 1, 1})) == 2);
    CHECK_THROWS_AS(is_flat(IntPoly{}), std::invalid_argument);
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        IntPoly p = random_poly(rng, 6);
        IntPoly r = random_poly(rng, 6);
        IntPoly s = random_poly(rng, 4);
        CHECK(poly_mul(p, r) == poly_mul(r, p));
        CHECK(poly_mul(poly_mul(p, r), s) == poly_mul(p, poly_mul(r, s)));
        if (!r.is_zero()) {
            auto back = poly_divexact(poly_mul(p, r), r);
            REQUIRE(back.has_value());
            CHECK(*back == p);
        }
    }
}

TEST_CASE("expand_quotient agrees with compute-then-divide") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<long long> entry(1, 20);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<long long> a, b;
        for (int i = size(rng); i > 0; --i) a.push_back(entry(rng));
        for (int i = size(rng); i > 0; --i) b.push_back(entry(rng));
        QuotientSpec spec = QuotientSpec::make(a, b);
        IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
        for (long long v : spec.a) num = poly_mul(num, IntPoly::one_minus_q_pow(v));
        for (long long v : spec.b) den = poly_mul(den, IntPoly::one_minus_q_pow(v));
        auto direct = poly_divexact(num, den);
        auto fused = expand_quotient(spec);
        CHECK(direct.has_value() == fused.has_value());
        if (direct) CHECK(*direct == *fused);
    }
}

TEST_CASE("identical multisets cancel to 1") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size(0, 5);
    std::uniform_int_distribution<long long> entry(1, 50);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long long> a;
        for (int i = size(rng); i > 0; --i) a.push_back(entry(rng));
        QuotientSpec spec = QuotientSpec::make(a, a);
        CHECK(*expand_quotient(spec) == IntPoly::constant(1));
    }
}
