#pragma once

#include "cgf/poly.hpp"

#include <optional>
#include <vector>

namespace cgf {

// Prime structure of n: P(n), omega(n) = #P(n), rad(n) = prod P(n).
struct FactorProfile {
    long long n = 1;
    std::vector<long long> prime_factors;  // sorted ascending
    int omega = 0;
    long long radical = 1;
};

// Trial-division factorization; n >= 1 required (in-scope n <= 1e9).
FactorProfile factor_profile(long long n);

int omega(long long n);
long long radical(long long n);

// Sorted divisors of n.
std::vector<long long> divisors_of(long long n);

// Monic cyclotomic polynomial Phi_n. Memoized; safe for concurrent callers.
const IntPoly& cyclotomic_poly(long long n);

// A multiset of positive integers, sorted ascending with multiplicities.
using DivisorMultiset = std::vector<long long>;

// Additive union of divisor sets over the entries of M.
DivisorMultiset divisor_multiset(const std::vector<long long>& M);

// The polynomiality test: when UD(b_j) is multiset-contained in UD(a_i),
// returns Delta = UD(a_i) \ UD(b_j); nullopt otherwise. Requires #A >= #B.
//
// With s = #A - #B, the quotient equals (-1)^s * prod_{d in Delta} Phi_d
// under the monic convention Phi_1 = q - 1.
std::optional<DivisorMultiset> polynomiality_delta(const QuotientSpec& spec);

// Factorization of a non-negative polynomial as sign * alpha * q^beta *
// (q-1)^phi1_multiplicity * prod Phi_d over cyclo_indices (all d >= 2).
// For valid inputs (non-negative coefficients) phi1_multiplicity is 0 and
// sign is +1; the fields exist so that re-expansion is always exact.
struct CGFForm {
    BigInt alpha;
    long long beta = 0;
    std::vector<long long> cyclo_indices;  // sorted ascending, d >= 2
    long long phi1_multiplicity = 0;
    int sign = 1;

    IntPoly expand() const;
};

// Recognizes p as a positive constant times a product of cyclotomic
// polynomials and a power of q. Rejects zero and negative-coefficient inputs;
// nullopt when p has a non-cyclotomic factor.
std::optional<CGFForm> cgf_form(const IntPoly& p);

}  // namespace cgf
