#pragma once

// Independent test oracles: deliberately brute-force and kept apart from the
// library implementations they check.

#include "cgf/certify.hpp"
#include "cgf/poly.hpp"

#include <optional>
#include <random>
#include <vector>

namespace cgf::test {

// Reachability table for <gens> up to `limit` (inclusive) by plain DP.
std::vector<char> reachable_table(const std::vector<long long>& gens, long long limit);

// Frobenius number by DP over 0..min*max (requires gcd 1).
long long frobenius_by_dp(const std::vector<long long>& gens);

// Membership by bounded enumeration of non-negative combinations.
bool member_by_enumeration(const std::vector<long long>& gens, long long x);

// The subset condition checked over all 2^n index subsets, no pruning.
// Returns nullopt when every inequality holds, else a failing index set.
std::optional<std::vector<std::size_t>> hsop_naive_failure(const std::vector<long long>& A,
                                                           const std::vector<long long>& B);

// Gaussian binomial by the lattice-path recurrence
// B(n,k) = B(n-1,k-1) + q^k B(n-1,k); no division, no cyclotomics.
IntPoly gaussian_binomial_by_paths(int n, int k);

// Random multiset of `size` values in [1, max_value].
std::vector<long long> random_multiset(std::mt19937& rng, int size, long long max_value);

// Random spec with #A == #B <= max_size, entries <= max_value, filtered to
// polynomial instances: mixes rejection sampling with constructed multiples.
QuotientSpec random_polynomial_spec(std::mt19937& rng, int max_size, long long max_value);

}  // namespace cgf::test
