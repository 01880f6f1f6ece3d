#pragma once

#include <vector>

namespace cgf {

// Generators of a numerical semigroup. Immutable after construction; the
// Apery table of the gcd-reduced set is computed eagerly so values can be
// shared freely across scan workers.
class GeneratorSet {
  public:
    // Dedupes and sorts; rejects empty input and non-positive entries.
    explicit GeneratorSet(std::vector<long long> gens);

    const std::vector<long long>& gens() const { return gens_; }
    long long gcd() const { return gcd_; }
    const std::vector<long long>& reduced() const { return reduced_; }

    // apery()[r] = least element of <reduced> congruent to r mod min(reduced).
    const std::vector<long long>& apery() const { return apery_; }

  private:
    std::vector<long long> gens_;
    long long gcd_ = 1;
    std::vector<long long> reduced_;
    std::vector<long long> apery_;
};

// x in <S>. Membership for gcd != 1 goes through the reduction
// gcd | x and x/gcd in <S/gcd>; x = 0 is always a member.
bool semigroup_contains(const GeneratorSet& S, long long x);

// Least semigroup elements per residue class mod min(S); requires gcd(S) = 1.
const std::vector<long long>& apery_set(const GeneratorSet& S);

// max { i : i not in <S> }; requires gcd(S) = 1. Equals -1 when every
// non-negative integer is representable (1 in S).
long long frobenius_number(const GeneratorSet& S);

// Classical upper bound for frobenius_number(S) from the two largest
// generators: 2 * s_{n-1} * floor(s_n / n) - s_n over the deduplicated set.
// Requires gcd(S) = 1 and #S >= 2.
long long selmer_bound(const GeneratorSet& S);

// #(A restricted to <S>), counted with multiplicity.
long long count_representable(const std::vector<long long>& A, const GeneratorSet& S);

}  // namespace cgf
