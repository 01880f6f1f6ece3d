#include "support/oracles.hpp"

#include "cgf/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace cgf::test {

std::vector<char> reachable_table(const std::vector<long long>& gens, long long limit) {
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    reach[0] = 1;
    for (long long g : gens)
        for (long long v = g; v <= limit; ++v)
            if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = 1;
    return reach;
}

long long frobenius_by_dp(const std::vector<long long>& gens) {
    const long long lo = *std::min_element(gens.begin(), gens.end());
    const long long hi = *std::max_element(gens.begin(), gens.end());
    const long long limit = lo * hi;  // exceeds every gap when gcd = 1
    auto reach = reachable_table(gens, limit);
    long long frob = -1;
    for (long long v = 0; v <= limit; ++v)
        if (!reach[static_cast<std::size_t>(v)]) frob = v;
    return frob;
}

bool member_by_enumeration(const std::vector<long long>& gens, long long x) {
    if (x < 0) return false;
    return reachable_table(gens, x)[static_cast<std::size_t>(x)];
}

std::optional<std::vector<std::size_t>> hsop_naive_failure(const std::vector<long long>& A,
                                                           const std::vector<long long>& B) {
    const std::size_t n = B.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<long long> values;
        std::vector<std::size_t> indices;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                values.push_back(B[i]);
                indices.push_back(i);
            }
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        const long long limit = *std::max_element(A.begin(), A.end());
        auto reach = reachable_table(values, limit);
        long long count = 0;
        for (long long a : A)
            if (reach[static_cast<std::size_t>(a)]) ++count;
        if (count < static_cast<long long>(indices.size())) return indices;
    }
    return std::nullopt;
}

IntPoly gaussian_binomial_by_paths(int n, int k) {
    // row[j] holds B(i, j) while i sweeps 0..n.
    std::vector<IntPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = IntPoly::constant(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            IntPoly step = poly_mul(IntPoly::monomial(1, static_cast<std::size_t>(j)),
                                    row[static_cast<std::size_t>(j)]);
            if (j == i) step = IntPoly{};  // B(i-1, i) = 0
            IntPoly diag = row[static_cast<std::size_t>(j - 1)];
            std::vector<BigInt> sum(std::max(diag.coeffs().size(), step.coeffs().size()),
                                    BigInt(0));
            for (std::size_t t = 0; t < diag.coeffs().size(); ++t) sum[t] += diag.coeffs()[t];
            for (std::size_t t = 0; t < step.coeffs().size(); ++t) sum[t] += step.coeffs()[t];
            row[static_cast<std::size_t>(j)] = IntPoly{std::move(sum)};
        }
    }
    return row[static_cast<std::size_t>(k)];
}

std::vector<long long> random_multiset(std::mt19937& rng, int size, long long max_value) {
    std::uniform_int_distribution<long long> dist(1, max_value);
    std::vector<long long> out;
    for (int i = 0; i < size; ++i) out.push_back(dist(rng));
    std::sort(out.begin(), out.end());
    return out;
}

QuotientSpec random_polynomial_spec(std::mt19937& rng, int max_size, long long max_value) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        const int n = size_dist(rng);
        if (coin(rng)) {
            // Uniform rejection sampling.
            for (int attempt = 0; attempt < 64; ++attempt) {
                auto a = random_multiset(rng, n, max_value);
                auto b = random_multiset(rng, n, max_value);
                QuotientSpec spec = QuotientSpec::make(a, b);
                if (polynomiality_delta(spec)) return spec;
            }
        } else {
            // Multiples b_i | a_i guarantee polynomiality; shuffle to hide
            // the pairing from the criteria under test.
            std::vector<long long> a, b;
            for (int i = 0; i < n; ++i) {
                std::uniform_int_distribution<long long> bd(1, std::max<long long>(1, max_value / 2));
                long long bv = bd(rng);
                std::uniform_int_distribution<long long> mult(1, std::max<long long>(1, max_value / bv));
                a.push_back(bv * mult(rng));
                b.push_back(bv);
            }
            return QuotientSpec::make(std::move(a), std::move(b));
        }
    }
}

}  // namespace cgf::test
