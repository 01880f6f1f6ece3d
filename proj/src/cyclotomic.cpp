#include "cgf/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace cgf {

FactorProfile factor_profile(long long n) {
    if (n < 1) throw std::invalid_argument("factor_profile: n must be >= 1");
    FactorProfile fp;
    fp.n = n;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            fp.prime_factors.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) fp.prime_factors.push_back(m);
    fp.omega = static_cast<int>(fp.prime_factors.size());
    fp.radical = 1;
    for (long long p : fp.prime_factors) fp.radical *= p;
    return fp;
}

int omega(long long n) { return factor_profile(n).omega; }
long long radical(long long n) { return factor_profile(n).radical; }

std::vector<long long> divisors_of(long long n) {
    if (n < 1) throw std::invalid_argument("divisors_of: n must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

namespace {

// Substitute q -> q^s.
IntPoly inflate(const IntPoly& p, long long s) {
    if (s == 1 || p.is_zero()) return p;
    std::vector<BigInt> out(static_cast<std::size_t>(p.degree()) * s + 1, BigInt(0));
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k * s] = p.coeffs()[k];
    return IntPoly{std::move(out)};
}

// Phi_m for squarefree m with prime factors ps: repeatedly apply
// Phi_{mp}(q) = Phi_m(q^p) / Phi_m(q) for p not dividing m.
IntPoly cyclotomic_squarefree(const std::vector<long long>& ps) {
    IntPoly f = IntPoly{std::vector<BigInt>{-1, 1}};  // Phi_1 = q - 1
    for (long long p : ps) {
        auto quo = poly_divexact(inflate(f, p), f);
        f = std::move(*quo);  // always exact
    }
    return f;
}

std::mutex g_cyclo_mutex;
std::map<long long, IntPoly> g_cyclo_cache;  // node-stable; entries never removed

}  // namespace

const IntPoly& cyclotomic_poly(long long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cyclo_mutex);
        auto it = g_cyclo_cache.find(n);
        if (it != g_cyclo_cache.end()) return it->second;
    }
    FactorProfile fp = factor_profile(n);
    IntPoly result = cyclotomic_squarefree(fp.prime_factors);
    if (fp.radical != n) result = inflate(result, n / fp.radical);  // Phi_n(q) = Phi_rad(q^{n/rad})
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    return g_cyclo_cache.emplace(n, std::move(result)).first->second;
}

DivisorMultiset divisor_multiset(const std::vector<long long>& M) {
    DivisorMultiset out;
    for (long long m : M) {
        auto ds = divisors_of(m);
        out.insert(out.end(), ds.begin(), ds.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<DivisorMultiset> polynomiality_delta(const QuotientSpec& spec) {
    if (spec.a.size() < spec.b.size())
        throw std::invalid_argument("polynomiality_delta: requires #A >= #B");
    DivisorMultiset da = divisor_multiset(spec.a);
    DivisorMultiset db = divisor_multiset(spec.b);
    if (db.size() > da.size()) return std::nullopt;
    DivisorMultiset delta;
    delta.reserve(da.size() - db.size());
    // Multiset difference over two sorted runs; any unmatched b-divisor means
    // the quotient is not a polynomial.
    std::size_t i = 0;
    for (long long d : db) {
        while (i < da.size() && da[i] < d) delta.push_back(da[i++]);
        if (i == da.size() || da[i] != d) return std::nullopt;
        ++i;
    }
    delta.insert(delta.end(), da.begin() + i, da.end());
    return delta;
}

IntPoly CGFForm::expand() const {
    IntPoly p = IntPoly::monomial(sign > 0 ? alpha : -alpha, static_cast<std::size_t>(beta));
    for (long long i = 0; i < phi1_multiplicity; ++i)
        p = poly_mul(p, IntPoly{std::vector<BigInt>{-1, 1}});
    for (long long d : cyclo_indices) p = poly_mul(p, cyclotomic_poly(d));
    return p;
}

namespace {

// Euler phi for 1..limit via the standard multiplicative sieve.
std::vector<uint32_t> phi_sieve(std::size_t limit) {
    std::vector<uint32_t> phi(limit + 1);
    for (std::size_t i = 0; i <= limit; ++i) phi[i] = static_cast<uint32_t>(i);
    for (std::size_t p = 2; p <= limit; ++p) {
        if (phi[p] == p) {  // p prime
            for (std::size_t m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
        }
    }
    return phi;
}

}  // namespace

std::optional<CGFForm> cgf_form(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cgf_form: zero polynomial");
    for (const BigInt& c : p.coeffs())
        if (c < 0) throw std::invalid_argument("cgf_form: negative coefficient");

    CGFForm form;
    std::size_t beta = 0;
    while (p.coeff(beta) == 0) ++beta;
    form.beta = static_cast<long long>(beta);
    IntPoly rest{std::vector<BigInt>(p.coeffs().begin() + beta, p.coeffs().end())};

    // Candidate indices: phi(d) <= deg(rest) forces d <= 2*deg^2 (phi(d) >=
    // sqrt(d/2)). The sieve bounds the supported input degree.
    const long long deg = rest.degree();
    if (deg > 4096) throw std::invalid_argument("cgf_form: degree too large (max 4096)");
    if (deg > 0) {
        const std::size_t bound = static_cast<std::size_t>(2 * deg * deg + 1);
        auto phi = phi_sieve(bound);
        for (std::size_t d = bound; d >= 2; --d) {
            if (phi[d] > static_cast<std::size_t>(rest.degree())) continue;
            const IntPoly& cyc = cyclotomic_poly(static_cast<long long>(d));
            while (true) {
                auto quo = poly_divexact(rest, cyc);
                if (!quo) break;
                form.cyclo_indices.push_back(static_cast<long long>(d));
                rest = std::move(*quo);
            }
            if (rest.degree() == 0) break;
        }
    }
    if (rest.degree() != 0) return std::nullopt;  // non-cyclotomic factor remains
    form.alpha = rest.coeff(0);
    if (form.alpha < 0) {  // unreachable for non-negative inputs; kept for exactness
        form.sign = -1;
        form.alpha = -form.alpha;
    }
    std::sort(form.cyclo_indices.begin(), form.cyclo_indices.end());
    return form;
}

}  // namespace cgf
