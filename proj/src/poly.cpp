#include "cgf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cgf {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t exponent) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(exponent + 1, BigInt(0));
        p.coeffs_[exponent] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::one_minus_q_pow(long long e) {
    if (e < 1) throw std::invalid_argument("one_minus_q_pow: exponent must be >= 1");
    IntPoly p;
    p.coeffs_.assign(static_cast<std::size_t>(e) + 1, BigInt(0));
    p.coeffs_.front() = 1;
    p.coeffs_.back() = -1;
    return p;
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    static const BigInt zero{0};
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "q";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

QuotientSpec QuotientSpec::make(std::vector<long long> a, std::vector<long long> b) {
    for (long long v : a)
        if (v < 1) throw std::invalid_argument("QuotientSpec: numerator entry " + std::to_string(v) + " < 1");
    for (long long v : b)
        if (v < 1) throw std::invalid_argument("QuotientSpec: denominator entry " + std::to_string(v) + " < 1");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return QuotientSpec{std::move(a), std::move(b)};
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& r) {
    if (p.is_zero() || r.is_zero()) return IntPoly{};
    const auto& pc = p.coeffs();
    const auto& rc = r.coeffs();
    std::vector<BigInt> out(pc.size() + rc.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (pc[i] == 0) continue;
        for (std::size_t j = 0; j < rc.size(); ++j) {
            if (rc[j] != 0) out[i + j] += pc[i] * rc[j];
        }
    }
    return IntPoly{std::move(out)};
}

std::optional<IntPoly> poly_divexact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divexact: zero denominator");
    if (num.is_zero()) return IntPoly{};
    if (num.degree() < den.degree()) return std::nullopt;

    const auto& dc = den.coeffs();
    // Positions of the non-zero denominator coefficients below the leading
    // one; our denominators are mostly binomials, so iterate those only.
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i + 1 < dc.size(); ++i)
        if (dc[i] != 0) support.push_back(i);
    const BigInt& lead = dc.back();
    const std::size_t dden = dc.size() - 1;

    std::vector<BigInt> rem = num.coeffs();
    const std::size_t dquo = rem.size() - 1 - dden;
    std::vector<BigInt> quo(dquo + 1, BigInt(0));
    for (std::size_t k = dquo + 1; k-- > 0;) {
        BigInt& top = rem[k + dden];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        BigInt factor = top / lead;
        top = 0;
        for (std::size_t i : support) rem[k + i] -= factor * dc[i];
        quo[k] = std::move(factor);
    }
    for (const BigInt& c : rem)
        if (c != 0) return std::nullopt;
    return IntPoly{std::move(quo)};
}

namespace {

// In-place multiply of a coefficient buffer by (1 - q^e).
void mul_one_minus_q_pow(std::vector<BigInt>& c, long long e) {
    c.resize(c.size() + static_cast<std::size_t>(e), BigInt(0));
    for (std::size_t k = c.size(); k-- > static_cast<std::size_t>(e);) c[k] -= c[k - e];
}

// In-place exact division by (1 - q^e): n_k = Q_k - Q_{k-e} inverts to the
// running sum s_k = n_k + s_{k-e}; exactness <=> the top e running sums vanish.
bool div_one_minus_q_pow(std::vector<BigInt>& c, long long e) {
    if (c.size() <= static_cast<std::size_t>(e)) {
        return false;  // degree of the quotient would be negative
    }
    for (std::size_t k = static_cast<std::size_t>(e); k < c.size(); ++k) c[k] += c[k - e];
    for (std::size_t k = c.size() - static_cast<std::size_t>(e); k < c.size(); ++k)
        if (c[k] != 0) return false;
    c.resize(c.size() - static_cast<std::size_t>(e));
    return true;
}

}  // namespace

std::optional<IntPoly> expand_quotient(const QuotientSpec& spec, long long degree_cap) {
    const long long sum_a = std::accumulate(spec.a.begin(), spec.a.end(), 0LL);
    const long long sum_b = std::accumulate(spec.b.begin(), spec.b.end(), 0LL);
    if (sum_a - sum_b > degree_cap) throw CapExceededError(sum_a - sum_b, degree_cap);
    if (sum_a > degree_cap) throw CapExceededError(sum_a, degree_cap);

    std::vector<BigInt> c{BigInt(1)};
    c.reserve(static_cast<std::size_t>(sum_a) + 1);
    for (long long a : spec.a) mul_one_minus_q_pow(c, a);
    for (long long b : spec.b) {
        if (!div_one_minus_q_pow(c, b)) return std::nullopt;
    }
    return IntPoly{std::move(c)};
}

BigInt min_coefficient(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("min_coefficient: zero polynomial");
    return *std::min_element(p.coeffs().begin(), p.coeffs().end());
}

BigInt max_abs_coeff(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("max_abs_coeff: zero polynomial");
    BigInt best{0};
    for (const BigInt& c : p.coeffs()) {
        BigInt mag = abs(c);
        if (mag > best) best = mag;
    }
    return best;
}

bool is_flat(const IntPoly& p) { return max_abs_coeff(p) <= 1; }

}  // namespace cgf
