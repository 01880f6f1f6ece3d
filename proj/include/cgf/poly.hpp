#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgf {

using BigInt = boost::multiprecision::cpp_int;

// Quotient degree (or numerator degree) above this is refused, never truncated.
inline constexpr long long kDefaultDegreeCap = 1'000'000;

struct CapExceededError : std::runtime_error {
    CapExceededError(long long required, long long cap)
        : std::runtime_error("degree cap exceeded: need " + std::to_string(required) +
                             " coefficients, cap is " + std::to_string(cap)),
          required_degree(required), degree_cap(cap) {}
    long long required_degree;
    long long degree_cap;
};

// Dense polynomial over the integers, coefficient index = exponent.
// Invariant: the highest stored coefficient is non-zero; the zero polynomial
// stores nothing and reports degree() == -1.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(BigInt c);
    static IntPoly monomial(BigInt c, std::size_t exponent);
    // 1 - q^e, e >= 1
    static IntPoly one_minus_q_pow(long long e);

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    const BigInt& coeff(std::size_t k) const;

    bool operator==(const IntPoly&) const = default;

    // Human-readable form like "1 - q + 2*q^3"; CLI and diagnostics only.
    std::string to_string() const;

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// A pair of multisets of positive integers defining prod(1-q^a)/prod(1-q^b).
// Entries are stored sorted ascending with multiplicities preserved.
struct QuotientSpec {
    std::vector<long long> a;
    std::vector<long long> b;

    // Sorts and validates (all entries >= 1); throws std::invalid_argument.
    static QuotientSpec make(std::vector<long long> a, std::vector<long long> b);

    bool operator==(const QuotientSpec&) const = default;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& r);

// Exact quotient when den divides num in Z[q]; nullopt when the remainder is
// non-zero or a quotient coefficient would be non-integer. Zero den is a
// caller error.
std::optional<IntPoly> poly_divexact(const IntPoly& num, const IntPoly& den);

// Full expansion of prod(1-q^a)/prod(1-q^b). nullopt when the quotient is not
// a polynomial; CapExceededError when the numerator or quotient degree exceeds
// degree_cap.
std::optional<IntPoly> expand_quotient(const QuotientSpec& spec,
                                       long long degree_cap = kDefaultDegreeCap);

// Smallest coefficient over exponents 0..deg. Rejects the zero polynomial.
BigInt min_coefficient(const IntPoly& p);

// max |coefficient|; rejects the zero polynomial.
BigInt max_abs_coeff(const IntPoly& p);

// All coefficients in {-1, 0, 1}.
bool is_flat(const IntPoly& p);

}  // namespace cgf
