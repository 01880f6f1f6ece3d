#pragma once

#include "cgf/certify.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace cgf {

// Quotient binom(n,k)_q / binom(n,l)_q. Canonical scan region is
// 1 <= l < k <= n/2; normalize() applies the k <-> n-k, l <-> n-l symmetries.
struct GKInstance {
    long long n = 0;
    long long k = 0;
    long long l = 0;

    GKInstance normalized() const;
    std::string key() const;
};

// Quotient prod (1-q^{m+i})^{a_i} / prod (1-q^i)^{a_i}. Trailing zeros of a
// are normalized away.
struct StantonInstance {
    long long m = 0;
    std::vector<long long> a;

    StantonInstance normalized() const;
    std::string key() const;
};

// Interval spec A = [n-k+1 .. n-l], B = [l+1 .. k] (after normalization and
// cancellation of common factorial factors). Rejects parameters outside
// 0 <= l <= k <= n after normalization.
QuotientSpec gk_spec(const GKInstance& inst);

QuotientSpec stanton_spec(const StantonInstance& inst);

// 2k*floor((k-1)/2) + k - l < n: the fast path certifies the instance.
bool corollary_bound_gk(long long n, long long k, long long l);

// 2n*floor(n/2) - 2 < m, n the (normalized) length of a.
bool corollary_bound_stanton(long long m, long long n);

// a_i = a_{n+1-i} after trailing-zero normalization.
bool is_symmetric(const std::vector<long long>& a);

struct ScanRecord {
    std::string family;
    std::string key;
    bool polynomial = false;
    Verdict verdict = Verdict::Undetermined;
    std::vector<std::string> certificate_kinds;
    std::optional<BigInt> min_coeff;
    std::optional<long long> negative_exponent;  // set when verdict is false
    std::optional<BigInt> negative_value;
    bool corollary_bound = false;
    bool fast_path_fired = false;
    // Fast-path inequality holds but the corollary bound does not (slack at
    // the boundary); logged, never guessed.
    bool boundary_case = false;
    std::optional<std::string> error;
    double millis = 0;
};

struct ScanSummary {
    long long instances = 0;
    long long polynomial_count = 0;
    long long violations = 0;       // verdict false: a conjecture counterexample
    long long errors = 0;           // per-record cap or evaluation failures
    long long fast_path_count = 0;
    long long boundary_count = 0;
    // Instances where the corollary bound held for a polynomial spec but the
    // fast path did not fire; must stay zero.
    long long corollary_gaps = 0;
};

using RecordSink = std::function<void(const ScanRecord&)>;

// Scans are deterministic: records arrive in canonical instance order however
// many workers run. skip_keys (resume support) suppresses re-evaluation.
ScanSummary scan_gk(long long n_max, const CertifyConfig& config, int jobs,
                    const RecordSink& sink,
                    const std::unordered_set<std::string>* skip_keys = nullptr);

ScanSummary scan_stanton(long long n_max, long long m_max, long long a_max,
                         const CertifyConfig& config, int jobs, const RecordSink& sink,
                         const std::unordered_set<std::string>* skip_keys = nullptr);

}  // namespace cgf
