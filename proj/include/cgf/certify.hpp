#pragma once

#include "cgf/cyclotomic.hpp"
#include "cgf/poly.hpp"
#include "cgf/semigroup.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cgf {

inline constexpr long long kDefaultHsopDistinctCap = 24;
inline constexpr long long kDefaultLatticeBacktrackCap = 100'000;
inline constexpr long long kDefaultPolyaKMax = 4096;

enum class Verdict { True, False, Undetermined };
std::string to_string(Verdict v);

// ---- Certificate variants -------------------------------------------------
// Each carries enough witness data for verify_certificate to re-check the
// claim without repeating the search that produced it.

struct NotPolynomial {};

// Every subset inequality #(A cap <toset(B_I)>) >= #I verified.
struct HsopHolds {
    long long subsets_checked = 0;
};

// A value set T with #(A cap <T>) < #I_T, I_T = { i : b_i in T }.
struct HsopFails {
    std::vector<long long> witness_values;
    long long index_count = 0;
    long long representable = 0;
    long long deficit() const { return index_count - representable; }
};

// 2*b_n*floor(b_{n-1}/2) - b_1 < a_1 plus polynomiality. bound == -1 encodes
// the n == 1 case, where polynomiality alone suffices.
struct SelmerFastPath {
    long long bound = 0;
    long long a1 = 0;
};

// Block { p^k * d' : d' | d } with p prime, p not dividing d.
struct PkJoinBlock {
    long long p = 0;
    long long k = 1;
    long long d = 1;
    std::vector<long long> elements() const;
};

struct LatticePkJoin {
    std::vector<PkJoinBlock> blocks;
};

enum class OmegaMode { NonNeg, Flat };

// Blocks that are either single values of small omega or covering pairs
// {d, d*p} in the division lattice; NonNeg certifies non-negative block
// products (omega threshold 1).
struct LatticeOmega {
    std::vector<std::vector<long long>> blocks;
    OmegaMode mode = OmegaMode::NonNeg;
};

// Same block shapes with omega threshold 2; certifies per-block flatness.
struct FlatnessLocal {
    std::vector<std::vector<long long>> blocks;
};

// pairing[j] = index i into A with b_j | a_i, bijective.
struct DivisibilityBijection {
    std::vector<std::size_t> pairing;
};

struct OracleNonNegative {
    BigInt min_coeff;
};

struct OracleNegative {
    long long exponent = 0;  // first exponent with a negative coefficient
    BigInt value;
};

struct PolyaMultiplier {
    long long k = 0;
};

using Certificate =
    std::variant<NotPolynomial, HsopHolds, HsopFails, SelmerFastPath, LatticePkJoin,
                 LatticeOmega, DivisibilityBijection, FlatnessLocal, OracleNonNegative,
                 OracleNegative, PolyaMultiplier>;

std::string certificate_kind(const Certificate& cert);

// True for kinds that alone imply a non-negative expansion.
bool certificate_sufficient_for_nonneg(const Certificate& cert);

// ---- Individual criteria --------------------------------------------------

// Subset test over distinct values of B: for every I, #(A cap <toset(B_I)>)
// >= #I. It is enough to check the maximal index set of each value subset,
// so 2^#toset(B) semigroups are built. Requires #A == #B >= 1.
Certificate hsop_test(const std::vector<long long>& A, const std::vector<long long>& B);

struct HallHypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The m < n criterion: #(A cap <toset(B_I)>) >= min(m, #I) for all I.
// Hypotheses (a_i != b_j for all i,j; every (n-1)-subset of B has gcd 1) are
// checked first and violations throw HallHypothesisError.
bool hall_condition_subcritical(const std::vector<long long>& A,
                                const std::vector<long long>& B);

// Fires when the spec is a polynomial and the Selmer-type inequality holds;
// the conclusion is that every subset inequality holds and the expansion is
// non-negative. Requires #A == #B.
std::optional<SelmerFastPath> selmer_fast_path(const QuotientSpec& spec);

// Maximum bipartite matching on the divisibility graph b_j | a_i.
// Returns pairing[j] = i, or nullopt when no perfect matching exists.
std::optional<std::vector<std::size_t>> bijection_criterion(
    const std::vector<long long>& A, const std::vector<long long>& B);

enum class LatticeMode { NonNegPkJoin, NonNegOmega, FlatOmega };

struct LatticeDecomposition {
    LatticeMode mode = LatticeMode::NonNegPkJoin;
    std::vector<PkJoinBlock> pk_blocks;                // NonNegPkJoin
    std::vector<std::vector<long long>> omega_blocks;  // omega modes
};

struct LatticeSearchResult {
    std::optional<LatticeDecomposition> decomposition;
    // false when the backtrack cap stopped the search: "no decomposition
    // found" rather than "proven none exists".
    bool exhausted = true;
};

// Greedy largest-element-first partition search over the division lattice.
LatticeSearchResult lattice_decompose(const DivisorMultiset& delta, LatticeMode mode,
                                      long long backtrack_cap = kDefaultLatticeBacktrackCap);

// Minimal k <= k_max with (1+q)^k * p coefficient-wise non-negative.
std::optional<long long> polya_multiplier(const IntPoly& p,
                                          long long k_max = kDefaultPolyaKMax);

// ---- Cascade ----------------------------------------------------------------

struct CertifyConfig {
    long long degree_cap = kDefaultDegreeCap;
    long long hsop_distinct_cap = kDefaultHsopDistinctCap;
    long long lattice_backtrack_cap = kDefaultLatticeBacktrackCap;
    bool run_bijection = true;
    bool run_selmer = true;
    bool run_lattice = true;
    bool run_hsop = true;
    bool run_oracle = true;
};

struct StageTiming {
    std::string stage;
    double millis = 0;
};

struct CertificateReport {
    QuotientSpec spec;
    bool polynomial = false;
    Verdict nonnegative = Verdict::Undetermined;
    std::vector<Certificate> certificates;
    std::optional<DivisorMultiset> delta;
    std::optional<IntPoly> expansion;  // present when the oracle stage ran on a polynomial
    std::vector<std::string> skipped_stages;
    std::vector<StageTiming> timings;
};

// Runs the cascade: polynomiality -> bijection -> Selmer fast path -> lattice
// decompositions -> subset test -> expansion oracle (authoritative, last).
// Propagates CapExceededError from the oracle stage.
CertificateReport certify_nonnegativity(const QuotientSpec& spec,
                                        const CertifyConfig& config = {});

// Independent re-check of a certificate against its spec.
bool verify_certificate(const QuotientSpec& spec, const Certificate& cert,
                        long long degree_cap = kDefaultDegreeCap);

}  // namespace cgf
