#include "cgf/certify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

namespace cgf {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        default: return "undetermined";
    }
}

std::string certificate_kind(const Certificate& cert) {
    struct Visitor {
        std::string operator()(const NotPolynomial&) const { return "NotPolynomial"; }
        std::string operator()(const HsopHolds&) const { return "HsopHolds"; }
        std::string operator()(const HsopFails&) const { return "HsopFails"; }
        std::string operator()(const SelmerFastPath&) const { return "SelmerFastPath"; }
        std::string operator()(const LatticePkJoin&) const { return "LatticePkJoin"; }
        std::string operator()(const LatticeOmega&) const { return "LatticeOmega"; }
        std::string operator()(const DivisibilityBijection&) const { return "DivisibilityBijection"; }
        std::string operator()(const FlatnessLocal&) const { return "FlatnessLocal"; }
        std::string operator()(const OracleNonNegative&) const { return "OracleNonNegative"; }
        std::string operator()(const OracleNegative&) const { return "OracleNegative"; }
        std::string operator()(const PolyaMultiplier&) const { return "PolyaMultiplier"; }
    };
    return std::visit(Visitor{}, cert);
}

bool certificate_sufficient_for_nonneg(const Certificate& cert) {
    if (std::holds_alternative<SelmerFastPath>(cert) || std::holds_alternative<HsopHolds>(cert) ||
        std::holds_alternative<DivisibilityBijection>(cert) ||
        std::holds_alternative<LatticePkJoin>(cert) || std::holds_alternative<OracleNonNegative>(cert))
        return true;
    if (const auto* lo = std::get_if<LatticeOmega>(&cert)) return lo->mode == OmegaMode::NonNeg;
    return false;
}

std::vector<long long> PkJoinBlock::elements() const {
    long long pk = 1;
    for (long long i = 0; i < k; ++i) pk *= p;
    std::vector<long long> out;
    for (long long dd : divisors_of(d)) out.push_back(pk * dd);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct DistinctValues {
    std::vector<long long> values;  // sorted distinct values of B
    std::vector<long long> mult;    // multiplicities
};

DistinctValues distinct_of(const std::vector<long long>& B) {
    DistinctValues dv;
    std::vector<long long> sorted = B;
    std::sort(sorted.begin(), sorted.end());
    for (long long v : sorted) {
        if (!dv.values.empty() && dv.values.back() == v) {
            ++dv.mult.back();
        } else {
            dv.values.push_back(v);
            dv.mult.push_back(1);
        }
    }
    return dv;
}

// Shared subset sweep for hsop_test / hall_condition_subcritical.
// required(index_count) gives the lower bound the representable count must
// meet for the maximal index set of each value subset.
template <typename Required>
std::optional<HsopFails> subset_sweep(const std::vector<long long>& A,
                                      const DistinctValues& dv, Required required) {
    const std::size_t t = dv.values.size();
    std::vector<long long> subset;
    subset.reserve(t);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << t); ++mask) {
        subset.clear();
        long long index_count = 0;
        for (std::size_t i = 0; i < t; ++i) {
            if (mask >> i & 1) {
                subset.push_back(dv.values[i]);
                index_count += dv.mult[i];
            }
        }
        GeneratorSet S(subset);
        long long rep = count_representable(A, S);
        if (rep < required(index_count))
            return HsopFails{subset, index_count, rep};
    }
    return std::nullopt;
}

}  // namespace

Certificate hsop_test(const std::vector<long long>& A, const std::vector<long long>& B) {
    if (A.size() != B.size()) throw std::invalid_argument("hsop_test: #A != #B");
    if (A.empty()) throw std::invalid_argument("hsop_test: empty multisets");
    DistinctValues dv = distinct_of(B);
    if (auto fail = subset_sweep(A, dv, [](long long ic) { return ic; })) return *fail;
    return HsopHolds{(1LL << dv.values.size())};
}

bool hall_condition_subcritical(const std::vector<long long>& A,
                                const std::vector<long long>& B) {
    if (A.size() >= B.size())
        throw std::invalid_argument("hall_condition_subcritical: requires #A < #B");
    for (long long a : A)
        for (long long b : B)
            if (a == b)
                throw HallHypothesisError("hall_condition_subcritical: a_i = b_j = " +
                                          std::to_string(a) + " (linear cone)");
    // Every (n-1)-subset of B must have gcd 1.
    const std::size_t n = B.size();
    std::vector<long long> prefix(n + 1, 0), suffix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = std::gcd(prefix[i], B[i]);
    for (std::size_t i = n; i-- > 0;) suffix[i] = std::gcd(suffix[i + 1], B[i]);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::gcd(prefix[i], suffix[i + 1]) != 1)
            throw HallHypothesisError(
                "hall_condition_subcritical: dropping b_" + std::to_string(i + 1) +
                " leaves gcd " + std::to_string(std::gcd(prefix[i], suffix[i + 1])));
    }
    const long long m = static_cast<long long>(A.size());
    DistinctValues dv = distinct_of(B);
    auto fail = subset_sweep(A, dv, [m](long long ic) { return std::min(m, ic); });
    return !fail.has_value();
}

std::optional<SelmerFastPath> selmer_fast_path(const QuotientSpec& spec) {
    const std::size_t n = spec.a.size();
    if (n != spec.b.size()) throw std::invalid_argument("selmer_fast_path: #A != #B");
    if (n == 0) return std::nullopt;
    if (!polynomiality_delta(spec)) return std::nullopt;
    if (n == 1) return SelmerFastPath{-1, spec.a.front()};  // divisibility case
    const long long bound = 2 * spec.b[n - 1] * (spec.b[n - 2] / 2) - spec.b[0];
    if (bound < spec.a.front()) return SelmerFastPath{bound, spec.a.front()};
    return std::nullopt;
}

namespace {

bool try_match(std::size_t j, const std::vector<std::vector<std::size_t>>& adj,
               std::vector<bool>& visited, std::vector<long long>& owner) {
    for (std::size_t i : adj[j]) {
        if (visited[i]) continue;
        visited[i] = true;
        if (owner[i] < 0 || try_match(static_cast<std::size_t>(owner[i]), adj, visited, owner)) {
            owner[i] = static_cast<long long>(j);
            return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> bijection_criterion(
    const std::vector<long long>& A, const std::vector<long long>& B) {
    if (A.size() != B.size()) throw std::invalid_argument("bijection_criterion: #A != #B");
    const std::size_t n = A.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (A[i] % B[j] == 0) adj[j].push_back(i);
    std::vector<long long> owner(n, -1);  // owner[i] = matched B index
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<bool> visited(n, false);
        if (!try_match(j, adj, visited, owner)) return std::nullopt;
    }
    std::vector<std::size_t> pairing(n);
    for (std::size_t i = 0; i < n; ++i)
        if (owner[i] >= 0) pairing[static_cast<std::size_t>(owner[i])] = i;
    return pairing;
}

// ---- lattice decomposition --------------------------------------------------

namespace {

// Multiset as parallel sorted-value / count arrays.
struct Pool {
    std::vector<long long> values;
    std::vector<long long> count;
    long long remaining = 0;

    explicit Pool(const DivisorMultiset& delta) {
        for (long long v : delta) {
            if (!values.empty() && values.back() == v) {
                ++count.back();
            } else {
                values.push_back(v);
                count.push_back(0);
                ++count.back();
            }
            ++remaining;
        }
    }
    long long find(long long v) const {
        auto it = std::lower_bound(values.begin(), values.end(), v);
        if (it == values.end() || *it != v) return -1;
        return it - values.begin();
    }
    bool has(long long v) const {
        long long i = find(v);
        return i >= 0 && count[static_cast<std::size_t>(i)] > 0;
    }
    void take(long long idx) { --count[static_cast<std::size_t>(idx)]; --remaining; }
    void put(long long idx) { ++count[static_cast<std::size_t>(idx)]; ++remaining; }
    // Index of the largest remaining value, or -1.
    long long top() const {
        for (std::size_t i = values.size(); i-- > 0;)
            if (count[i] > 0) return static_cast<long long>(i);
        return -1;
    }
};

struct PkJoinSearch {
    Pool pool;
    long long states = 0;
    long long cap;
    bool capped = false;
    std::vector<PkJoinBlock> blocks;

    PkJoinSearch(const DivisorMultiset& delta, long long cap) : pool(delta), cap(cap) {}

    bool run() {
        if (pool.remaining == 0) return true;
        long long ti = pool.top();
        long long x = pool.values[static_cast<std::size_t>(ti)];
        if (x == 1) return false;  // no block contains 1
        // x must be the largest element of its block, so the block is
        // determined by a prime p | x: k = v_p(x), d = x / p^k.
        FactorProfile fp = factor_profile(x);
        for (auto pit = fp.prime_factors.rbegin(); pit != fp.prime_factors.rend(); ++pit) {
            if (++states > cap) { capped = true; return false; }
            const long long p = *pit;
            long long k = 0, d = x;
            while (d % p == 0) { d /= p; ++k; }
            std::vector<long long> idx;
            bool ok = true;
            for (long long dd : divisors_of(d)) {
                long long pk = x / d;  // p^k
                long long i = pool.find(pk * dd);
                if (i < 0 || pool.count[static_cast<std::size_t>(i)] == 0) { ok = false; break; }
                pool.take(i);
                idx.push_back(i);
            }
            if (ok) {
                blocks.push_back(PkJoinBlock{p, k, d});
                if (run()) return true;
                blocks.pop_back();
            }
            for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.put(*it);
            if (capped) return false;
        }
        return false;
    }
};

struct OmegaSearch {
    Pool pool;
    long long threshold;
    long long states = 0;
    long long cap;
    bool capped = false;
    std::vector<std::vector<long long>> pairs;

    OmegaSearch(const DivisorMultiset& delta, long long threshold, long long cap)
        : pool(delta), threshold(threshold), cap(cap) {}

    // Pair every high-omega element (omega == threshold + 1) with a covering
    // partner x/p of omega <= threshold; everything left has omega <=
    // threshold and forms type-a blocks.
    bool run(const std::vector<std::size_t>& highs, std::size_t at) {
        if (at == highs.size()) return true;
        const std::size_t hi = highs[at];
        if (pool.count[hi] == 0) return run(highs, at + 1);
        const long long x = pool.values[hi];
        FactorProfile fp = factor_profile(x);
        pool.take(static_cast<long long>(hi));
        for (auto pit = fp.prime_factors.rbegin(); pit != fp.prime_factors.rend(); ++pit) {
            if (++states > cap) { capped = true; break; }
            const long long d = x / *pit;
            if (d % *pit == 0) continue;  // omega(d) stays threshold + 1
            long long di = pool.find(d);
            if (di < 0 || pool.count[static_cast<std::size_t>(di)] == 0) continue;
            pool.take(di);
            pairs.push_back({d, x});
            if (run(highs, hi == highs[at] && pool.count[hi] > 0 ? at : at + 1)) return true;
            pairs.pop_back();
            pool.put(di);
            if (capped) break;
        }
        pool.put(static_cast<long long>(hi));
        return false;
    }
};

}  // namespace

LatticeSearchResult lattice_decompose(const DivisorMultiset& delta, LatticeMode mode,
                                      long long backtrack_cap) {
    LatticeSearchResult result;
    if (!std::is_sorted(delta.begin(), delta.end()))
        throw std::invalid_argument("lattice_decompose: delta must be sorted");
    for (long long v : delta)
        if (v < 1) throw std::invalid_argument("lattice_decompose: entries must be >= 1");

    if (mode == LatticeMode::NonNegPkJoin) {
        PkJoinSearch search(delta, backtrack_cap);
        if (search.run()) {
            std::sort(search.blocks.begin(), search.blocks.end(),
                      [](const PkJoinBlock& l, const PkJoinBlock& r) {
                          return l.elements().front() < r.elements().front();
                      });
            result.decomposition = LatticeDecomposition{mode, std::move(search.blocks), {}};
        }
        result.exhausted = !search.capped;
        return result;
    }

    const long long threshold = mode == LatticeMode::NonNegOmega ? 1 : 2;
    Pool probe(delta);
    std::vector<std::size_t> highs;
    for (std::size_t i = probe.values.size(); i-- > 0;) {
        int om = omega(probe.values[i]);
        if (om > threshold + 1) return result;  // cannot sit in any block shape
        if (om == threshold + 1) {
            for (long long c = 0; c < probe.count[i]; ++c) highs.push_back(i);
        }
    }
    OmegaSearch search(delta, threshold, backtrack_cap);
    if (search.run(highs, 0)) {
        std::vector<std::vector<long long>> blocks = std::move(search.pairs);
        // Left-over low-omega values: one collective type-a block per
        // multiplicity layer in NonNeg mode, singletons in Flat mode (products
        // of several flat polynomials need not stay flat).
        if (mode == LatticeMode::NonNegOmega) {
            for (long long layer = 0;; ++layer) {
                std::vector<long long> block;
                for (std::size_t i = 0; i < search.pool.values.size(); ++i)
                    if (search.pool.count[i] > layer) block.push_back(search.pool.values[i]);
                if (block.empty()) break;
                blocks.push_back(std::move(block));
            }
        } else {
            for (std::size_t i = 0; i < search.pool.values.size(); ++i)
                for (long long c = 0; c < search.pool.count[i]; ++c)
                    blocks.push_back({search.pool.values[i]});
        }
        std::sort(blocks.begin(), blocks.end());
        result.decomposition = LatticeDecomposition{mode, {}, std::move(blocks)};
    }
    result.exhausted = !search.capped;
    return result;
}

std::optional<long long> polya_multiplier(const IntPoly& p, long long k_max) {
    if (p.is_zero()) throw std::invalid_argument("polya_multiplier: zero polynomial");
    // The lowest non-zero coefficient survives multiplication by (1+q)^k.
    for (const BigInt& c : p.coeffs()) {
        if (c > 0) break;
        if (c < 0) return std::nullopt;
    }
    std::vector<BigInt> c = p.coeffs();
    for (long long k = 0; k <= k_max; ++k) {
        bool ok = true;
        for (const BigInt& v : c)
            if (v < 0) { ok = false; break; }
        if (ok) return k;
        c.push_back(BigInt(0));
        for (std::size_t i = c.size(); i-- > 1;) c[i] += c[i - 1];
    }
    return std::nullopt;
}

// ---- cascade ----------------------------------------------------------------

namespace {

struct StageClock {
    std::vector<StageTiming>& timings;
    std::string stage;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~StageClock() {
        timings.push_back(
            {stage, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                        .count()});
    }
};

}  // namespace

CertificateReport certify_nonnegativity(const QuotientSpec& spec, const CertifyConfig& config) {
    CertificateReport report;
    report.spec = spec;

    {
        StageClock clock{report.timings, "polynomiality"};
        if (spec.a.size() >= spec.b.size()) report.delta = polynomiality_delta(spec);
        report.polynomial = report.delta.has_value();
        if (!report.polynomial) report.certificates.push_back(NotPolynomial{});
    }

    const bool sizes_match = spec.a.size() == spec.b.size();
    if (report.polynomial) {
        if (config.run_bijection) {
            if (sizes_match) {
                StageClock clock{report.timings, "bijection"};
                if (auto pairing = bijection_criterion(spec.a, spec.b))
                    report.certificates.push_back(DivisibilityBijection{std::move(*pairing)});
            } else {
                report.skipped_stages.push_back("bijection (sizes differ)");
            }
        }
        if (config.run_selmer) {
            if (sizes_match) {
                StageClock clock{report.timings, "selmer_fast_path"};
                if (auto cert = selmer_fast_path(spec)) report.certificates.push_back(*cert);
            } else {
                report.skipped_stages.push_back("selmer_fast_path (sizes differ)");
            }
        }
        if (config.run_lattice) {
            StageClock clock{report.timings, "lattice"};
            auto pk = lattice_decompose(*report.delta, LatticeMode::NonNegPkJoin,
                                        config.lattice_backtrack_cap);
            if (pk.decomposition)
                report.certificates.push_back(LatticePkJoin{std::move(pk.decomposition->pk_blocks)});
            auto om = lattice_decompose(*report.delta, LatticeMode::NonNegOmega,
                                        config.lattice_backtrack_cap);
            if (om.decomposition)
                report.certificates.push_back(
                    LatticeOmega{std::move(om.decomposition->omega_blocks), OmegaMode::NonNeg});
        }
        if (config.run_hsop) {
            if (!sizes_match) {
                report.skipped_stages.push_back("hsop (sizes differ)");
            } else if (spec.a.empty()) {
                report.skipped_stages.push_back("hsop (empty spec)");
            } else {
                const long long distinct =
                    static_cast<long long>(distinct_of(spec.b).values.size());
                if (distinct > config.hsop_distinct_cap) {
                    report.skipped_stages.push_back(
                        "hsop (" + std::to_string(distinct) + " distinct values > cap " +
                        std::to_string(config.hsop_distinct_cap) + ")");
                } else {
                    StageClock clock{report.timings, "hsop"};
                    report.certificates.push_back(hsop_test(spec.a, spec.b));
                }
            }
        }
    }

    if (config.run_oracle) {
        StageClock clock{report.timings, "oracle"};
        auto expansion = expand_quotient(spec, config.degree_cap);
        if (expansion.has_value() != report.polynomial)
            throw std::logic_error("polynomiality test disagrees with exact division");
        if (expansion) {
            BigInt lo = min_coefficient(*expansion);
            if (lo >= 0) {
                report.certificates.push_back(OracleNonNegative{lo});
                report.nonnegative = Verdict::True;
            } else {
                long long ex = 0;
                while (expansion->coeff(static_cast<std::size_t>(ex)) >= 0) ++ex;
                report.certificates.push_back(
                    OracleNegative{ex, expansion->coeff(static_cast<std::size_t>(ex))});
                report.nonnegative = Verdict::False;
            }
            report.expansion = std::move(expansion);
        }
    } else {
        report.skipped_stages.push_back("oracle (disabled)");
        for (const Certificate& cert : report.certificates)
            if (certificate_sufficient_for_nonneg(cert)) report.nonnegative = Verdict::True;
    }
    return report;
}

// ---- verification -------------------------------------------------------------

namespace {

IntPoly block_product(const std::vector<long long>& block) {
    IntPoly p = IntPoly::constant(1);
    for (long long d : block) p = poly_mul(p, cyclotomic_poly(d));
    return p;
}

bool multiset_equal_to_delta(const QuotientSpec& spec,
                             std::vector<long long> combined) {
    auto delta = polynomiality_delta(spec);
    if (!delta) return false;
    std::sort(combined.begin(), combined.end());
    return combined == *delta;
}

struct Verifier {
    const QuotientSpec& spec;
    long long degree_cap;

    bool operator()(const NotPolynomial&) const {
        if (spec.a.size() < spec.b.size()) return true;
        return !polynomiality_delta(spec).has_value();
    }

    bool operator()(const HsopHolds&) const {
        // The positive claim has no smaller witness; re-check every subset.
        if (spec.a.size() != spec.b.size() || spec.a.empty()) return false;
        return std::holds_alternative<HsopHolds>(hsop_test(spec.a, spec.b));
    }

    bool operator()(const HsopFails& cert) const {
        if (spec.a.size() != spec.b.size()) return false;
        if (cert.witness_values.empty()) return false;
        long long index_count = 0;
        for (long long b : spec.b)
            if (std::find(cert.witness_values.begin(), cert.witness_values.end(), b) !=
                cert.witness_values.end())
                ++index_count;
        for (long long v : cert.witness_values)
            if (std::find(spec.b.begin(), spec.b.end(), v) == spec.b.end()) return false;
        if (index_count != cert.index_count) return false;
        GeneratorSet S(cert.witness_values);
        long long rep = count_representable(spec.a, S);
        return rep == cert.representable && rep < index_count;
    }

    bool operator()(const SelmerFastPath& cert) const {
        const std::size_t n = spec.a.size();
        if (n != spec.b.size() || n == 0) return false;
        if (!polynomiality_delta(spec).has_value()) return false;
        if (cert.a1 != spec.a.front()) return false;
        if (n == 1) return cert.bound == -1;
        const long long bound = 2 * spec.b[n - 1] * (spec.b[n - 2] / 2) - spec.b[0];
        return bound == cert.bound && bound < spec.a.front();
    }

    bool operator()(const LatticePkJoin& cert) const {
        std::vector<long long> combined;
        for (const PkJoinBlock& blk : cert.blocks) {
            if (blk.k < 1 || blk.p < 2 || blk.d < 1) return false;
            if (factor_profile(blk.p).prime_factors != std::vector<long long>{blk.p})
                return false;  // p must be prime
            if (blk.d % blk.p == 0) return false;
            auto elems = blk.elements();
            combined.insert(combined.end(), elems.begin(), elems.end());
            if (min_coefficient(block_product(elems)) < 0) return false;
        }
        return multiset_equal_to_delta(spec, std::move(combined));
    }

    bool omega_blocks_ok(const std::vector<std::vector<long long>>& blocks,
                         long long threshold, bool require_flat) const {
        std::vector<long long> combined;
        for (const auto& block : blocks) {
            if (block.empty()) return false;
            combined.insert(combined.end(), block.begin(), block.end());
            bool type_a = true;
            for (long long d : block)
                if (omega(d) > threshold) type_a = false;
            if (!type_a) {
                if (block.size() != 2) return false;
                long long lo = std::min(block[0], block[1]), hi = std::max(block[0], block[1]);
                if (omega(lo) > threshold) return false;
                if (hi % lo != 0) return false;
                long long ratio = hi / lo;
                if (factor_profile(ratio).prime_factors != std::vector<long long>{ratio})
                    return false;  // covering pair means a single prime step
            }
            IntPoly prod = block_product(block);
            if (require_flat ? !is_flat(prod) : min_coefficient(prod) < 0) return false;
        }
        return multiset_equal_to_delta(spec, std::move(combined));
    }

    bool operator()(const LatticeOmega& cert) const {
        const long long threshold = cert.mode == OmegaMode::NonNeg ? 1 : 2;
        return omega_blocks_ok(cert.blocks, threshold, cert.mode == OmegaMode::Flat);
    }

    bool operator()(const FlatnessLocal& cert) const {
        return omega_blocks_ok(cert.blocks, 2, true);
    }

    bool operator()(const DivisibilityBijection& cert) const {
        const std::size_t n = spec.a.size();
        if (n != spec.b.size() || cert.pairing.size() != n) return false;
        std::vector<bool> used(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t i = cert.pairing[j];
            if (i >= n || used[i]) return false;
            used[i] = true;
            if (spec.a[i] % spec.b[j] != 0) return false;
        }
        return true;
    }

    bool operator()(const OracleNonNegative& cert) const {
        auto expansion = expand_quotient(spec, degree_cap);
        return expansion && min_coefficient(*expansion) == cert.min_coeff && cert.min_coeff >= 0;
    }

    bool operator()(const OracleNegative& cert) const {
        auto expansion = expand_quotient(spec, degree_cap);
        if (!expansion || cert.value >= 0) return false;
        for (long long k = 0; k < cert.exponent; ++k)
            if (expansion->coeff(static_cast<std::size_t>(k)) < 0) return false;
        return expansion->coeff(static_cast<std::size_t>(cert.exponent)) == cert.value;
    }

    bool operator()(const PolyaMultiplier& cert) const {
        auto expansion = expand_quotient(spec, degree_cap);
        if (!expansion || expansion->is_zero() || cert.k < 0) return false;
        IntPoly one_plus_q{std::vector<BigInt>{1, 1}};
        IntPoly cur = *expansion;
        for (long long i = 0; i < cert.k - 1; ++i) cur = poly_mul(cur, one_plus_q);
        if (cert.k > 0) {
            if (min_coefficient(cur) >= 0) return false;  // k not minimal
            cur = poly_mul(cur, one_plus_q);
        }
        return min_coefficient(cur) >= 0;
    }
};

}  // namespace

bool verify_certificate(const QuotientSpec& spec, const Certificate& cert, long long degree_cap) {
    return std::visit(Verifier{spec, degree_cap}, cert);
}

}  // namespace cgf
