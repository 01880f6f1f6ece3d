#include "cgf/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

namespace cgf {

GKInstance GKInstance::normalized() const {
    if (n < 0 || k < 0 || k > n || l < 0 || l > n)
        throw std::invalid_argument("GKInstance: need 0 <= k, l <= n");
    return GKInstance{n, std::min(k, n - k), std::min(l, n - l)};
}

std::string GKInstance::key() const {
    std::ostringstream out;
    out << "gk:n=" << n << ",k=" << k << ",l=" << l;
    return out.str();
}

StantonInstance StantonInstance::normalized() const {
    if (m < 1) throw std::invalid_argument("StantonInstance: m must be >= 1");
    for (long long v : a)
        if (v < 0) throw std::invalid_argument("StantonInstance: a_i must be >= 0");
    StantonInstance out{m, a};
    while (!out.a.empty() && out.a.back() == 0) out.a.pop_back();
    return out;
}

std::string StantonInstance::key() const {
    std::ostringstream out;
    out << "stanton:m=" << m << ",a=";
    for (std::size_t i = 0; i < a.size(); ++i) out << (i ? "." : "") << a[i];
    return out.str();
}

QuotientSpec gk_spec(const GKInstance& inst) {
    GKInstance c = inst.normalized();
    if (c.l > c.k)
        throw std::invalid_argument("gk_spec: l > k after normalization (reciprocal quotient)");
    // Cancel [1..l] u [1..n-l] against [1..k] u [1..n-k] pointwise; with
    // l <= k <= n/2 this leaves A = [n-k+1 .. n-l], B = [l+1 .. k].
    std::vector<long long> a, b;
    for (long long i = 1; i <= c.n; ++i) {
        int count = (i <= c.l) + (i <= c.n - c.l) - (i <= c.k) - (i <= c.n - c.k);
        for (; count > 0; --count) a.push_back(i);
        for (; count < 0; ++count) b.push_back(i);
    }
    return QuotientSpec::make(std::move(a), std::move(b));
}

QuotientSpec stanton_spec(const StantonInstance& inst) {
    StantonInstance c = inst.normalized();
    std::vector<long long> a, b;
    for (std::size_t i = 0; i < c.a.size(); ++i) {
        const long long idx = static_cast<long long>(i) + 1;
        for (long long rep = 0; rep < c.a[i]; ++rep) {
            a.push_back(c.m + idx);
            b.push_back(idx);
        }
    }
    return QuotientSpec::make(std::move(a), std::move(b));
}

bool corollary_bound_gk(long long n, long long k, long long l) {
    return 2 * k * ((k - 1) / 2) + k - l < n;
}

bool corollary_bound_stanton(long long m, long long n) {
    return 2 * n * (n / 2) - 2 < m;
}

bool is_symmetric(const std::vector<long long>& a) {
    std::vector<long long> v = a;
    while (!v.empty() && v.back() == 0) v.pop_back();
    for (std::size_t i = 0, j = v.size(); i < j; ++i, --j)
        if (v[i] != v[j - 1]) return false;
    return true;
}

namespace {

// The fast-path inequality of the n >= 2 case, used for boundary logging.
bool fast_path_inequality(const QuotientSpec& spec) {
    const std::size_t n = spec.b.size();
    if (n == 0 || spec.a.size() != n) return false;
    if (n == 1) return true;
    return 2 * spec.b[n - 1] * (spec.b[n - 2] / 2) - spec.b[0] < spec.a.front();
}

ScanRecord evaluate_instance(std::string family, std::string key, const QuotientSpec& spec,
                             bool corollary, const CertifyConfig& config) {
    ScanRecord rec;
    rec.family = std::move(family);
    rec.key = std::move(key);
    rec.corollary_bound = corollary;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto delta = spec.a.size() >= spec.b.size() ? polynomiality_delta(spec) : std::nullopt;
        rec.polynomial = delta.has_value();
        if (rec.polynomial) {
            CertificateReport report = certify_nonnegativity(spec, config);
            rec.verdict = report.nonnegative;
            for (const Certificate& cert : report.certificates) {
                rec.certificate_kinds.push_back(certificate_kind(cert));
                if (std::holds_alternative<SelmerFastPath>(cert)) rec.fast_path_fired = true;
                if (const auto* neg = std::get_if<OracleNegative>(&cert)) {
                    rec.negative_exponent = neg->exponent;
                    rec.negative_value = neg->value;
                }
                if (const auto* pos = std::get_if<OracleNonNegative>(&cert))
                    rec.min_coeff = pos->min_coeff;
            }
            rec.boundary_case = !rec.corollary_bound && fast_path_inequality(spec);
        }
    } catch (const CapExceededError& e) {
        rec.error = e.what();
        rec.verdict = Verdict::Undetermined;
    }
    rec.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

struct Job {
    std::string family;
    std::string key;
    QuotientSpec spec;
    bool corollary = false;
};

ScanSummary run_jobs(std::vector<Job> jobs_list, const CertifyConfig& config, int jobs,
                     const RecordSink& sink) {
    ScanSummary summary;
    std::vector<ScanRecord> records(jobs_list.size());
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        for (std::size_t i = 0; i < jobs_list.size(); ++i)
            records[i] = evaluate_instance(jobs_list[i].family, jobs_list[i].key,
                                           jobs_list[i].spec, jobs_list[i].corollary, config);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next.fetch_add(1); i < jobs_list.size();
                 i = next.fetch_add(1))
                records[i] = evaluate_instance(jobs_list[i].family, jobs_list[i].key,
                                               jobs_list[i].spec, jobs_list[i].corollary, config);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (const ScanRecord& rec : records) {
        ++summary.instances;
        if (rec.polynomial) ++summary.polynomial_count;
        if (rec.verdict == Verdict::False) ++summary.violations;
        if (rec.error) ++summary.errors;
        if (rec.fast_path_fired) ++summary.fast_path_count;
        if (rec.boundary_case) ++summary.boundary_count;
        if (rec.corollary_bound && rec.polynomial && !rec.fast_path_fired)
            ++summary.corollary_gaps;
        if (sink) sink(rec);
    }
    return summary;
}

}  // namespace

ScanSummary scan_gk(long long n_max, const CertifyConfig& config, int jobs,
                    const RecordSink& sink, const std::unordered_set<std::string>* skip_keys) {
    std::vector<Job> list;
    for (long long n = 1; n <= n_max; ++n) {
        for (long long k = 2; 2 * k <= n; ++k) {
            for (long long l = 1; l < k; ++l) {
                GKInstance inst{n, k, l};
                std::string key = inst.key();
                if (skip_keys && skip_keys->count(key)) continue;
                list.push_back(Job{"gk", std::move(key), gk_spec(inst),
                                   corollary_bound_gk(n, k, l)});
            }
        }
    }
    return run_jobs(std::move(list), config, jobs, sink);
}

ScanSummary scan_stanton(long long n_max, long long m_max, long long a_max,
                         const CertifyConfig& config, int jobs, const RecordSink& sink,
                         const std::unordered_set<std::string>* skip_keys) {
    std::vector<Job> list;
    std::vector<long long> a;
    // Sequences of each exact length (last entry non-zero), lexicographic.
    auto emit = [&](auto&& self, std::size_t len) -> void {
        if (a.size() == len) {
            if (a.back() == 0) return;
            for (long long m = 1; m <= m_max; ++m) {
                StantonInstance inst{m, a};
                std::string key = inst.key();
                if (skip_keys && skip_keys->count(key)) continue;
                list.push_back(Job{"stanton", std::move(key), stanton_spec(inst),
                                   corollary_bound_stanton(m, static_cast<long long>(len))});
            }
            return;
        }
        for (long long v = 0; v <= a_max; ++v) {
            a.push_back(v);
            self(self, len);
            a.pop_back();
        }
    };
    for (std::size_t len = 1; len <= static_cast<std::size_t>(n_max); ++len) emit(emit, len);
    return run_jobs(std::move(list), config, jobs, sink);
}

}  // namespace cgf
