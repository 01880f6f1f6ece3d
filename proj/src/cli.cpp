#include "cgf/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cgf::cli {

using nlohmann::json;

namespace {

std::vector<long long> parse_int_list(const std::string& text, std::size_t base,
                                      std::size_t begin, std::size_t end) {
    std::vector<long long> out;
    std::size_t i = begin;
    auto skip_ws = [&] {
        while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i == end) return out;  // empty list
    while (true) {
        skip_ws();
        std::size_t tok_start = i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == tok_start) {
            std::size_t bad_end = i;
            while (bad_end < end && !std::isspace(static_cast<unsigned char>(text[bad_end])) &&
                   text[bad_end] != ',')
                ++bad_end;
            throw ParseError(base + tok_start, text.substr(tok_start, bad_end - tok_start),
                             "expected a positive integer");
        }
        std::string tok = text.substr(tok_start, i - tok_start);
        long long value = 0;
        try {
            value = std::stoll(tok);
        } catch (const std::out_of_range&) {
            throw ParseError(base + tok_start, tok, "integer out of range");
        }
        if (value < 1) throw ParseError(base + tok_start, tok, "entries must be >= 1");
        out.push_back(value);
        skip_ws();
        if (i == end) break;
        if (text[i] != ',')
            throw ParseError(base + i, std::string(1, text[i]), "expected ',' or end of list");
        ++i;
        skip_ws();
        if (i == end) throw ParseError(base + i, "", "trailing comma");
    }
    return out;
}

}  // namespace

QuotientSpec parse_spec(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) throw ParseError(text.size(), "", "missing '/' separator");
    if (text.find('/', slash + 1) != std::string::npos)
        throw ParseError(text.find('/', slash + 1), "/", "more than one '/' separator");
    auto a = parse_int_list(text, 0, 0, slash);
    auto b = parse_int_list(text, slash + 1, slash + 1, text.size());
    // Re-index the b-list positions relative to the full string.
    return QuotientSpec::make(std::move(a), std::move(b));
}

std::string render_spec(const QuotientSpec& spec) {
    std::ostringstream out;
    for (std::size_t i = 0; i < spec.a.size(); ++i) out << (i ? "," : "") << spec.a[i];
    out << "/";
    for (std::size_t i = 0; i < spec.b.size(); ++i) out << (i ? "," : "") << spec.b[i];
    return out.str();
}

namespace {

json certificate_document(const Certificate& cert) {
    json doc;
    doc["kind"] = certificate_kind(cert);
    struct Visitor {
        json& doc;
        void operator()(const NotPolynomial&) const {}
        void operator()(const HsopHolds& c) const { doc["subsets_checked"] = c.subsets_checked; }
        void operator()(const HsopFails& c) const {
            doc["witness"] = c.witness_values;
            doc["index_count"] = c.index_count;
            doc["representable"] = c.representable;
            doc["deficit"] = c.deficit();
        }
        void operator()(const SelmerFastPath& c) const {
            doc["bound"] = c.bound;
            doc["a1"] = c.a1;
        }
        void operator()(const LatticePkJoin& c) const {
            json blocks = json::array();
            for (const PkJoinBlock& b : c.blocks)
                blocks.push_back({{"p", b.p}, {"k", b.k}, {"d", b.d}});
            doc["blocks"] = std::move(blocks);
        }
        void operator()(const LatticeOmega& c) const {
            doc["mode"] = c.mode == OmegaMode::NonNeg ? "nonneg" : "flat";
            doc["blocks"] = c.blocks;
        }
        void operator()(const DivisibilityBijection& c) const { doc["pairing"] = c.pairing; }
        void operator()(const FlatnessLocal& c) const { doc["blocks"] = c.blocks; }
        void operator()(const OracleNonNegative& c) const {
            doc["min_coeff"] = c.min_coeff.str();
        }
        void operator()(const OracleNegative& c) const {
            doc["exponent"] = c.exponent;
            doc["value"] = c.value.str();
        }
        void operator()(const PolyaMultiplier& c) const { doc["k"] = c.k; }
    };
    std::visit(Visitor{doc}, cert);
    return doc;
}

Certificate certificate_from_document(const json& doc) {
    const std::string kind = doc.at("kind").get<std::string>();
    if (kind == "NotPolynomial") return NotPolynomial{};
    if (kind == "HsopHolds") return HsopHolds{doc.at("subsets_checked").get<long long>()};
    if (kind == "HsopFails")
        return HsopFails{doc.at("witness").get<std::vector<long long>>(),
                         doc.at("index_count").get<long long>(),
                         doc.at("representable").get<long long>()};
    if (kind == "SelmerFastPath")
        return SelmerFastPath{doc.at("bound").get<long long>(), doc.at("a1").get<long long>()};
    if (kind == "LatticePkJoin") {
        LatticePkJoin cert;
        for (const json& b : doc.at("blocks"))
            cert.blocks.push_back(PkJoinBlock{b.at("p").get<long long>(),
                                              b.at("k").get<long long>(),
                                              b.at("d").get<long long>()});
        return cert;
    }
    if (kind == "LatticeOmega")
        return LatticeOmega{doc.at("blocks").get<std::vector<std::vector<long long>>>(),
                            doc.at("mode").get<std::string>() == "nonneg" ? OmegaMode::NonNeg
                                                                          : OmegaMode::Flat};
    if (kind == "FlatnessLocal")
        return FlatnessLocal{doc.at("blocks").get<std::vector<std::vector<long long>>>()};
    if (kind == "DivisibilityBijection")
        return DivisibilityBijection{doc.at("pairing").get<std::vector<std::size_t>>()};
    if (kind == "OracleNonNegative")
        return OracleNonNegative{BigInt(doc.at("min_coeff").get<std::string>())};
    if (kind == "OracleNegative")
        return OracleNegative{doc.at("exponent").get<long long>(),
                              BigInt(doc.at("value").get<std::string>())};
    if (kind == "PolyaMultiplier") return PolyaMultiplier{doc.at("k").get<long long>()};
    throw std::invalid_argument("unknown certificate kind: " + kind);
}

const std::unordered_set<std::string>& known_certificate_fields(const std::string& kind) {
    static const std::unordered_set<std::string> base{"kind"};
    static const std::unordered_set<std::string> holds{"kind", "subsets_checked"};
    static const std::unordered_set<std::string> fails{"kind", "witness", "index_count",
                                                       "representable", "deficit"};
    static const std::unordered_set<std::string> selmer{"kind", "bound", "a1"};
    static const std::unordered_set<std::string> pkjoin{"kind", "blocks"};
    static const std::unordered_set<std::string> omega{"kind", "blocks", "mode"};
    static const std::unordered_set<std::string> pairing{"kind", "pairing"};
    static const std::unordered_set<std::string> nonneg{"kind", "min_coeff"};
    static const std::unordered_set<std::string> negative{"kind", "exponent", "value"};
    static const std::unordered_set<std::string> polya{"kind", "k"};
    if (kind == "NotPolynomial") return base;
    if (kind == "HsopHolds") return holds;
    if (kind == "HsopFails") return fails;
    if (kind == "SelmerFastPath") return selmer;
    if (kind == "LatticePkJoin") return pkjoin;
    if (kind == "LatticeOmega") return omega;
    if (kind == "FlatnessLocal") return pkjoin;
    if (kind == "DivisibilityBijection") return pairing;
    if (kind == "OracleNonNegative") return nonneg;
    if (kind == "OracleNegative") return negative;
    if (kind == "PolyaMultiplier") return polya;
    throw std::invalid_argument("unknown certificate kind: " + kind);
}

}  // namespace

json report_document(const CertificateReport& report, const ReportOptions& opts) {
    json doc;
    doc["schema"] = "cgf-report/1";
    doc["spec"] = {{"a", report.spec.a}, {"b", report.spec.b}};
    doc["polynomial"] = report.polynomial;
    doc["nonnegative"] = to_string(report.nonnegative);
    doc["delta"] = report.delta ? json(*report.delta) : json(nullptr);
    json certs = json::array();
    for (const Certificate& cert : report.certificates)
        certs.push_back(certificate_document(cert));
    doc["certificates"] = std::move(certs);
    doc["skipped_stages"] = report.skipped_stages;
    if (opts.include_coefficients && report.expansion) {
        json coeffs = json::array();
        for (const BigInt& c : report.expansion->coeffs()) coeffs.push_back(c.str());
        doc["coefficients"] = std::move(coeffs);
    }
    if (opts.include_timings) {
        json timings = json::array();
        for (const StageTiming& t : report.timings)
            timings.push_back(
                {{"stage", t.stage}, {"micros", static_cast<long long>(t.millis * 1000)}});
        doc["timings"] = std::move(timings);
    }
    return doc;
}

void validate_report_document(const json& doc) {
    static const std::unordered_set<std::string> top_fields{
        "schema", "spec", "polynomial", "nonnegative", "delta",
        "certificates", "skipped_stages", "coefficients", "timings"};
    if (!doc.is_object()) throw std::invalid_argument("report: not an object");
    for (const auto& [key, value] : doc.items())
        if (!top_fields.count(key)) throw std::invalid_argument("report: unknown field " + key);
    if (doc.at("schema").get<std::string>() != "cgf-report/1")
        throw std::invalid_argument("report: unsupported schema");
    for (const char* required : {"spec", "polynomial", "nonnegative", "delta", "certificates",
                                 "skipped_stages"})
        if (!doc.contains(required))
            throw std::invalid_argument(std::string("report: missing field ") + required);
    const json& spec = doc.at("spec");
    for (const auto& [key, value] : spec.items())
        if (key != "a" && key != "b")
            throw std::invalid_argument("report: unknown spec field " + key);
    const std::string verdict = doc.at("nonnegative").get<std::string>();
    if (verdict != "true" && verdict != "false" && verdict != "undetermined")
        throw std::invalid_argument("report: bad nonnegative value " + verdict);
    for (const json& cert : doc.at("certificates")) {
        const auto& known = known_certificate_fields(cert.at("kind").get<std::string>());
        for (const auto& [key, value] : cert.items())
            if (!known.count(key))
                throw std::invalid_argument("report: unknown certificate field " + key);
    }
    if (doc.contains("coefficients"))
        for (const json& c : doc.at("coefficients"))
            if (!c.is_string()) throw std::invalid_argument("report: coefficients must be strings");
}

CertificateReport report_from_document(const json& doc) {
    validate_report_document(doc);
    CertificateReport report;
    report.spec = QuotientSpec::make(doc.at("spec").at("a").get<std::vector<long long>>(),
                                     doc.at("spec").at("b").get<std::vector<long long>>());
    report.polynomial = doc.at("polynomial").get<bool>();
    const std::string verdict = doc.at("nonnegative").get<std::string>();
    report.nonnegative = verdict == "true"    ? Verdict::True
                         : verdict == "false" ? Verdict::False
                                              : Verdict::Undetermined;
    if (!doc.at("delta").is_null()) report.delta = doc.at("delta").get<DivisorMultiset>();
    for (const json& cert : doc.at("certificates"))
        report.certificates.push_back(certificate_from_document(cert));
    report.skipped_stages = doc.at("skipped_stages").get<std::vector<std::string>>();
    return report;
}

json scan_record_document(const ScanRecord& rec, bool include_timings) {
    json doc;
    doc["family"] = rec.family;
    doc["key"] = rec.key;
    doc["polynomial"] = rec.polynomial;
    doc["verdict"] = to_string(rec.verdict);
    doc["certificates"] = rec.certificate_kinds;
    if (rec.min_coeff) doc["min_coeff"] = rec.min_coeff->str();
    if (rec.negative_exponent) {
        doc["negative_exponent"] = *rec.negative_exponent;
        doc["negative_value"] = rec.negative_value->str();
    }
    doc["corollary_bound"] = rec.corollary_bound;
    doc["fast_path"] = rec.fast_path_fired;
    if (rec.boundary_case) doc["boundary_case"] = true;
    if (rec.error) doc["error"] = *rec.error;
    if (include_timings) doc["micros"] = static_cast<long long>(rec.millis * 1000);
    return doc;
}

namespace {

long long env_or(const char* name, long long fallback) {
    const char* value = std::getenv(name);
    if (!value || !*value) return fallback;
    try {
        return std::stoll(value);
    } catch (...) {
        throw std::invalid_argument(std::string("bad integer in environment variable ") + name);
    }
}

CertifyConfig config_from_env() {
    CertifyConfig config;
    config.degree_cap = env_or("CGF_DEGREE_CAP", kDefaultDegreeCap);
    config.hsop_distinct_cap = env_or("CGF_HSOP_DISTINCT_CAP", kDefaultHsopDistinctCap);
    config.lattice_backtrack_cap =
        env_or("CGF_LATTICE_BACKTRACK_CAP", kDefaultLatticeBacktrackCap);
    return config;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::True: return kExitTrue;
        case Verdict::False: return kExitFalse;
        default: return kExitUndetermined;
    }
}

std::vector<long long> parse_plain_list(const std::string& text) {
    return parse_int_list(text, 0, 0, text.size());
}

// Coefficient list for `cgf-form`, ascending exponents, possibly negative.
IntPoly parse_coeff_list(const std::string& text) {
    std::vector<BigInt> coeffs;
    std::stringstream stream(text);
    std::string tok;
    while (std::getline(stream, tok, ',')) {
        std::size_t begin = tok.find_first_not_of(" \t");
        std::size_t fin = tok.find_last_not_of(" \t");
        if (begin == std::string::npos) throw std::invalid_argument("empty coefficient");
        coeffs.emplace_back(tok.substr(begin, fin - begin + 1));
    }
    return IntPoly{std::move(coeffs)};
}

std::string coeff_line(const IntPoly& p) {
    std::ostringstream out;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i].str();
    if (c.empty()) out << "0";
    return out.str();
}

struct ScanCliOptions {
    std::string out_path;
    bool resume = false;
    bool timings = false;
    int jobs = 1;
    bool no_hsop = false;
    bool no_oracle = false;
};

int finish_scan(const ScanSummary& summary, std::ostream& out, std::ostream& err) {
    out << "scanned=" << summary.instances << " polynomial=" << summary.polynomial_count
        << " fast_path=" << summary.fast_path_count << " violations=" << summary.violations
        << " errors=" << summary.errors << " boundary=" << summary.boundary_count
        << " corollary_gaps=" << summary.corollary_gaps << "\n";
    if (summary.violations > 0) {
        err << "CONJECTURE VIOLATION: " << summary.violations
            << " instance(s) expanded with a negative coefficient\n";
        return kExitFalse;
    }
    if (summary.errors > 0) return kExitUndetermined;
    return kExitTrue;
}

// Records go to `path` (append) when given, else to `out`; resume loads keys
// already present in the file.
int run_scan(const std::function<ScanSummary(const RecordSink&,
                                             const std::unordered_set<std::string>*)>& scan,
             const ScanCliOptions& opts, std::ostream& out, std::ostream& err) {
    std::unordered_set<std::string> done;
    if (opts.resume) {
        std::ifstream in(opts.out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            try {
                done.insert(json::parse(line).at("key").get<std::string>());
            } catch (...) {
                err << "warning: skipping unparseable scan line\n";
            }
        }
    }
    std::ofstream file;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path, std::ios::app);
        if (!file) throw std::invalid_argument("cannot open " + opts.out_path);
    }
    std::ostream& records = opts.out_path.empty() ? out : file;
    RecordSink sink = [&](const ScanRecord& rec) {
        records << scan_record_document(rec, opts.timings).dump() << "\n";
        if (rec.verdict == Verdict::False)
            err << "CONJECTURE VIOLATION: " << rec.key << " negative coefficient at exponent "
                << *rec.negative_exponent << "\n";
    };
    ScanSummary summary = scan(sink, done.empty() ? nullptr : &done);
    return finish_scan(summary, out, err);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cyclotomic quotient non-negativity toolkit"};
    app.require_subcommand(1);

    CertifyConfig base = config_from_env();
    const long long polya_kmax_env = env_or("CGF_POLYA_KMAX", kDefaultPolyaKMax);

    // check
    auto* check = app.add_subcommand("check", "run the certificate cascade on a spec");
    std::string check_spec;
    ReportOptions check_opts;
    CertifyConfig check_config = base;
    bool check_no_hsop = false, check_no_oracle = false;
    check->add_option("spec", check_spec, "a1,a2,../b1,b2,..")->required();
    check->add_flag("--coefficients", check_opts.include_coefficients,
                    "include expansion coefficients in the report");
    check->add_flag("--timings", check_opts.include_timings, "include per-stage timings");
    check->add_flag("--no-hsop", check_no_hsop, "skip the subset test stage");
    check->add_flag("--no-oracle", check_no_oracle, "skip the expansion oracle stage");
    check->add_option("--degree-cap", check_config.degree_cap, "max quotient degree");
    check->add_option("--hsop-distinct-cap", check_config.hsop_distinct_cap,
                      "max distinct denominator values for the subset test");
    check->add_option("--lattice-backtrack-cap", check_config.lattice_backtrack_cap,
                      "lattice decomposition search states");

    // expand
    auto* expand = app.add_subcommand("expand", "expansion coefficients of a spec");
    std::string expand_spec;
    bool expand_json = false;
    long long expand_cap = base.degree_cap;
    expand->add_option("spec", expand_spec)->required();
    expand->add_flag("--json", expand_json, "emit a report document");
    expand->add_option("--degree-cap", expand_cap);

    // hsop
    auto* hsop = app.add_subcommand("hsop", "subset test with witness");
    std::string hsop_spec;
    long long hsop_cap = base.hsop_distinct_cap;
    hsop->add_option("spec", hsop_spec)->required();
    hsop->add_option("--hsop-distinct-cap", hsop_cap);

    // frobenius
    auto* frob = app.add_subcommand("frobenius", "semigroup queries for a generator list");
    std::string frob_list;
    frob->add_option("generators", frob_list, "g1,g2,..")->required();

    // cyclotomic
    auto* cyclo = app.add_subcommand("cyclotomic", "coefficients of Phi_n");
    long long cyclo_n = 0;
    bool cyclo_json = false;
    cyclo->add_option("n", cyclo_n)->required()->check(CLI::PositiveNumber);
    cyclo->add_flag("--json", cyclo_json);

    // polya
    auto* polya = app.add_subcommand("polya", "minimal k with (1+q)^k * p non-negative");
    std::string polya_spec;
    long long polya_cyclotomic = 0;
    long long polya_kmax = polya_kmax_env;
    long long polya_cap = base.degree_cap;
    polya->add_option("spec", polya_spec, "quotient spec a1,../b1,..");
    polya->add_option("--cyclotomic", polya_cyclotomic, "use Phi_n as the polynomial");
    polya->add_option("--k-max", polya_kmax);
    polya->add_option("--degree-cap", polya_cap);

    // cgf-form
    auto* form = app.add_subcommand("cgf-form", "cyclotomic factorization of a polynomial");
    std::string form_coeffs;
    form->add_option("coefficients", form_coeffs, "c0,c1,.. ascending exponents")->required();

    // scan-gk
    auto* scangk = app.add_subcommand("scan-gk", "scan quotients of q-binomial coefficients");
    long long gk_n_max = 0;
    ScanCliOptions gk_opts;
    CertifyConfig gk_config = base;
    scangk->add_option("--n-max", gk_n_max)->required()->check(CLI::PositiveNumber);
    scangk->add_option("--out", gk_opts.out_path, "append records to this file");
    scangk->add_flag("--resume", gk_opts.resume, "skip keys already present in --out");
    scangk->add_flag("--timings", gk_opts.timings);
    scangk->add_option("--jobs", gk_opts.jobs)->check(CLI::PositiveNumber);
    scangk->add_flag("--no-hsop", gk_opts.no_hsop);
    scangk->add_flag("--no-oracle", gk_opts.no_oracle);
    scangk->add_option("--degree-cap", gk_config.degree_cap);

    // scan-stanton
    auto* scanst = app.add_subcommand("scan-stanton", "scan fake Gaussian sequence quotients");
    long long st_n_max = 0, st_m_max = 0, st_a_max = 0;
    ScanCliOptions st_opts;
    CertifyConfig st_config = base;
    scanst->add_option("--n-max", st_n_max)->required()->check(CLI::PositiveNumber);
    scanst->add_option("--m-max", st_m_max)->required()->check(CLI::PositiveNumber);
    scanst->add_option("--a-max", st_a_max)->required()->check(CLI::PositiveNumber);
    scanst->add_option("--out", st_opts.out_path);
    scanst->add_flag("--resume", st_opts.resume);
    scanst->add_flag("--timings", st_opts.timings);
    scanst->add_option("--jobs", st_opts.jobs)->check(CLI::PositiveNumber);
    scanst->add_flag("--no-hsop", st_opts.no_hsop);
    scanst->add_flag("--no-oracle", st_opts.no_oracle);
    scanst->add_option("--degree-cap", st_config.degree_cap);

    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitTrue;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            check_config.run_hsop = !check_no_hsop;
            check_config.run_oracle = !check_no_oracle;
            CertificateReport report = certify_nonnegativity(parse_spec(check_spec), check_config);
            out << report_document(report, check_opts).dump(2) << "\n";
            return verdict_exit(report.nonnegative);
        }
        if (expand->parsed()) {
            QuotientSpec spec = parse_spec(expand_spec);
            auto p = expand_quotient(spec, expand_cap);
            if (!p) {
                err << "not a polynomial: " << render_spec(spec) << "\n";
                return kExitUndetermined;
            }
            if (expand_json) {
                CertifyConfig config = base;
                config.degree_cap = expand_cap;
                CertificateReport report = certify_nonnegativity(spec, config);
                out << report_document(report, ReportOptions{true, false}).dump(2) << "\n";
            } else {
                out << coeff_line(*p) << "\n";
            }
            return kExitTrue;
        }
        if (hsop->parsed()) {
            QuotientSpec spec = parse_spec(hsop_spec);
            if (spec.a.size() != spec.b.size() || spec.a.empty())
                throw std::invalid_argument("hsop: spec must have equal, non-empty sides");
            std::unordered_set<long long> distinct(spec.b.begin(), spec.b.end());
            if (static_cast<long long>(distinct.size()) > hsop_cap)
                throw std::invalid_argument("hsop: " + std::to_string(distinct.size()) +
                                            " distinct values exceed cap " +
                                            std::to_string(hsop_cap));
            Certificate cert = hsop_test(spec.a, spec.b);
            out << certificate_document(cert).dump(2) << "\n";
            return std::holds_alternative<HsopHolds>(cert) ? kExitTrue : kExitFalse;
        }
        if (frob->parsed()) {
            GeneratorSet S(parse_plain_list(frob_list));
            if (S.gcd() != 1)
                throw std::invalid_argument("frobenius: gcd is " + std::to_string(S.gcd()) +
                                            ", reduce the generators first");
            out << "frobenius=" << frobenius_number(S) << "\n";
            std::ostringstream ap;
            for (std::size_t i = 0; i < S.apery().size(); ++i)
                ap << (i ? "," : "") << S.apery()[i];
            out << "apery=" << ap.str() << "\n";
            if (S.gens().size() >= 2) out << "selmer_bound=" << selmer_bound(S) << "\n";
            return kExitTrue;
        }
        if (cyclo->parsed()) {
            const IntPoly& p = cyclotomic_poly(cyclo_n);
            if (cyclo_json) {
                json doc{{"n", cyclo_n},
                         {"degree", p.degree()},
                         {"coefficients", json::array()},
                         {"min_coeff", min_coefficient(p).str()},
                         {"flat", is_flat(p)}};
                for (const BigInt& c : p.coeffs()) doc["coefficients"].push_back(c.str());
                out << doc.dump(2) << "\n";
            } else {
                out << coeff_line(p) << "\n";
            }
            return kExitTrue;
        }
        if (polya->parsed()) {
            IntPoly p;
            if (polya_cyclotomic > 0) {
                p = cyclotomic_poly(polya_cyclotomic);
            } else if (!polya_spec.empty()) {
                auto expanded = expand_quotient(parse_spec(polya_spec), polya_cap);
                if (!expanded) {
                    err << "not a polynomial: " << polya_spec << "\n";
                    return kExitUndetermined;
                }
                p = std::move(*expanded);
            } else {
                throw std::invalid_argument("polya: give a spec or --cyclotomic N");
            }
            auto k = polya_multiplier(p, polya_kmax);
            if (!k) {
                out << "no multiplier k <= " << polya_kmax << "\n";
                return kExitUndetermined;
            }
            out << "k=" << *k << "\n";
            return kExitTrue;
        }
        if (form->parsed()) {
            auto result = cgf_form(parse_coeff_list(form_coeffs));
            if (!result) {
                out << "not a cyclotomic generating function\n";
                return kExitFalse;
            }
            std::ostringstream idx;
            for (std::size_t i = 0; i < result->cyclo_indices.size(); ++i)
                idx << (i ? "," : "") << result->cyclo_indices[i];
            out << "alpha=" << result->alpha.str() << "\nbeta=" << result->beta
                << "\nindices=" << idx.str() << "\n";
            return kExitTrue;
        }
        if (scangk->parsed()) {
            gk_config.run_hsop = !gk_opts.no_hsop;
            gk_config.run_oracle = !gk_opts.no_oracle;
            return run_scan(
                [&](const RecordSink& sink, const std::unordered_set<std::string>* skip) {
                    return scan_gk(gk_n_max, gk_config, gk_opts.jobs, sink, skip);
                },
                gk_opts, out, err);
        }
        if (scanst->parsed()) {
            st_config.run_hsop = !st_opts.no_hsop;
            st_config.run_oracle = !st_opts.no_oracle;
            return run_scan(
                [&](const RecordSink& sink, const std::unordered_set<std::string>* skip) {
                    return scan_stanton(st_n_max, st_m_max, st_a_max, st_config, st_opts.jobs,
                                        sink, skip);
                },
                st_opts, out, err);
        }
    } catch (const CapExceededError& e) {
        err << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cgf::cli
