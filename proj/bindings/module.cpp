#include "cgf/cli.hpp"
#include "cgf/conjectures.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace cgf;

namespace {

py::object to_py_int(const BigInt& v) {
    const std::string s = v.str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(obj);
}

BigInt from_py_int(const py::handle& h) {
    return BigInt(py::str(h).cast<std::string>());
}

py::list poly_to_list(const IntPoly& p) {
    py::list out;
    for (const BigInt& c : p.coeffs()) out.append(to_py_int(c));
    return out;
}

IntPoly poly_from_list(const py::sequence& seq) {
    std::vector<BigInt> coeffs;
    for (const py::handle& h : seq) coeffs.push_back(from_py_int(h));
    return IntPoly{std::move(coeffs)};
}

QuotientSpec make_spec(std::vector<long long> a, std::vector<long long> b) {
    return QuotientSpec::make(std::move(a), std::move(b));
}

}  // namespace

PYBIND11_MODULE(_cgflib, m) {
    m.doc() = "exact-arithmetic tests and certificates for cyclotomic quotients";

    py::register_exception<CapExceededError>(m, "CapExceededError");

    m.def("expand", [](std::vector<long long> a, std::vector<long long> b,
                       long long degree_cap) -> py::object {
        auto p = expand_quotient(make_spec(std::move(a), std::move(b)), degree_cap);
        if (!p) return py::none();
        return poly_to_list(*p);
    }, py::arg("a"), py::arg("b"), py::arg("degree_cap") = kDefaultDegreeCap);

    m.def("poly_mul", [](const py::sequence& p, const py::sequence& r) {
        return poly_to_list(poly_mul(poly_from_list(p), poly_from_list(r)));
    });

    m.def("poly_divexact", [](const py::sequence& num, const py::sequence& den) -> py::object {
        auto quo = poly_divexact(poly_from_list(num), poly_from_list(den));
        if (!quo) return py::none();
        return poly_to_list(*quo);
    });

    m.def("min_coefficient",
          [](const py::sequence& p) { return to_py_int(min_coefficient(poly_from_list(p))); });
    m.def("max_abs_coeff",
          [](const py::sequence& p) { return to_py_int(max_abs_coeff(poly_from_list(p))); });
    m.def("is_flat", [](const py::sequence& p) { return is_flat(poly_from_list(p)); });

    m.def("cyclotomic", [](long long n) { return poly_to_list(cyclotomic_poly(n)); });

    m.def("factor_profile", [](long long n) {
        FactorProfile fp = factor_profile(n);
        py::dict out;
        out["n"] = fp.n;
        out["primes"] = fp.prime_factors;
        out["omega"] = fp.omega;
        out["radical"] = fp.radical;
        return out;
    });

    m.def("divisor_multiset", &divisor_multiset);

    m.def("polynomiality_delta",
          [](std::vector<long long> a, std::vector<long long> b) -> py::object {
              auto delta = polynomiality_delta(make_spec(std::move(a), std::move(b)));
              if (!delta) return py::none();
              return py::cast(*delta);
          });

    m.def("cgf_form", [](const py::sequence& p) -> py::object {
        auto form = cgf_form(poly_from_list(p));
        if (!form) return py::none();
        py::dict out;
        out["alpha"] = to_py_int(form->alpha);
        out["beta"] = form->beta;
        out["indices"] = form->cyclo_indices;
        return out;
    });

    m.def("frobenius", [](std::vector<long long> gens) {
        return frobenius_number(GeneratorSet(std::move(gens)));
    });
    m.def("apery", [](std::vector<long long> gens) {
        return apery_set(GeneratorSet(std::move(gens)));
    });
    m.def("selmer_bound", [](std::vector<long long> gens) {
        return selmer_bound(GeneratorSet(std::move(gens)));
    });
    m.def("semigroup_contains", [](std::vector<long long> gens, long long x) {
        return semigroup_contains(GeneratorSet(std::move(gens)), x);
    });
    m.def("count_representable", [](std::vector<long long> a, std::vector<long long> gens) {
        return count_representable(a, GeneratorSet(std::move(gens)));
    });

    m.def("hsop", [](std::vector<long long> a, std::vector<long long> b) {
        Certificate cert = hsop_test(a, b);
        py::dict out;
        out["holds"] = std::holds_alternative<HsopHolds>(cert);
        if (const auto* fail = std::get_if<HsopFails>(&cert)) {
            out["witness"] = fail->witness_values;
            out["index_count"] = fail->index_count;
            out["representable"] = fail->representable;
        }
        return out;
    });

    m.def("bijection", [](std::vector<long long> a, std::vector<long long> b) -> py::object {
        auto pairing = bijection_criterion(a, b);
        if (!pairing) return py::none();
        return py::cast(*pairing);
    });

    m.def("selmer_fast_path",
          [](std::vector<long long> a, std::vector<long long> b) -> py::object {
              auto cert = selmer_fast_path(make_spec(std::move(a), std::move(b)));
              if (!cert) return py::none();
              py::dict out;
              out["bound"] = cert->bound;
              out["a1"] = cert->a1;
              return out;
          });

    m.def("lattice_decompose",
          [](std::vector<long long> delta, const std::string& mode,
             long long backtrack_cap) -> py::object {
              std::sort(delta.begin(), delta.end());
              LatticeMode lm;
              if (mode == "nonneg-pkjoin") lm = LatticeMode::NonNegPkJoin;
              else if (mode == "nonneg-omega") lm = LatticeMode::NonNegOmega;
              else if (mode == "flat-omega") lm = LatticeMode::FlatOmega;
              else throw std::invalid_argument("mode must be nonneg-pkjoin|nonneg-omega|flat-omega");
              auto result = lattice_decompose(delta, lm, backtrack_cap);
              py::dict out;
              out["exhausted"] = result.exhausted;
              if (!result.decomposition) {
                  out["found"] = false;
                  return out;
              }
              out["found"] = true;
              if (lm == LatticeMode::NonNegPkJoin) {
                  py::list blocks;
                  for (const PkJoinBlock& b : result.decomposition->pk_blocks)
                      blocks.append(py::make_tuple(b.p, b.k, b.d));
                  out["blocks"] = blocks;
              } else {
                  out["blocks"] = result.decomposition->omega_blocks;
              }
              return out;
          },
          py::arg("delta"), py::arg("mode"),
          py::arg("backtrack_cap") = kDefaultLatticeBacktrackCap);

    m.def("polya_multiplier", [](const py::sequence& p, long long k_max) -> py::object {
        auto k = polya_multiplier(poly_from_list(p), k_max);
        if (!k) return py::none();
        return py::cast(*k);
    }, py::arg("p"), py::arg("k_max") = kDefaultPolyaKMax);

    m.def("certify_json", [](std::vector<long long> a, std::vector<long long> b,
                             bool run_hsop, bool run_oracle, long long degree_cap,
                             bool coefficients) {
        CertifyConfig config;
        config.run_hsop = run_hsop;
        config.run_oracle = run_oracle;
        config.degree_cap = degree_cap;
        CertificateReport report =
            certify_nonnegativity(make_spec(std::move(a), std::move(b)), config);
        return cli::report_document(report, cli::ReportOptions{coefficients, false}).dump();
    }, py::arg("a"), py::arg("b"), py::arg("run_hsop") = true, py::arg("run_oracle") = true,
       py::arg("degree_cap") = kDefaultDegreeCap, py::arg("coefficients") = false);

    m.def("gk_spec", [](long long n, long long k, long long l) {
        QuotientSpec spec = gk_spec(GKInstance{n, k, l});
        return py::make_tuple(spec.a, spec.b);
    });
    m.def("stanton_spec", [](long long mm, std::vector<long long> a) {
        QuotientSpec spec = stanton_spec(StantonInstance{mm, std::move(a)});
        return py::make_tuple(spec.a, spec.b);
    });
    m.def("corollary_bound_gk", &corollary_bound_gk);
    m.def("corollary_bound_stanton", &corollary_bound_stanton);
    m.def("is_symmetric", &is_symmetric);

    m.def("parse_spec", [](const std::string& text) {
        QuotientSpec spec = cli::parse_spec(text);
        return py::make_tuple(spec.a, spec.b);
    });
    m.def("render_spec", [](std::vector<long long> a, std::vector<long long> b) {
        return cli::render_spec(make_spec(std::move(a), std::move(b)));
    });

    m.def("run_command", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
