// Python bindings: the main operations (build / verify / analyze / limit)
// return the same JSON documents the CLI emits, as strings; the relation
// DSL helpers are exposed directly.

#include "qboson/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qboson;

namespace {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos)
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
    return Rational(BigInt(digits), den);
}

Backend resolve_backend(const std::string& backend, RealKind kind) {
    if (backend == "exact")
        return kind == RealKind::Dyson ? Backend::ExactLaurent
                                       : Backend::ExactRadical;
    return backend_from_name(backend);
}

Realization build_realization(const std::string& kind, int n,
                              const std::string& p, int trunc,
                              const std::string& backend,
                              const std::string& q) {
    RealKind k = kind_from_name(kind);
    Backend be = resolve_backend(backend, k);
    Real qv = be == Backend::Numeric ? Real(q) : Real(0);
    Rational pv = parse_rational(p);
    switch (k) {
        case RealKind::Dyson: return build_dyson(n, pv, trunc, be, qv);
        case RealKind::HP: return build_hp(n, pv, trunc, be, qv);
        default: return build_hp_deformed(n, pv, trunc, be, qv);
    }
}

std::string build_json(const std::string& kind, int n, const std::string& p,
                       int trunc, const std::string& backend,
                       const std::string& q) {
    return realization_to_json(build_realization(kind, n, p, trunc, backend, q))
        .dump(2);
}

std::string verify_json(const std::string& kind, int n, const std::string& p,
                        int trunc, const std::string& backend,
                        const std::string& q,
                        const std::vector<std::string>& corpus) {
    Realization r = build_realization(kind, n, p, trunc, backend, q);
    std::vector<std::string> rels = corpus.empty() ? standard_suite(n) : corpus;
    return suite_report_to_json(run_suite(rels, EvalContext::of(r))).dump(2);
}

std::string analyze_json(const std::string& kind, int n, const std::string& p,
                         int trunc, const std::string& backend,
                         const std::string& q, bool do_weights,
                         bool do_invariance, bool do_unitarity,
                         bool do_irreducibility) {
    Realization r = build_realization(kind, n, p, trunc, backend, q);
    Json doc = Json::object();
    if (do_weights) doc["weights"] = weight_report_to_json(weights(r));
    if (do_invariance) {
        int pi = (int)boost::multiprecision::numerator(r.p);
        doc["invariance"] = Json::array(
            {invariance_report_to_json(invariance_check(r, {Subspace::F0, pi})),
             invariance_report_to_json(
                 invariance_check(r, {Subspace::F1, pi}))});
    }
    if (do_unitarity)
        doc["unitarity"] = unitarity_report_to_json(
            unitarity_check(r, /*expect_fail=*/r.kind == RealKind::Dyson));
    if (do_irreducibility)
        doc["irreducibility_probe"] =
            irreducibility_report_to_json(irreducibility_probe(r));
    return doc.dump(2);
}

std::string limit_json(const std::string& kind, int n, const std::string& p,
                       int trunc, const std::string& backend) {
    Realization r = build_realization(kind, n, p, trunc, backend, "");
    return classical_report_to_json(classical_limit(r)).dump(2);
}

}  // namespace

PYBIND11_MODULE(_qboson, m) {
    m.doc() =
        "Dyson and Holstein-Primakoff boson realizations of U_q[sl(n+1)]";

    m.def("build_json", &build_json, py::arg("kind"), py::arg("n"),
          py::arg("p"), py::arg("trunc"), py::arg("backend") = "exact",
          py::arg("q") = "",
          "Generator matrices and basis as a JSON string");
    m.def("verify_json", &verify_json, py::arg("kind"), py::arg("n"),
          py::arg("p"), py::arg("trunc"), py::arg("backend") = "exact",
          py::arg("q") = "", py::arg("corpus") = std::vector<std::string>{},
          "Relation-suite report as a JSON string");
    m.def("analyze_json", &analyze_json, py::arg("kind"), py::arg("n"),
          py::arg("p"), py::arg("trunc"), py::arg("backend") = "exact",
          py::arg("q") = "", py::arg("weights") = false,
          py::arg("invariance") = false, py::arg("unitarity") = false,
          py::arg("irreducibility_probe") = false,
          "Subspace/unitarity analysis report as a JSON string");
    m.def("limit_json", &limit_json, py::arg("kind"), py::arg("n"),
          py::arg("p"), py::arg("trunc"), py::arg("backend") = "exact",
          "Classical q -> 1 comparison report as a JSON string");

    m.def("standard_suite", &standard_suite, py::arg("n"),
          "Cartan and Serre relations for rank n");
    m.def("oscillator_suite", &oscillator_suite, py::arg("n"),
          "Deformed-oscillator defining relations for n modes");
    m.def(
        "canonical_relation",
        [](const std::string& text) {
            return serialize_relation(parse_relation(text));
        },
        py::arg("relation"), "Canonical text form of a relation");

    m.attr("__version__") = kToolVersion;
}
