#include "qboson/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace qboson;

namespace {

// Exit codes: 0 pass, 1 claim violation, 2 configuration error, 3 build
// error (e.g. precondition failures inside the builders).
constexpr int kExitPass = 0;
constexpr int kExitClaim = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBuild = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 1;
    std::string p_str = "1";
    int L = 3;
    std::string kind_str = "dyson";
    std::string backend_str = "exact";
    std::string q_str;
    std::string corpus_path;
    std::string output;
    std::string format = "json";
    long seed = 0;
    // analyze selections
    bool do_weights = false;
    bool do_invariance = false;
    bool do_unitarity = false;
    bool do_irreducibility = false;

    RealKind kind() const { return kind_from_name(kind_str); }

    Backend backend() const {
        if (backend_str == "exact")
            return kind() == RealKind::Dyson ? Backend::ExactLaurent
                                             : Backend::ExactRadical;
        return backend_from_name(backend_str);
    }

    Rational p() const { return parse_rational(p_str, "--p"); }

    Real q() const {
        if (q_str.empty())
            throw ConfigError("numeric backend requires --q");
        try {
            return Real(q_str);
        } catch (const std::exception&) {
            throw ConfigError("cannot parse --q value '" + q_str + "'");
        }
    }

    static Rational parse_rational(const std::string& s, const char* flag) {
        try {
            auto slash = s.find('/');
            if (slash != std::string::npos)
                return Rational(BigInt(s.substr(0, slash)),
                                BigInt(s.substr(slash + 1)));
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rational(BigInt(s));
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            BigInt den = 1;
            for (size_t k = dot + 1; k < s.size(); ++k) den *= 10;
            return Rational(BigInt(digits), den);
        } catch (const std::exception&) {
            throw ConfigError(std::string("cannot parse ") + flag + " value '" +
                              s + "'");
        }
    }

    void validate(const std::string& command) const {
        Backend be = backend();
        if (be != Backend::Numeric && !q_str.empty())
            throw ConfigError("--q applies to the numeric backend only");
        if (be != Backend::Numeric &&
            boost::multiprecision::denominator(p()) != 1)
            throw ConfigError("exact backend requires integer p");
        if (be == Backend::Numeric) {
            Real qq = q();
            if (qq <= 0) throw ConfigError("--q must be positive");
            if (qq == 1 && command != "limit")
                throw ConfigError("--q must differ from 1 (use the limit "
                                  "command for q -> 1)");
        }
        if (command == "limit" && be == Backend::Numeric)
            throw ConfigError("limit requires an exact backend");
        if (format != "json" && format != "matrixmarket" && format != "text")
            throw ConfigError("unknown format '" + format + "'");
        if (format == "matrixmarket" && be != Backend::Numeric)
            throw ConfigError(
                "matrix-market export is available for the numeric backend "
                "only");
    }

    Json meta(const std::string& command) const {
        Json m{{"tool", "qboson"}, {"version", kToolVersion},
               {"command", command}, {"kind", kind_str},
               {"n", n},            {"p", rational_str(p())},
               {"trunc", L},        {"backend", backend_name(backend())},
               {"seed", seed}};
        if (backend() == Backend::Numeric) m["q"] = to_decimal_string(q());
        return m;
    }
};

Realization build_realization(const RunConfig& cfg) {
    Backend be = cfg.backend();
    Real q = be == Backend::Numeric ? cfg.q() : Real(0);
    switch (cfg.kind()) {
        case RealKind::Dyson: return build_dyson(cfg.n, cfg.p(), cfg.L, be, q);
        case RealKind::HP: return build_hp(cfg.n, cfg.p(), cfg.L, be, q);
        case RealKind::HPDeformed:
            return build_hp_deformed(cfg.n, cfg.p(), cfg.L, be, q);
    }
    throw ConfigError("unknown realization kind");
}

void write_output(const RunConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + cfg.output);
    out << payload;
}

std::string build_text(const Realization& r) {
    std::ostringstream os;
    for (const auto& [label, op] : r.ops) {
        os << label << ":\n";
        for (const auto& [j, col] : op.columns())
            for (const auto& [i, v] : col)
                os << "  |" << r.basis->state(j).str() << "> -> |"
                   << r.basis->state(i).str() << ">  " << v.str() << "\n";
    }
    return os.str();
}

int cmd_build(const RunConfig& cfg) {
    Realization r = build_realization(cfg);
    if (cfg.format == "matrixmarket") {
        if (cfg.output.empty())
            throw ConfigError("matrix-market export needs --output (used as "
                              "a per-operator filename prefix)");
        for (const auto& [label, op] : r.ops) {
            std::ofstream out(cfg.output + "." + label + ".mtx",
                              std::ios::binary);
            out << matrix_market(op, r.q);
        }
        return kExitPass;
    }
    if (cfg.format == "text") {
        write_output(cfg, build_text(r));
        return kExitPass;
    }
    Json doc = realization_to_json(r);
    doc["meta"]["seed"] = cfg.seed;
    write_output(cfg, doc.dump(2) + "\n");
    return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
    Realization r = build_realization(cfg);
    std::vector<std::string> corpus = cfg.corpus_path.empty()
                                          ? standard_suite(cfg.n)
                                          : load_corpus(cfg.corpus_path);
    std::vector<RelationReport> reps = run_suite(corpus, EvalContext::of(r));
    Json doc{{"meta", cfg.meta("verify")}, {"report", suite_report_to_json(reps)}};
    write_output(cfg, cfg.format == "text" ? suite_report_text(reps)
                                           : doc.dump(2) + "\n");
    for (const RelationReport& rep : reps)
        if (!rep.passed()) return kExitClaim;
    return kExitPass;
}

int cmd_analyze(const RunConfig& cfg) {
    if (!cfg.do_weights && !cfg.do_invariance && !cfg.do_unitarity &&
        !cfg.do_irreducibility)
        throw ConfigError(
            "analyze needs at least one of --weights --invariance "
            "--unitarity --irreducibility-probe");
    Realization r = build_realization(cfg);
    bool dyson = r.kind == RealKind::Dyson;
    Json doc{{"meta", cfg.meta("analyze")}};
    bool claims_hold = true;

    if (cfg.do_weights) doc["weights"] = weight_report_to_json(weights(r));
    if (cfg.do_invariance) {
        if (boost::multiprecision::denominator(r.p) != 1)
            throw ConfigError("invariance analysis requires integer p");
        int p = (int)boost::multiprecision::numerator(r.p);
        InvarianceReport f0 = invariance_check(r, {Subspace::F0, p});
        InvarianceReport f1 = invariance_check(r, {Subspace::F1, p});
        doc["invariance"] =
            Json::array({invariance_report_to_json(f0),
                         invariance_report_to_json(f1)});
        // Claimed structure: F1 is always invariant; F0 is invariant for
        // the HP forms but not for Dyson (the indecomposability witness).
        bool ok = f1.all_invariant() &&
                  (dyson ? !f0.all_invariant() : f0.all_invariant());
        doc["invariance_claim_holds"] = ok;
        claims_hold = claims_hold && ok;
    }
    if (cfg.do_unitarity) {
        // Dyson carries the negative claim: the check must find a
        // deviation (expect-fail mode).
        UnitarityReport u = unitarity_check(r, /*expect_fail=*/dyson);
        doc["unitarity"] = unitarity_report_to_json(u);
        claims_hold = claims_hold && u.pass;
    }
    if (cfg.do_irreducibility) {
        IrreducibilityReport rep = irreducibility_probe(r);
        doc["irreducibility_probe"] = irreducibility_report_to_json(rep);
        claims_hold = claims_hold && rep.probe_pass;
    }
    write_output(cfg, doc.dump(2) + "\n");
    return claims_hold ? kExitPass : kExitClaim;
}

int cmd_limit(const RunConfig& cfg) {
    Realization r = build_realization(cfg);
    ClassicalLimitReport rep = classical_limit(r);
    Json doc{{"meta", cfg.meta("limit")},
             {"classical_limit", classical_report_to_json(rep)}};
    write_output(cfg, doc.dump(2) + "\n");
    return rep.pass ? kExitPass : kExitClaim;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Dyson and Holstein-Primakoff boson realizations of U_q[sl(n+1)]: "
        "build, verify, analyze, classical limit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "rank (number of boson modes)");
        sub->add_option("--p", cfg.p_str,
                        "highest-weight parameter (integer or rational)");
        sub->add_option("--trunc", cfg.L, "Fock-space degree truncation L");
        sub->add_option("--kind", cfg.kind_str, "dyson | hp | hp-deformed");
        sub->add_option("--backend", cfg.backend_str,
                        "exact | exact-laurent | exact-radical | numeric");
        sub->add_option("--q", cfg.q_str, "deformation parameter (numeric)");
        sub->add_option("--output", cfg.output, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "json | matrixmarket | text");
        sub->add_option("--seed", cfg.seed, "seed recorded in reports");
    };

    CLI::App* build = app.add_subcommand("build", "export generator matrices");
    CLI::App* verify =
        app.add_subcommand("verify", "check the defining relations");
    CLI::App* analyze =
        app.add_subcommand("analyze", "subspace / unitarity analyses");
    CLI::App* limit = app.add_subcommand("limit", "classical q -> 1 limit");
    for (CLI::App* sub : {build, verify, analyze, limit}) add_common(sub);
    verify->add_option("--corpus", cfg.corpus_path,
                       "relation corpus file (default: standard suite)");
    analyze->add_flag("--weights", cfg.do_weights, "weight diagonals");
    analyze->add_flag("--invariance", cfg.do_invariance,
                      "F0/F1 invariance structure");
    analyze->add_flag("--unitarity", cfg.do_unitarity,
                      "adjointness on the F0 block");
    analyze->add_flag("--irreducibility-probe", cfg.do_irreducibility,
                      "boundary coefficients for non-integer p");

    CLI11_PARSE(app, argc, argv);

    std::string command = app.get_subcommands()[0]->get_name();
    try {
        cfg.validate(command);
        if (command == "build") return cmd_build(cfg);
        if (command == "verify") return cmd_verify(cfg);
        if (command == "analyze") return cmd_analyze(cfg);
        return cmd_limit(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const AnalysisError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ParseError& e) {
        std::cerr << "config error: relation parse failure: " << e.what()
                  << " (at offset " << e.position << ")\n";
        return kExitConfig;
    } catch (const BuildError& e) {
        std::cerr << "build error: " << e.what() << "\n";
        return kExitBuild;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBuild;
    }
}
