#ifndef QBOSON_RELCHECK_HPP
#define QBOSON_RELCHECK_HPP

#include "qboson/realization.hpp"
#include "qboson/relexpr.hpp"

namespace qboson {

// Evaluation environment: a set of labeled operators plus the scalar
// backend they live in.
struct EvalContext {
    const std::map<std::string, SparseOp>* ops = nullptr;
    Backend backend = Backend::ExactLaurent;
    Real q{0};
    BasisPtr basis;
    int L = 0;
    // For HP-type builds with integer p truncated at L = p, every path out
    // of F0 carries the vanishing amplitude sqrt([p - p]) = 0, so the
    // truncation loses nothing and the degree guard can be dropped.
    bool lossless = false;

    static EvalContext of(const Realization& r) {
        bool lossless = r.kind != RealKind::Dyson &&
                        boost::multiprecision::denominator(r.p) == 1 &&
                        Rational(r.L) == r.p;
        return {&r.ops, r.backend, r.q, r.basis, r.L, lossless};
    }
    static EvalContext of(const DeformedOscillators& d) {
        return {&d.ops, d.backend, d.q, d.basis, d.L, false};
    }
};

struct EvalResult {
    SparseOp op;
    int net_shift = 0;  // worst-case positive net shift across branches
    int guard = 0;      // maximal positive degree excursion along any path
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

EvalResult eval_expr(const RelExprPtr& ast, const EvalContext& ctx);

enum class Verdict { ExactPass, SampledPass, Fail, InsufficientTruncation };

const char* verdict_name(Verdict v);

struct RelationReport {
    std::string relation;
    int guard = 0;
    int dim_checked = 0;
    Verdict verdict = Verdict::Fail;
    bool sampled_fallback = false;  // radical backend needed sampling
    int samples_used = 0;
    std::string residual;  // worst |entry| (numeric / sampled)
    std::string witness;   // failing entry description, when verdict = fail

    bool passed() const {
        return verdict == Verdict::ExactPass || verdict == Verdict::SampledPass;
    }
};

// Asserts the relation vanishes on all states of degree <= L - guard.
// Exact backends use normal-form zero (radicals fall back to the sampled
// test, reported as "zero (sampled)"); the numeric backend uses a max-abs
// residual below 1e-10.
RelationReport check_relation(const RelExprPtr& ast, const EvalContext& ctx);
RelationReport check_relation_text(const std::string& text,
                                   const EvalContext& ctx);

// Complete Cartan + Serre suite for rank n (relations (2a)-(2c) for all
// ordered pairs, (3a) for |i-j| != 1, (3b)/(3c) in both deformation
// orders for adjacent pairs).
std::vector<std::string> standard_suite(int n);

// Defining relations of the deformed oscillators for n modes.
std::vector<std::string> oscillator_suite(int n);

std::vector<RelationReport> run_suite(const std::vector<std::string>& corpus,
                                      const EvalContext& ctx);

// Corpus file helpers: one relation per line, '#' comments, UTF-8.
std::vector<std::string> load_corpus(const std::string& path);
void save_corpus(const std::vector<std::string>& corpus,
                 const std::string& path);

// Multiplies one generator image by q; used by mutation tests to confirm
// the suite is sensitive to each generator.
void mutate_scale_by_q(Realization& r, const std::string& label);

}  // namespace qboson

#endif
