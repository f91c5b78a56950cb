#ifndef QBOSON_JSON_IO_HPP
#define QBOSON_JSON_IO_HPP

#include "qboson/analysis.hpp"
#include "qboson/relcheck.hpp"

#include "json.hpp"

namespace qboson {

// Ordered JSON keeps key insertion order, making every report
// byte-deterministic for a fixed configuration.
using Json = nlohmann::ordered_json;

inline const char* kToolVersion = "1.0.0";

std::string rational_str(const Rational& r);  // always "num/den"

// Scalar serialization (see docs/json-formats.md):
//   QLaurent  {"laurent": {"<exp>": "<num>/<den>", ...}}
//   QRadical  {"radical": [{"coeff": {...}, "radicand": [k,...],
//                           "rad_rational": "<num>/<den>", "imag": bool}, ...]}
//   QNumeric  {"numeric": {"re": "<decimal>", "im": "<decimal>",
//                          "q": "<decimal>"}}
Json scalar_to_json(const Scalar& s);

Json basis_to_json(const FockBasis& b);

// {meta, basis, operators: {label: {degree_shift, cols: {"j": [[i, scalar],
// ...]}}}}.  meta records n, p, L, kind, backend, q, normalization and the
// tool version.
Json realization_to_json(const Realization& r);

Json relation_report_to_json(const RelationReport& rep);
Json suite_report_to_json(const std::vector<RelationReport>& reps);

Json weight_report_to_json(const WeightReport& rep);
Json invariance_report_to_json(const InvarianceReport& rep);
Json unitarity_report_to_json(const UnitarityReport& rep);
Json irreducibility_report_to_json(const IrreducibilityReport& rep);
Json classical_report_to_json(const ClassicalLimitReport& rep);

// Matrix-Market coordinate export; numeric backend with real entries only
// (exact scalars do not fit the format).
std::string matrix_market(const SparseOp& op, const Real& q);

// One human-readable line per relation.
std::string suite_report_text(const std::vector<RelationReport>& reps);

}  // namespace qboson

#endif
