#pragma once

#include <string>

#include "json.hpp"
#include "wc/dynamics.hpp"

namespace wc {

/// std::map-backed json: object keys are emitted sorted, so serialization is
/// deterministic and parse-then-dump is byte-identical.
using Json = nlohmann::json;

inline constexpr const char* kSchemaName = "weyl-cremona/1";

/// Canonical textual form: 2-space indentation plus a trailing newline.
std::string dump_json(const Json& j);

// Integers: a json number when the value fits in 64 bits, a decimal string
// otherwise; both forms are accepted when parsing.
Json json_int(const mpz_class& v);
mpz_class int_from_json(const Json& j);

// Rationals: canonical "numerator/denominator" decimal strings.
Json json_rat(const mpq_class& v);
mpq_class rat_from_json(const Json& j);

// Polynomials: ascending integer coefficient arrays.
Json json_poly(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

// Field elements: ascending arrays of "numerator/denominator" strings.
Json json_field_element(const FieldElement& x);
FieldElement field_element_from_json(const Json& j, const FieldPtr& field);

Json json_field_vec(const Vec<FieldElement>& v);
Vec<FieldElement> field_vec_from_json(const Json& j, const FieldPtr& field);

// Matrices: arrays of row arrays.
Json json_field_mat(const Mat<FieldElement>& m);
Mat<FieldElement> field_mat_from_json(const Json& j, const FieldPtr& field);
Json json_int_mat(const Mat<mpz_class>& m);
Mat<mpz_class> int_mat_from_json(const Json& j);

Json json_interval(const RationalInterval& iv);
RationalInterval interval_from_json(const Json& j);

/// Records (p, q, r), the Salem polynomial, base shifts and point parameters;
/// parsing rebuilds the lattice context and the field from those.
Json json_tuple(const MarkedTuple& tuple);
MarkedTuple tuple_from_json(const Json& j);

Json json_uc(const UCCertificate& cert);
UCCertificate uc_from_json(const Json& j);

Json json_realization(const RealizationCertificate& cert);
RealizationCertificate realization_from_json(const Json& j, const FieldPtr& field);

Json json_degree_report(const DegreeReport& rep);
DegreeReport degree_report_from_json(const Json& j);

/// Plain-text table of the comparison: one row per iterate with the measured
/// and predicted multidegrees and the consecutive-degree ratio.
std::string degree_report_table(const DegreeReport& rep);

}  // namespace wc
