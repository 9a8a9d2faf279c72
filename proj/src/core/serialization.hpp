#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core/boundary_triplet.hpp"
#include "core/extension_resolvent.hpp"
#include "core/neumann_example.hpp"
#include "core/spectral_probe.hpp"

// JSON wire formats. Complex scalars are [re, im] pairs, matrices are
// row-major flat lists of pairs next to an explicit "dim", and atom
// coefficient vectors are in the eigenbasis of A (ascending eigenvalues).

namespace halfline {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);

// {"dim": n, "matrix": [[re, im] x n*n]}
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

HermitianOperator hermitian_from_json(const Json& j);
Json hermitian_to_json(const HermitianOperator& A);  // adds the eigendecomposition
UnitaryParameter unitary_from_json(const Json& j);
Json unitary_to_json(const UnitaryParameter& W);

// {"side", "anchor", "dim", "atoms": [{"rate": [re,im], "coeff": [[re,im],...]}]}
Json halfline_to_json(const HalfLineFunction& f);
HalfLineFunction halfline_from_json(const Json& j);
Json twocomponent_to_json(const TwoComponentFunction& u);
TwoComponentFunction twocomponent_from_json(const Json& j);

Json resolvent_to_json(const ResolventOutput& out);
Json boundary_pair_to_json(const BoundaryPair& p);
Json deficiency_to_json(const DeficiencyReport& left, const DeficiencyReport& right);
Json green_report_to_json(const GreenCheckReport& report);
Json point_spectrum_to_json(const PointSpectrumReport& report, int samples);
Json scan_to_json(const std::vector<NormBoundReport>& rows);

// CSV with 17-significant-digit floats, '.' decimal separator and '\n'
// line endings; "satisfied" printed as 1/0.
std::string scan_to_csv(const std::vector<NormBoundReport>& rows);
std::string field_to_csv(const std::vector<FieldSample>& rows);

std::string format_double(double x);  // %.17g

// Parses text that must be a JSON object; throws ParseError otherwise.
Json parse_json(const std::string& text);

}  // namespace halfline
