#pragma once

#include <string>

#include <json.hpp>

#include "bgc/complex.hpp"

namespace bgc {

// JSON schema, version "1":
// {
//   "schema_version": "1",
//   "dims": [{"p": 0, "q": 1, "dim": 1}, ...],
//   "operators": [{"kind": "d01"|"d10"|"d2m1", "p": .., "q": ..,
//                  "entries": [{"row": .., "col": .., "value": "a/b"}, ...]}],
//   "metadata": { ... }                                        (optional)
// }
// Rationals travel as strings; no floats appear anywhere in the format.

// Structural reading only: bad JSON or out-of-range indices raise ParseError.
BigradedComplex parse_complex_document(const std::string& text);

// parse_complex_document plus the validity gate: identity violations raise
// ValidationError carrying the report text.
BigradedComplex parse_complex(const std::string& text);

nlohmann::json complex_to_json(const BigradedComplex& c,
                               const nlohmann::json& metadata = nlohmann::json::object());
std::string emit_complex(const BigradedComplex& c,
                         const nlohmann::json& metadata = nlohmann::json::object());

// Cocycle document: {"degree": k, "components": [{"p":..,"q":..,
// "values": ["a/b", ...]}]}. Lengths must match the complex's blocks.
GradedVector parse_cocycle_document(const BigradedComplex& c, const std::string& text);
nlohmann::json graded_vector_to_json(const GradedVector& v);

}  // namespace bgc
