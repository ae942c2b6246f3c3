#pragma once

// Matrix wire format:
//   {"rows": R, "cols": C, "data": [[[re, im], ... C entries], ... R rows]}
// Complex numbers are always [re, im] pairs of JSON numbers.

#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "aspec/linalg.hpp"

namespace aspec {

ComplexMatrix read_matrix(std::istream& source);
ComplexMatrix read_matrix_file(const std::string& path);
ComplexMatrix matrix_from_json(const nlohmann::json& doc);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json complex_to_json(Complex z);

/// Compact single-line serialization; doubles are written with round-trip
/// precision so read_matrix(write_matrix(m)) reproduces m bit for bit.
void write_matrix(std::ostream& out, const ComplexMatrix& m);

}  // namespace aspec
