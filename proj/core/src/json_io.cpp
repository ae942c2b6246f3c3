#include "aspec/json_io.hpp"

#include <fstream>
#include <vector>

namespace aspec {

namespace {

double number_at(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) throw Error(ErrorCode::Parse, std::string(what) + " must be a number");
  return v.get<double>();
}

Index dimension_at(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw Error(ErrorCode::Parse, std::string("missing \"") + key + "\"");
  if (!it->is_number_integer() && !it->is_number_unsigned()) {
    throw Error(ErrorCode::Parse, std::string("\"") + key + "\" must be an integer");
  }
  const auto v = it->get<long long>();
  if (v < 1) throw Error(ErrorCode::ShapeMismatch, std::string("\"") + key + "\" must be positive");
  return static_cast<Index>(v);
}

}  // namespace

ComplexMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "matrix document must be a JSON object");
  const Index rows = dimension_at(doc, "rows");
  const Index cols = dimension_at(doc, "cols");
  const auto data = doc.find("data");
  if (data == doc.end() || !data->is_array()) {
    throw Error(ErrorCode::Parse, "missing \"data\" array");
  }
  if (static_cast<Index>(data->size()) != rows) {
    throw Error(ErrorCode::ShapeMismatch, "declared " + std::to_string(rows) + " rows, data has " +
                                              std::to_string(data->size()));
  }
  std::vector<Complex> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (const auto& row : *data) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "each row must be an array");
    if (static_cast<Index>(row.size()) != cols) {
      throw Error(ErrorCode::ShapeMismatch, "declared " + std::to_string(cols) +
                                                " columns, row has " + std::to_string(row.size()));
    }
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2) {
        throw Error(ErrorCode::Parse, "entries must be [re, im] pairs");
      }
      entries.emplace_back(number_at(z[0], "re"), number_at(z[1], "im"));
    }
  }
  return ComplexMatrix(rows, cols, entries);
}

ComplexMatrix read_matrix(std::istream& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  } catch (const nlohmann::json::out_of_range& e) {
    // Number literals beyond double range, e.g. 1e400.
    throw Error(ErrorCode::NonFinite, e.what());
  }
  return matrix_from_json(doc);
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_matrix(in);
}

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) { out << matrix_to_json(m).dump(); }

}  // namespace aspec
