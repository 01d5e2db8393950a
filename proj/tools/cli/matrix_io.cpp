#include "cli/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace gds::cli {

using nlohmann::json;

std::optional<MatrixFormat> parse_format(std::string_view text) {
  if (text == "json") return MatrixFormat::json;
  if (text == "csv") return MatrixFormat::csv;
  return std::nullopt;
}

MatrixFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? MatrixFormat::csv : MatrixFormat::json;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_matrix_json(std::ostream& out, const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::vector<double>(m.data().begin(), m.data().end());
  out << j.dump() << '\n';
}

Matrix read_matrix_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON matrix at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw FormatError("JSON matrix needs integer \"rows\", \"cols\" and array \"data\"");
  }
  const auto& rows = j["rows"];
  const auto& cols = j["cols"];
  const auto& data = j["data"];
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned() || !data.is_array()) {
    throw FormatError("JSON matrix: \"rows\"/\"cols\" must be positive integers, \"data\" an array");
  }
  const auto r = rows.get<std::size_t>();
  const auto c = cols.get<std::size_t>();
  if (data.size() != r * c) {
    throw FormatError("JSON matrix: data has " + std::to_string(data.size()) +
                      " entries, expected rows*cols = " + std::to_string(r * c));
  }
  std::vector<double> values;
  values.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (!data[i].is_number()) {
      throw FormatError("JSON matrix: data[" + std::to_string(i) + "] is not a number");
    }
    values.push_back(data[i].get<double>());
  }
  try {
    return Matrix(r, c, std::move(values));
  } catch (const gds::Error& e) {
    throw FormatError(std::string("JSON matrix: ") + e.what());
  }
}

void write_matrix_csv(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Matrix read_matrix_csv(std::istream& in) {
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t fields = 0;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      const auto field = trim(rest.substr(0, comma));
      ++fields;
      double v = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size() ||
          !std::isfinite(v)) {
        throw FormatError("line " + std::to_string(line_no) + ", field " + std::to_string(fields) +
                          ": invalid number '" + std::string(field) + "'");
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      cols = fields;
    } else if (fields != cols) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                        " fields, got " + std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw FormatError("CSV matrix is empty");
  return Matrix(rows, cols, std::move(values));
}

void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
  if (format == MatrixFormat::json) {
    write_matrix_json(out, m);
  } else {
    write_matrix_csv(out, m);
  }
  if (!out) throw FormatError("failed writing '" + path.string() + "'");
}

Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return format == MatrixFormat::json ? read_matrix_json(in) : read_matrix_csv(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace gds::cli
