#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "gds/error.hpp"
#include "gds/matrix.hpp"

namespace gds::cli {

enum class MatrixFormat { json, csv };

/// Parse/IO failure with a location ("line 3, field 2: ..." or
/// "byte 17: ...") in the message.
class FormatError : public gds::Error {
 public:
  using gds::Error::Error;
};

std::optional<MatrixFormat> parse_format(std::string_view text);
/// .csv -> csv, anything else -> json.
MatrixFormat format_from_path(const std::filesystem::path& path);

/// 17 significant digits; parses back to the identical double.
std::string format_double(double v);

/// {"rows": R, "cols": C, "data": [row-major values]}
void write_matrix_json(std::ostream& out, const Matrix& m);
Matrix read_matrix_json(std::istream& in);

/// One matrix row per line, comma separated, 17 significant digits.
void write_matrix_csv(std::ostream& out, const Matrix& m);
Matrix read_matrix_csv(std::istream& in);

void write_matrix(const std::filesystem::path& path, const Matrix& m, MatrixFormat format);
Matrix read_matrix(const std::filesystem::path& path, MatrixFormat format);

}  // namespace gds::cli
