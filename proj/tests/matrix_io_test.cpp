#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "cli/matrix_io.hpp"
#include "gds/gds.hpp"

using namespace gds;
using namespace gds::cli;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(FormatDouble, ShortestSeventeenDigitsRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(std::stod(format_double(0.1)), 0.1);
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Formats, ParseAndDetect) {
  EXPECT_EQ(parse_format("csv"), MatrixFormat::csv);
  EXPECT_EQ(parse_format("json"), MatrixFormat::json);
  EXPECT_FALSE(parse_format("xml").has_value());
  EXPECT_EQ(format_from_path("a/b.csv"), MatrixFormat::csv);
  EXPECT_EQ(format_from_path("a/b.json"), MatrixFormat::json);
  EXPECT_EQ(format_from_path("noext"), MatrixFormat::json);
}

TEST(MatrixJson, RoundTripIsExact) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int t = 0; t < 20; ++t) {
    std::vector<double> v(12);
    for (double& x : v) x = dist(rng) * std::pow(10.0, t - 10);
    const Matrix m(3, 4, v);
    std::stringstream s;
    write_matrix_json(s, m);
    EXPECT_EQ(read_matrix_json(s), m);
  }
}

TEST(MatrixCsv, RoundTripIsExact) {
  const Matrix m = random_matrix(7, 3);
  std::stringstream s;
  write_matrix_csv(s, m);
  EXPECT_EQ(read_matrix_csv(s), m);
}

TEST(MatrixJson, MalformedInputReportsLocation) {
  std::stringstream bad("{\"rows\": 1, \"cols\": ");
  EXPECT_NE(error_of([&] { read_matrix_json(bad); }).find("malformed JSON matrix at byte"),
            std::string::npos);
  std::stringstream short_data(R"({"rows": 2, "cols": 2, "data": [1, 2, 3]})");
  EXPECT_NE(error_of([&] { read_matrix_json(short_data); }), "");
  std::stringstream text_entry(R"({"rows": 1, "cols": 1, "data": ["x"]})");
  EXPECT_NE(error_of([&] { read_matrix_json(text_entry); }).find("data[0]"), std::string::npos);
}

TEST(MatrixCsv, MalformedInputReportsLineAndField) {
  std::stringstream bad_number("1,2\n3,abc\n");
  EXPECT_NE(error_of([&] { read_matrix_csv(bad_number); }).find("line 2, field 2"),
            std::string::npos);
  std::stringstream ragged("1,2\n3\n");
  EXPECT_NE(error_of([&] { read_matrix_csv(ragged); }).find("line 2: expected 2"),
            std::string::npos);
  std::stringstream empty("");
  EXPECT_NE(error_of([&] { read_matrix_csv(empty); }), "");
}

TEST(MatrixFiles, PathIsNamedInErrors) {
  const auto dir = std::filesystem::temp_directory_path() / "gds_matrix_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "m.csv";
  write_matrix(path, Matrix::identity(2), MatrixFormat::csv);
  EXPECT_EQ(read_matrix(path, MatrixFormat::csv), Matrix::identity(2));
  EXPECT_NE(error_of([&] { read_matrix(path, MatrixFormat::json); }).find(path.string()),
            std::string::npos);
  EXPECT_NE(error_of([&] { read_matrix(dir / "missing.json", MatrixFormat::json); }), "");
  std::filesystem::remove_all(dir);
}
