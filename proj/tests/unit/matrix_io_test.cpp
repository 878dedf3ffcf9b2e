#include "nodal/matrix_io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "nodal/error.hpp"
#include "nodal/surface.hpp"

namespace {

std::size_t error_line(std::string_view text) {
  try {
    nodal::parse_generator_rows(text);
  } catch (const nodal::ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(MatrixIo, ParsesCompactAndSpacedRows) {
  const auto rows = nodal::parse_generator_rows("# header\n\n1100\n0 0 1 1\n  1010  \n");
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].to_string(), "1100");
  EXPECT_EQ(rows[1].to_string(), "0011");
  EXPECT_EQ(rows[2].to_string(), "1010");
}

TEST(MatrixIo, RaggedRowReportsOffendingLine) {
  EXPECT_EQ(error_line("1100\n# c\n110\n"), 3u);
}

TEST(MatrixIo, BadInputsCarryLineNumbers) {
  EXPECT_EQ(error_line("1100\n1x00\n"), 2u);
  EXPECT_EQ(error_line("11  00\n"), 1u);
  EXPECT_EQ(error_line("1 1 0 2\n"), 1u);
  EXPECT_THROW(nodal::parse_generator_rows("# only comments\n\n"), nodal::ParseError);
}

TEST(MatrixIo, BundledFilesMatchConstructors) {
  const std::filesystem::path dir = NODAL_TEST_DATA_DIR;
  EXPECT_EQ(nodal::read_generator_file(dir / "kummer.txt"), nodal::kummer_code());
  EXPECT_EQ(nodal::read_generator_file(dir / "togliatti.txt"), nodal::togliatti_code());
}

TEST(MatrixIo, MissingFileThrows) {
  EXPECT_THROW(nodal::read_generator_file("/nonexistent/generator.txt"), nodal::Error);
}

TEST(MatrixIo, WriteThenParseRoundTrips) {
  const nodal::LinearCode code = nodal::togliatti_code();
  std::ostringstream out;
  nodal::write_generator_rows(out, code);
  std::istringstream in(out.str());
  const auto rows = nodal::parse_generator_rows(in);
  EXPECT_EQ(nodal::code_from_rows(rows), code);
}

}  // namespace
