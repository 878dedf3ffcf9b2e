#include "nodal/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nodal/error.hpp"

namespace nodal {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

BitWord parse_row(std::string_view line, std::size_t line_no) {
  std::string bits;
  bits.reserve(line.size());
  bool prev_space = false;
  for (char c : line) {
    if (c == '0' || c == '1') {
      bits.push_back(c);
      prev_space = false;
    } else if (c == ' ') {
      if (prev_space) throw ParseError(line_no, "more than one space between bits");
      prev_space = true;
    } else {
      throw ParseError(line_no, "unexpected character '" + std::string(1, c) + "'");
    }
  }
  return BitWord::from_string(bits);
}

}  // namespace

std::vector<BitWord> parse_generator_rows(std::istream& in) {
  std::vector<BitWord> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    BitWord row = parse_row(line, line_no);
    if (!rows.empty() && row.length() != rows.front().length()) {
      throw ParseError(line_no, "row has " + std::to_string(row.length()) + " bits, expected " +
                                    std::to_string(rows.front().length()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no, "no generator rows found");
  return rows;
}

std::vector<BitWord> parse_generator_rows(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_generator_rows(in);
}

LinearCode read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open generator matrix file: " + path.string());
  return code_from_rows(parse_generator_rows(in));
}

void write_generator_rows(std::ostream& out, const LinearCode& code) {
  for (const BitWord& row : code.basis()) out << row.to_string() << '\n';
}

}  // namespace nodal
