#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "nodal/bit_word.hpp"
#include "nodal/linear_code.hpp"

namespace nodal {

/// Reads generator rows in the plain-text matrix format:
///
///   # comment lines start with '#'
///   11110000         <- allowed
///   1 1 1 1 0 0 0 0  <- allowed
///   1111  0000       <- rejected: at most one space between characters
///
/// Blank lines are ignored and every data line must have the same number of
/// bits. Throws ParseError carrying the 1-based line number.
std::vector<BitWord> parse_generator_rows(std::istream& in);
std::vector<BitWord> parse_generator_rows(std::string_view text);

/// Parses a generator-matrix file and returns the spanned code.
LinearCode read_generator_file(const std::filesystem::path& path);

/// Writes the canonical basis, one row per line, no separators.
void write_generator_rows(std::ostream& out, const LinearCode& code);

}  // namespace nodal
