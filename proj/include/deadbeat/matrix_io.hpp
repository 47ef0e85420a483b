#pragma once

#include "deadbeat/matrix.hpp"

#include <iosfwd>
#include <string>

namespace deadbeat {

/// Plain-text matrix format: one row per line, entries as rational strings
/// separated by whitespace. Blank lines and lines starting with '#' are
/// skipped. Ragged rows are a parse error.
RationalMatrix parse_matrix(const std::string& text);
RationalMatrix read_matrix(std::istream& in);
RationalMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const RationalMatrix& m);
std::string format_matrix(const RationalMatrix& m);

std::string format_vector(const RationalVector& v);

}  // namespace deadbeat
