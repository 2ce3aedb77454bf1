#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "matchframe/grid.hpp"

namespace mframe {

// raw: lines of equal length, one byte per cell, code = byte value.
// tokens: header "n m", then n lines of m whitespace-separated tokens mapped
// to codes in first-occurrence order.
enum class MatrixFormat { kRaw, kTokens };

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedMatrix {
    Matrix matrix;
    std::vector<std::string> tokens;  // code -> token text; empty in raw mode
};

ParsedMatrix read_matrix(std::istream& in, MatrixFormat format);
ParsedMatrix read_matrix_file(const std::string& path, MatrixFormat format);

// In raw mode every code must fit in a byte and not collide with '\n'/'\r'.
// In tokens mode codes are written via the token table when provided,
// otherwise as decimal numbers.
void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format,
                  const std::vector<std::string>* tokens = nullptr);

// Renumber codes in first-occurrence order (tokens-mode round-trip identity).
Matrix canonicalize_codes(const Matrix& m);

}  // namespace mframe
