#include "matchframe/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace mframe {

namespace {

ParsedMatrix read_raw(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        lines.push_back(line);
    }
    if (lines.empty()) throw ParseError("raw matrix: empty input");
    const std::size_t m = lines[0].size();
    if (m == 0) throw ParseError("raw matrix: empty first row");
    for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i].size() != m)
            throw ParseError("raw matrix: row " + std::to_string(i + 1) +
                             " has length " + std::to_string(lines[i].size()) +
                             ", expected " + std::to_string(m));
    return ParsedMatrix{Matrix::from_rows(lines), {}};
}

ParsedMatrix read_tokens(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("tokens matrix: missing 'n m' header");
    if (n < 1 || m < 1 || n > (1 << 20) || m > (1 << 20))
        throw ParseError("tokens matrix: invalid dimensions");
    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(n * m));
    std::unordered_map<std::string, Symbol> codes;
    std::vector<std::string> tokens;
    std::string tok;
    for (long long k = 0; k < n * m; ++k) {
        if (!(in >> tok)) throw ParseError("tokens matrix: expected " + std::to_string(n * m) +
                                           " tokens, got " + std::to_string(k));
        auto [it, fresh] = codes.emplace(tok, static_cast<Symbol>(tokens.size()));
        if (fresh) tokens.push_back(tok);
        cells.push_back(it->second);
    }
    const Symbol amax = tokens.empty() ? 0 : static_cast<Symbol>(tokens.size() - 1);
    return ParsedMatrix{
        Matrix(static_cast<int>(n), static_cast<int>(m), std::move(cells), amax),
        std::move(tokens)};
}

}  // namespace

ParsedMatrix read_matrix(std::istream& in, MatrixFormat format) {
    return format == MatrixFormat::kRaw ? read_raw(in) : read_tokens(in);
}

ParsedMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_matrix(in, format);
}

void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format,
                  const std::vector<std::string>* tokens) {
    if (format == MatrixFormat::kRaw) {
        for (int i = 1; i <= m.rows(); ++i) {
            for (int j = 1; j <= m.cols(); ++j) {
                const Symbol c = m.at(i, j);
                if (c > 255 || c == '\n' || c == '\r')
                    throw ParseError("raw matrix: code does not fit a raw byte");
                out.put(static_cast<char>(c));
            }
            out.put('\n');
        }
    } else {
        out << m.rows() << ' ' << m.cols() << '\n';
        for (int i = 1; i <= m.rows(); ++i) {
            for (int j = 1; j <= m.cols(); ++j) {
                const Symbol c = m.at(i, j);
                if (j > 1) out.put(' ');
                if (tokens && c < tokens->size())
                    out << (*tokens)[c];
                else
                    out << c;
            }
            out.put('\n');
        }
    }
}

Matrix canonicalize_codes(const Matrix& m) {
    std::unordered_map<Symbol, Symbol> remap;
    Matrix out(m.rows(), m.cols(), 0);
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) {
            auto [it, fresh] = remap.emplace(m.at(i, j), static_cast<Symbol>(remap.size()));
            out.set(i, j, it->second);
        }
    return Matrix(m.rows(), m.cols(), std::vector<Symbol>(out.cells()),
                  remap.empty() ? 0 : static_cast<Symbol>(remap.size() - 1));
}

}  // namespace mframe
