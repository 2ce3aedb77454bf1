#include "matchframe/grid.hpp"

#include <algorithm>

namespace mframe {

Matrix Matrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty() || rows[0].empty())
        throw std::invalid_argument("Matrix::from_rows: need at least one non-empty row");
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows[0].size());
    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(n) * m);
    Symbol maxc = 0;
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != m)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (unsigned char c : r) {
            cells.push_back(c);
            maxc = std::max<Symbol>(maxc, c);
        }
    }
    return Matrix(n, m, std::move(cells), maxc);
}

Symbol Matrix::max_cell() const {
    return *std::max_element(cells_.begin(), cells_.end());
}

bool is_matching(const Matrix& m, const Frame& f) {
    m.check_bounds(f.u, f.l);
    m.check_bounds(f.d, f.r);
    for (int j = f.l; j <= f.r; ++j)
        if (m.at(f.u, j) != m.at(f.d, j)) return false;
    for (int i = f.u; i <= f.d; ++i)
        if (m.at(i, f.l) != m.at(i, f.r)) return false;
    return true;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows(), m.alphabet_max());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j) t.set(j, i, m.at(i, j));
    return t;
}

Matrix extract(const Matrix& m, int u1, int u2, int j1, int j2) {
    m.check_bounds(u1, j1);
    m.check_bounds(u2, j2);
    if (u1 > u2 || j1 > j2) throw std::invalid_argument("extract: empty block");
    Matrix out(u2 - u1 + 1, j2 - j1 + 1, m.alphabet_max());
    for (int i = u1; i <= u2; ++i)
        for (int j = j1; j <= j2; ++j) out.set(i - u1 + 1, j - j1 + 1, m.at(i, j));
    return out;
}

}  // namespace mframe
