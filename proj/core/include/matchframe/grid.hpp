#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mframe {

// Symbol codes are non-negative integers. Codes above Matrix::alphabet_max()
// are sentinels (row/column separators, masked cells) and must be pairwise
// distinct within the structure that introduced them.
using Symbol = std::uint32_t;

// A rectangle (u,d,l,r) with u < d and l < r, 1-based inclusive coordinates.
struct Frame {
    int u = 1;
    int d = 2;
    int l = 1;
    int r = 2;

    Frame() = default;
    Frame(int u_, int d_, int l_, int r_) : u(u_), d(d_), l(l_), r(r_) {
        if (u < 1 || l < 1 || u >= d || l >= r)
            throw std::invalid_argument("Frame: requires 1 <= u < d and 1 <= l < r");
    }

    // Number of cells on the marginal rows and columns: 2*((d-u)+(r-l)).
    int perimeter() const { return 2 * ((d - u) + (r - l)); }

    friend bool operator==(const Frame& a, const Frame& b) {
        return a.u == b.u && a.d == b.d && a.l == b.l && a.r == b.r;
    }
    friend bool operator<(const Frame& a, const Frame& b) {
        return std::tie(a.u, a.l, a.d, a.r) < std::tie(b.u, b.l, b.d, b.r);
    }
};

struct Position {
    int i = 1;
    int j = 1;
};

// Inner rectangle for surrounding-frame search, 1-based and relative to the
// matrix it refers to. A frame (u,d,l,r) surrounds it iff u < inner.u,
// d > inner.d, l < inner.l and r > inner.r. May be empty (u > d or l > r).
struct InnerRectangle {
    int u, d, l, r;
};

// An n x m grid of symbol codes, 1-based accessors. Immutable in spirit:
// mutation happens only while a matrix is being assembled (generators,
// masking); all queries are const and safe for concurrent readers.
class Matrix {
  public:
    Matrix(int rows, int cols, Symbol alphabet_max)
        : rows_(rows), cols_(cols), alphabet_max_(alphabet_max),
          cells_(static_cast<std::size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: dimensions must be >= 1");
    }

    Matrix(int rows, int cols, std::vector<Symbol> cells, Symbol alphabet_max)
        : rows_(rows), cols_(cols), alphabet_max_(alphabet_max), cells_(std::move(cells)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Matrix: dimensions must be >= 1");
        if (cells_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("Matrix: cell count does not match dimensions");
    }

    // Convenience: one byte per cell, byte value = symbol code.
    static Matrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Symbol alphabet_max() const { return alphabet_max_; }

    Symbol at(int i, int j) const { return cells_[idx(i, j)]; }
    void set(int i, int j, Symbol v) { cells_[idx(i, j)] = v; }

    std::span<const Symbol> row(int i) const {
        return {cells_.data() + static_cast<std::size_t>(i - 1) * cols_,
                static_cast<std::size_t>(cols_)};
    }
    const std::vector<Symbol>& cells() const { return cells_; }

    Symbol max_cell() const;

    void check_bounds(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("Matrix: position out of range");
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

  private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * cols_ + (j - 1);
    }

    int rows_;
    int cols_;
    Symbol alphabet_max_;
    std::vector<Symbol> cells_;
};

// True iff M[u][l..r] = M[d][l..r] and M[u..d][l] = M[u..d][r].
bool is_matching(const Matrix& m, const Frame& f);

Matrix transpose(const Matrix& m);

// Copy of the rectangular block rows [u1..u2] x cols [j1..j2], 1-based inclusive.
Matrix extract(const Matrix& m, int u1, int u2, int j1, int j2);

}  // namespace mframe
