#pragma once

#include <cstdint>
#include <vector>

#include "matchframe/grid.hpp"

namespace mframe {

// Polynomial strip hashes over a matrix, mod 2^64 with an odd base. Hash
// equality is necessary for string equality, which is all the window
// prefilter needs: collisions can only cost time, never correctness.
//
// Layouts are chosen for the filter's access pattern: row strips are probed
// for consecutive rows at fixed columns, so the row table is column-major
// (and the column table row-major).
class PrefixHash2D {
  public:
    explicit PrefixHash2D(const Matrix& m);

    // Hash of M[i][c1..c2], 1-based inclusive.
    std::uint64_t row_strip(int i, int c1, int c2) const {
        return row_pre_[static_cast<std::size_t>(c2) * n_ + (i - 1)] -
               row_pre_[static_cast<std::size_t>(c1 - 1) * n_ + (i - 1)] * pow_[c2 - c1 + 1];
    }
    // Hash of M[r1..r2][j].
    std::uint64_t col_strip(int j, int r1, int r2) const {
        return col_pre_[static_cast<std::size_t>(r2) * m_ + (j - 1)] -
               col_pre_[static_cast<std::size_t>(r1 - 1) * m_ + (j - 1)] * pow_[r2 - r1 + 1];
    }

  private:
    int n_, m_;
    std::vector<std::uint64_t> row_pre_;  // [column][row]: prefix of row up to column
    std::vector<std::uint64_t> col_pre_;  // [row][column]: prefix of column up to row
    std::vector<std::uint64_t> pow_;
};

}  // namespace mframe
