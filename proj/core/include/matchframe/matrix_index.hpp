#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "matchframe/grid.hpp"
#include "matchframe/suffix.hpp"
#include "matchframe/wavelet.hpp"

namespace mframe {

// Which structure families to build. The default builds everything; the
// solvers request only what they query.
struct IndexOptions {
    bool rows_lsa = true;       // per-column lex-sorted arrays of row suffixes
    bool cols_lsa = true;       // per-row lex-sorted arrays of column suffixes
    bool rows_wavelets = true;  // 2D range structures over (row, lex position)
    bool cols_wavelets = true;
    bool reversed = true;       // LCP structures over the reversed concatenations
    bool reversed_lsa = true;   // lex-sorted arrays / range structures of reversed slices
};

enum class RangeObjective { kMinFirst, kMaxFirst, kMinSecond, kMaxSecond };

namespace detail {

// Index of one orientation: the "row" structures of a matrix. Column
// structures of the original matrix are the row structures of its transpose.
//
// Everything hangs off the concatenation row1·$1·row2·$2·...·rown·$n with
// strictly increasing sentinels above every code present in the matrix, plus
// the reversed concatenation for leftward queries. The mapping from (row,
// column) to concatenation position is centralized here; it is the only
// index arithmetic in the module.
class DirectionIndex {
  public:
    DirectionIndex(const Matrix& mat, bool with_lsa, bool with_wavelets, bool with_reversed,
                   bool with_reversed_lsa);

    int n() const { return n_; }
    int m() const { return m_; }

    // LCP of M[i][l..m] and M[j][l..m].
    int lcp(int l, int i, int j) const;
    // LCP of the reversed prefixes ending at column l.
    int rev_lcp(int l, int i, int j) const;

    Fingerprint slice_fingerprint(int l, int i, int t) const;

    int lsa_id(int l, int pos) const;   // lex position -> row id
    int lsa_pos(int l, int i) const;    // row id -> lex position
    int rev_lsa_id(int l, int pos) const;
    int rev_lsa_pos(int l, int i) const;

    // Argmin/argmax over the points {(i, lsa_pos(l, i))} restricted to the
    // box [i1..i2] x [a..b]. Returns (row, lex position).
    std::optional<std::pair<int, int>> range_query(int l, int i1, int i2, int a, int b,
                                                   RangeObjective obj) const;

    bool has_lsa() const { return !lsa_.empty(); }
    bool has_wavelets() const { return !lex_of_row_.empty(); }
    bool has_reversed() const { return rev_lcp_ != nullptr; }
    bool has_reversed_lsa() const { return !rev_lsa_.empty(); }

  private:
    std::int32_t fwd_pos(int i, int l) const {
        return static_cast<std::int32_t>(i - 1) * (m_ + 1) + l;
    }
    std::int32_t rev_pos(int i, int l) const { return text_len_ + 1 - fwd_pos(i, l); }

    void check_slice(int l) const;
    void check_id(int i) const;

    int n_ = 0;
    int m_ = 0;
    std::int32_t text_len_ = 0;
    std::unique_ptr<LcpStructure> lcp_;
    std::unique_ptr<LcpStructure> rev_lcp_;
    std::vector<std::int32_t> lsa_, ilsa_;          // flattened [m][n], 1-based values
    std::vector<std::int32_t> rev_lsa_, rev_ilsa_;
    std::vector<WaveletMatrix> lex_of_row_;         // per l, sequence ilsa-1
    std::vector<WaveletMatrix> row_of_lex_;         // per l, sequence lsa-1
    std::vector<WaveletMatrix> rev_lex_of_row_, rev_row_of_lex_;
};

}  // namespace detail

// The preprocessing bundle for matching-frame search: for each column l,
// lex-sorted arrays / constant-time LCP / 2D range structures over the row
// suffixes starting at l and over the reversed row prefixes ending at l, and
// the symmetric per-row structures for columns.
class MatrixIndex {
  public:
    explicit MatrixIndex(const Matrix& m, IndexOptions opts = {});

    int rows() const { return rows_.n(); }
    int cols() const { return rows_.m(); }

    // Horizontal agreements. row_lcp: longest t with M[i][l..l+t-1] = M[j][l..l+t-1].
    int row_lcp(int l, int i, int j) const { return rows_.lcp(l, i, j); }
    // rev_row_lcp: longest t with M[i][l-t+1..l] = M[j][l-t+1..l].
    int rev_row_lcp(int l, int i, int j) const { return rows_.rev_lcp(l, i, j); }

    // Vertical agreements, downward from row u / upward to row u.
    int col_lcp(int u, int j1, int j2) const { return cols_.lcp(u, j1, j2); }
    int rev_col_lcp(int u, int j1, int j2) const { return cols_.rev_lcp(u, j1, j2); }

    // Lex-range of rows whose length-t substring starting at column l equals
    // that of row i; symmetric for columns.
    Fingerprint row_fingerprint(int l, int i, int t) const {
        return rows_.slice_fingerprint(l, i, t);
    }
    Fingerprint col_fingerprint(int u, int j, int t) const {
        return cols_.slice_fingerprint(u, j, t);
    }

    int row_lsa_id(int l, int pos) const { return rows_.lsa_id(l, pos); }
    int row_lsa_pos(int l, int i) const { return rows_.lsa_pos(l, i); }
    int col_lsa_id(int u, int pos) const { return cols_.lsa_id(u, pos); }
    int col_lsa_pos(int u, int j) const { return cols_.lsa_pos(u, j); }
    int rev_row_lsa_id(int l, int pos) const { return rows_.rev_lsa_id(l, pos); }
    int rev_col_lsa_id(int u, int pos) const { return cols_.rev_lsa_id(u, pos); }

    // Boxed argmin/argmax over {(i, row_lsa_pos(l, i))}: rowbox [i1..i2],
    // lexbox [a..b]. Boxes may extend past the valid domain; they are clamped.
    std::optional<std::pair<int, int>> row_range_query(int l, int i1, int i2, int a, int b,
                                                       RangeObjective obj) const {
        return rows_.range_query(l, i1, i2, a, b, obj);
    }
    std::optional<std::pair<int, int>> col_range_query(int u, int j1, int j2, int a, int b,
                                                       RangeObjective obj) const {
        return cols_.range_query(u, j1, j2, a, b, obj);
    }

  private:
    detail::DirectionIndex rows_;
    detail::DirectionIndex cols_;
};

}  // namespace mframe
