#include "matchframe/matrix_index.hpp"

#include <algorithm>
#include <cassert>

namespace mframe {
namespace detail {

namespace {

// Lightweight lex-sorted-array view over the flattened per-slice arrays,
// shaped for the generic fingerprint search.
struct LsaView {
    const std::int32_t* lsa;   // lex position (0-based index) -> id
    const std::int32_t* ilsa;  // id (0-based index) -> lex position
    int n;

    int size() const { return n; }
    int id_at(int pos) const { return lsa[pos - 1]; }
    int pos_of(int id) const { return ilsa[id - 1]; }
};

}  // namespace

DirectionIndex::DirectionIndex(const Matrix& mat, bool with_lsa, bool with_wavelets,
                               bool with_reversed, bool with_reversed_lsa)
    : n_(mat.rows()), m_(mat.cols()) {
    text_len_ = static_cast<std::int32_t>(n_) * (m_ + 1);

    // row1 $1 row2 $2 ... rown $n with $1 < $2 < ... < $n above every code
    // present (a masked matrix already carries codes above alphabet_max).
    const Symbol base = std::max(mat.alphabet_max(), mat.max_cell()) + 1;
    std::vector<Symbol> text;
    text.reserve(text_len_);
    for (int i = 1; i <= n_; ++i) {
        auto row = mat.row(i);
        text.insert(text.end(), row.begin(), row.end());
        text.push_back(base + static_cast<Symbol>(i - 1));
    }
    std::vector<Symbol> rev(text.rbegin(), text.rend());
    lcp_ = std::make_unique<LcpStructure>(std::move(text));
    if (with_reversed) rev_lcp_ = std::make_unique<LcpStructure>(std::move(rev));

    // Populate the per-slice lex-sorted arrays by one left-to-right scan of
    // the suffix array; suffixes starting at sentinel positions are skipped.
    auto populate = [&](const SuffixArray& sa, bool reversed, std::vector<std::int32_t>& lsa,
                        std::vector<std::int32_t>& ilsa) {
        const std::size_t total = static_cast<std::size_t>(n_) * m_;
        lsa.resize(total);
        ilsa.resize(total);
        std::vector<std::int32_t> cursor(m_ + 1, 0);
        for (std::int32_t p : sa.order) {
            if (reversed) p = text_len_ + 1 - p;
            const int l = p % (m_ + 1);
            if (l == 0) continue;
            const int i = (p - l) / (m_ + 1) + 1;
            const std::size_t off = static_cast<std::size_t>(l - 1) * n_;
            const std::int32_t k = cursor[l]++;
            lsa[off + k] = i;
            ilsa[off + (i - 1)] = k + 1;
        }
    };
    auto build_wavelets = [&](const std::vector<std::int32_t>& lsa,
                              const std::vector<std::int32_t>& ilsa,
                              std::vector<WaveletMatrix>& lex_of_row,
                              std::vector<WaveletMatrix>& row_of_lex) {
        lex_of_row.reserve(m_);
        row_of_lex.reserve(m_);
        std::vector<std::uint32_t> seq(n_);
        for (int l = 1; l <= m_; ++l) {
            const std::size_t off = static_cast<std::size_t>(l - 1) * n_;
            for (int k = 0; k < n_; ++k) seq[k] = static_cast<std::uint32_t>(ilsa[off + k] - 1);
            lex_of_row.emplace_back(seq);
            for (int k = 0; k < n_; ++k) seq[k] = static_cast<std::uint32_t>(lsa[off + k] - 1);
            row_of_lex.emplace_back(seq);
        }
    };

    if (with_lsa) {
        populate(lcp_->suffix_array(), false, lsa_, ilsa_);
        if (with_wavelets) build_wavelets(lsa_, ilsa_, lex_of_row_, row_of_lex_);
    }
    if (with_reversed && with_reversed_lsa) {
        populate(rev_lcp_->suffix_array(), true, rev_lsa_, rev_ilsa_);
        if (with_wavelets) build_wavelets(rev_lsa_, rev_ilsa_, rev_lex_of_row_, rev_row_of_lex_);
    }
}

void DirectionIndex::check_slice(int l) const {
    if (l < 1 || l > m_) throw std::out_of_range("MatrixIndex: slice out of range");
}

void DirectionIndex::check_id(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("MatrixIndex: id out of range");
}

int DirectionIndex::lcp(int l, int i, int j) const {
    check_slice(l);
    check_id(i);
    check_id(j);
    const int cap = m_ - l + 1;
    if (i == j) return cap;
    const int raw = lcp_->query(fwd_pos(i, l), fwd_pos(j, l));
    assert(raw <= cap);
    return raw;
}

int DirectionIndex::rev_lcp(int l, int i, int j) const {
    check_slice(l);
    check_id(i);
    check_id(j);
    if (i == j) return l;
    const int raw = rev_lcp_->query(rev_pos(i, l), rev_pos(j, l));
    assert(raw <= l);
    return raw;
}

Fingerprint DirectionIndex::slice_fingerprint(int l, int i, int t) const {
    check_slice(l);
    check_id(i);
    if (t < 0 || t > m_ - l + 1)
        throw std::invalid_argument("MatrixIndex: fingerprint length out of range");
    const std::size_t off = static_cast<std::size_t>(l - 1) * n_;
    LsaView view{lsa_.data() + off, ilsa_.data() + off, n_};
    return fingerprint(
        view, [&](int a, int b) { return lcp(l, a, b); }, i, m_ - l + 1, t);
}

int DirectionIndex::lsa_id(int l, int pos) const {
    check_slice(l);
    if (pos < 1 || pos > n_) throw std::out_of_range("MatrixIndex: lex position out of range");
    return lsa_[static_cast<std::size_t>(l - 1) * n_ + (pos - 1)];
}

int DirectionIndex::lsa_pos(int l, int i) const {
    check_slice(l);
    check_id(i);
    return ilsa_[static_cast<std::size_t>(l - 1) * n_ + (i - 1)];
}

int DirectionIndex::rev_lsa_id(int l, int pos) const {
    check_slice(l);
    if (pos < 1 || pos > n_) throw std::out_of_range("MatrixIndex: lex position out of range");
    return rev_lsa_[static_cast<std::size_t>(l - 1) * n_ + (pos - 1)];
}

int DirectionIndex::rev_lsa_pos(int l, int i) const {
    check_slice(l);
    check_id(i);
    return rev_ilsa_[static_cast<std::size_t>(l - 1) * n_ + (i - 1)];
}

std::optional<std::pair<int, int>> DirectionIndex::range_query(int l, int i1, int i2, int a,
                                                               int b, RangeObjective obj) const {
    check_slice(l);
    i1 = std::max(i1, 1);
    i2 = std::min(i2, n_);
    a = std::max(a, 1);
    b = std::min(b, n_);
    if (i1 > i2 || a > b) return std::nullopt;
    const std::size_t off = static_cast<std::size_t>(l - 1) * n_;
    const WaveletMatrix& by_row = lex_of_row_[l - 1];
    const WaveletMatrix& by_lex = row_of_lex_[l - 1];
    switch (obj) {
        case RangeObjective::kMinSecond: {
            const auto lex = by_row.succ(i1 - 1, i2, static_cast<std::uint32_t>(a - 1));
            if (lex == WaveletMatrix::kNone || lex > static_cast<std::uint32_t>(b - 1))
                return std::nullopt;
            return std::pair{static_cast<int>(lsa_[off + lex]), static_cast<int>(lex) + 1};
        }
        case RangeObjective::kMaxSecond: {
            const auto lex = by_row.pred(i1 - 1, i2, static_cast<std::uint32_t>(b - 1));
            if (lex == WaveletMatrix::kNone || lex < static_cast<std::uint32_t>(a - 1))
                return std::nullopt;
            return std::pair{static_cast<int>(lsa_[off + lex]), static_cast<int>(lex) + 1};
        }
        case RangeObjective::kMinFirst: {
            const auto row = by_lex.succ(a - 1, b, static_cast<std::uint32_t>(i1 - 1));
            if (row == WaveletMatrix::kNone || row > static_cast<std::uint32_t>(i2 - 1))
                return std::nullopt;
            return std::pair{static_cast<int>(row) + 1, static_cast<int>(ilsa_[off + row])};
        }
        case RangeObjective::kMaxFirst: {
            const auto row = by_lex.pred(a - 1, b, static_cast<std::uint32_t>(i2 - 1));
            if (row == WaveletMatrix::kNone || row < static_cast<std::uint32_t>(i1 - 1))
                return std::nullopt;
            return std::pair{static_cast<int>(row) + 1, static_cast<int>(ilsa_[off + row])};
        }
    }
    return std::nullopt;
}

}  // namespace detail

MatrixIndex::MatrixIndex(const Matrix& m, IndexOptions opts)
    : rows_(m, opts.rows_lsa, opts.rows_wavelets, opts.reversed, opts.reversed_lsa),
      cols_(transpose(m), opts.cols_lsa, opts.cols_wavelets, opts.reversed, opts.reversed_lsa) {}

}  // namespace mframe
