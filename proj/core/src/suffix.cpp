#include "matchframe/suffix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>

namespace mframe {

namespace {

// SA-IS, Nong/Zhang/Chan formulation. s has values in [0..K) and ends with a
// unique smallest sentinel s[n-1] = 0. Fills sa[0..n).
void sais(const std::int32_t* s, std::int32_t* sa, std::int32_t n, std::int32_t K) {
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    std::vector<std::uint8_t> t(n);
    t[n - 1] = 1;
    for (std::int32_t i = n - 2; i >= 0; --i)
        t[i] = (s[i] < s[i + 1] || (s[i] == s[i + 1] && t[i + 1])) ? 1 : 0;
    auto is_lms = [&](std::int32_t i) { return i > 0 && t[i] && !t[i - 1]; };

    std::vector<std::int32_t> bkt(K);
    auto buckets = [&](bool end) {
        std::fill(bkt.begin(), bkt.end(), 0);
        for (std::int32_t i = 0; i < n; ++i) ++bkt[s[i]];
        std::int32_t sum = 0;
        for (std::int32_t k = 0; k < K; ++k) {
            sum += bkt[k];
            bkt[k] = end ? sum : sum - bkt[k];
        }
    };
    auto induce = [&]() {
        buckets(false);
        for (std::int32_t i = 0; i < n; ++i) {
            std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && !t[j]) sa[bkt[s[j]]++] = j;
        }
        buckets(true);
        for (std::int32_t i = n - 1; i >= 0; --i) {
            std::int32_t j = sa[i] - 1;
            if (sa[i] > 0 && t[j]) sa[--bkt[s[j]]] = j;
        }
    };

    std::fill(sa, sa + n, -1);
    buckets(true);
    for (std::int32_t i = 1; i < n; ++i)
        if (is_lms(i)) sa[--bkt[s[i]]] = i;
    induce();

    // Compact the LMS positions in sorted order, then name LMS substrings.
    std::int32_t n1 = 0;
    for (std::int32_t i = 0; i < n; ++i)
        if (sa[i] > 0 && is_lms(sa[i])) sa[n1++] = sa[i];
    std::fill(sa + n1, sa + n, -1);
    std::int32_t names = 0, prev = -1;
    for (std::int32_t i = 0; i < n1; ++i) {
        std::int32_t pos = sa[i];
        bool diff = (prev < 0);
        for (std::int32_t d = 0; !diff; ++d) {
            if (s[pos + d] != s[prev + d] || t[pos + d] != t[prev + d]) {
                diff = true;
                break;
            }
            if (d > 0) {
                bool lp = is_lms(pos + d), lq = is_lms(prev + d);
                if (lp && lq) break;  // equal LMS substrings
                if (lp != lq) {
                    diff = true;
                    break;
                }
            }
        }
        if (diff) {
            ++names;
            prev = pos;
        }
        sa[n1 + pos / 2] = names - 1;
    }
    for (std::int32_t i = n - 1, j = n - 1; i >= n1; --i)
        if (sa[i] >= 0) sa[j--] = sa[i];

    // Reduced string lives in sa[n-n1..n); its suffix array goes to sa[0..n1).
    std::int32_t* s1 = sa + n - n1;
    if (names < n1) {
        sais(s1, sa, n1, names);
    } else {
        for (std::int32_t i = 0; i < n1; ++i) sa[s1[i]] = i;
    }
    // Reuse s1's slots for the LMS positions in order of appearance.
    for (std::int32_t i = 1, j = 0; i < n; ++i)
        if (is_lms(i)) s1[j++] = i;
    for (std::int32_t i = 0; i < n1; ++i) sa[i] = s1[sa[i]];
    std::fill(sa + n1, sa + n, -1);
    buckets(true);
    for (std::int32_t i = n1 - 1; i >= 0; --i) {
        std::int32_t j = sa[i];
        sa[i] = -1;
        sa[--bkt[s[j]]] = j;
    }
    induce();
}

}  // namespace

SuffixArray build_suffix_array(std::span<const Symbol> text) {
    if (text.empty()) throw std::invalid_argument("build_suffix_array: empty text");
    const std::int32_t n = static_cast<std::int32_t>(text.size());

    // Densify codes to [1..sigma]; append sentinel 0.
    std::vector<Symbol> sorted(text.begin(), text.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::int32_t> s(n + 1);
    for (std::int32_t i = 0; i < n; ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), text[i]);
        s[i] = static_cast<std::int32_t>(it - sorted.begin()) + 1;
    }
    s[n] = 0;

    std::vector<std::int32_t> sa(n + 1);
    sais(s.data(), sa.data(), n + 1, static_cast<std::int32_t>(sorted.size()) + 1);

    SuffixArray out;
    out.text_length = n;
    out.order.resize(n);
    for (std::int32_t k = 1; k <= n; ++k) out.order[k - 1] = sa[k] + 1;
    return out;
}

BlockRmq::BlockRmq(std::vector<std::int32_t> values) : values_(std::move(values)) {
    const std::size_t nb = (values_.size() + kBlock - 1) / kBlock;
    if (nb == 0) return;
    table_.emplace_back(nb);
    for (std::size_t b = 0; b < nb; ++b) {
        std::int32_t mn = values_[b * kBlock];
        const std::size_t end = std::min(values_.size(), (b + 1) * kBlock);
        for (std::size_t i = b * kBlock + 1; i < end; ++i) mn = std::min(mn, values_[i]);
        table_[0][b] = mn;
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= nb; ++k) {
        const std::size_t len = std::size_t{1} << k;
        table_.emplace_back(nb - len + 1);
        for (std::size_t b = 0; b + len <= nb; ++b)
            table_[k][b] = std::min(table_[k - 1][b], table_[k - 1][b + len / 2]);
    }
}

std::int32_t BlockRmq::min(std::size_t l, std::size_t r) const {
    assert(l <= r && r < values_.size());
    const std::size_t bl = l / kBlock, br = r / kBlock;
    if (bl == br) {
        std::int32_t mn = values_[l];
        for (std::size_t i = l + 1; i <= r; ++i) mn = std::min(mn, values_[i]);
        return mn;
    }
    std::int32_t mn = values_[l];
    for (std::size_t i = l + 1; i < (bl + 1) * kBlock; ++i) mn = std::min(mn, values_[i]);
    for (std::size_t i = br * kBlock; i <= r; ++i) mn = std::min(mn, values_[i]);
    if (bl + 1 <= br - 1) {
        const std::size_t a = bl + 1, b = br - 1;
        const std::size_t k = std::bit_width(b - a + 1) - 1;
        mn = std::min(mn, std::min(table_[k][a], table_[k][b - (std::size_t{1} << k) + 1]));
    }
    return mn;
}

LcpStructure::LcpStructure(std::vector<Symbol> text) : text_(std::move(text)) {
    if (text_.empty()) throw std::invalid_argument("LcpStructure: empty text");
    sa_ = build_suffix_array(text_);
    const int n = static_cast<int>(text_.size());
    rank_.resize(n);
    for (int k = 0; k < n; ++k) rank_[sa_.order[k] - 1] = k;
    // Kasai
    lcp_.assign(n > 1 ? n - 1 : 0, 0);
    int h = 0;
    for (int i = 0; i < n; ++i) {
        if (rank_[i] > 0) {
            int j = sa_.order[rank_[i] - 1] - 1;
            while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
            lcp_[rank_[i] - 1] = h;
            if (h > 0) --h;
        } else {
            h = 0;
        }
    }
    if (!lcp_.empty()) rmq_ = BlockRmq(lcp_);
}

int LcpStructure::query(int i, int j) const {
    const int n = static_cast<int>(text_.size());
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("LcpStructure::query: suffix start out of range");
    if (i == j) return n - i + 1;
    int a = rank_[i - 1], b = rank_[j - 1];
    if (a > b) std::swap(a, b);
    return rmq_.min(a, b - 1);
}

LexSortedArray::LexSortedArray(std::vector<std::int32_t> ids_in_lex_order)
    : entries_(std::move(ids_in_lex_order)) {
    inverse_.assign(entries_.size(), -1);
    for (std::size_t p = 0; p < entries_.size(); ++p) {
        const std::int32_t id = entries_[p];
        if (id < 1 || id > static_cast<std::int32_t>(entries_.size()) || inverse_[id - 1] != -1)
            throw std::invalid_argument("LexSortedArray: entries are not a permutation of [1..n]");
        inverse_[id - 1] = static_cast<std::int32_t>(p);
    }
}

int LexSortedArray::id_at(int pos) const {
    if (pos < 1 || pos > size()) throw std::out_of_range("LexSortedArray::id_at");
    return entries_[pos - 1];
}

int LexSortedArray::pos_of(int id) const {
    if (id < 1 || id > size()) throw std::out_of_range("LexSortedArray::pos_of");
    return inverse_[id - 1] + 1;
}

}  // namespace mframe
