#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "matchframe/grid.hpp"

namespace mframe {

// Suffix start positions (1-based) in lexicographic order of the suffixes.
struct SuffixArray {
    int text_length = 0;
    std::vector<std::int32_t> order;
};

// SA-IS over an arbitrary integer alphabet (codes are rank-densified first,
// so wide alphabets cost one extra sort and nothing else).
SuffixArray build_suffix_array(std::span<const Symbol> text);

// Range-minimum over a static int32 array: 32-entry blocks scanned directly,
// sparse table over block minima.
class BlockRmq {
  public:
    BlockRmq() = default;
    explicit BlockRmq(std::vector<std::int32_t> values);
    // Minimum of values[l..r], inclusive, 0-based. Requires l <= r.
    std::int32_t min(std::size_t l, std::size_t r) const;

  private:
    static constexpr std::size_t kBlock = 32;
    std::vector<std::int32_t> values_;
    std::vector<std::vector<std::int32_t>> table_;  // table_[k][b]: min over 2^k blocks from b
};

// Pairwise LCP of suffixes of one text in O(1) per query: suffix array +
// Kasai LCP array + idempotent range-minimum precomputation.
class LcpStructure {
  public:
    explicit LcpStructure(std::vector<Symbol> text);

    int text_length() const { return static_cast<int>(text_.size()); }
    const SuffixArray& suffix_array() const { return sa_; }

    // LCP length of the suffixes starting at i and j (1-based).
    int query(int i, int j) const;

  private:
    std::vector<Symbol> text_;
    SuffixArray sa_;
    std::vector<std::int32_t> rank_;  // rank_[p]: 0-based lex rank of suffix p+1
    std::vector<std::int32_t> lcp_;   // lcp_[k]: LCP(order[k], order[k+1])
    BlockRmq rmq_;
};

// Identifiers of a string tuple sorted lexicographically, plus the inverse
// permutation. Ties are expected to be broken by id (callers construct the
// order; the invariant is checked only in debug builds).
class LexSortedArray {
  public:
    LexSortedArray() = default;
    explicit LexSortedArray(std::vector<std::int32_t> ids_in_lex_order);

    int size() const { return static_cast<int>(entries_.size()); }
    int id_at(int pos) const;   // 1-based position -> string id
    int pos_of(int id) const;   // string id -> 1-based position
    const std::vector<std::int32_t>& entries() const { return entries_; }

  private:
    std::vector<std::int32_t> entries_;  // entries_[p]: id at lex position p+1
    std::vector<std::int32_t> inverse_;  // inverse_[id-1]: 0-based lex position
};

// Lex-range [lo..hi] of the strings sharing a given length-len prefix.
struct Fingerprint {
    int lo = 1;
    int hi = 1;
    int len = 0;

    friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
        return a.lo == b.lo && a.hi == b.hi && a.len == b.len;
    }
};

// Fingerprint of S_id[1..prefix_len] within the tuple ordered by `lsa`,
// which needs size()/id_at(pos)/pos_of(id). `lcp(a, b)` must return the LCP
// length of strings a and b by id. Binary search outward from id's own lex
// position.
template <typename Lsa, typename LcpFn>
Fingerprint fingerprint(const Lsa& lsa, LcpFn&& lcp, int id, int id_len, int prefix_len) {
    if (prefix_len < 0 || prefix_len > id_len)
        throw std::invalid_argument("fingerprint: prefix length out of range");
    const int n = lsa.size();
    const int p = lsa.pos_of(id);
    // Shares the prefix with id; positions satisfying this form a contiguous
    // lex range around p.
    auto shares = [&](int pos) { return lcp(lsa.id_at(pos), id) >= prefix_len; };
    int lo = p;
    for (int step = 1, cur = p; cur > 1;) {
        int cand = cur - step;
        if (cand < 1) cand = 1;
        if (shares(cand)) {
            cur = cand;
            lo = cand;
            step *= 2;
        } else {
            // binary search in (cand, cur)
            int bad = cand, good = cur;
            while (good - bad > 1) {
                int mid = bad + (good - bad) / 2;
                if (shares(mid))
                    good = mid;
                else
                    bad = mid;
            }
            lo = good;
            break;
        }
    }
    int hi = p;
    for (int step = 1, cur = p; cur < n;) {
        int cand = cur + step;
        if (cand > n) cand = n;
        if (shares(cand)) {
            cur = cand;
            hi = cand;
            step *= 2;
        } else {
            int bad = cand, good = cur;
            while (bad - good > 1) {
                int mid = good + (bad - good) / 2;
                if (shares(mid))
                    good = mid;
                else
                    bad = mid;
            }
            hi = good;
            break;
        }
    }
    return Fingerprint{lo, hi, prefix_len};
}

}  // namespace mframe
