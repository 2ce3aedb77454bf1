#include "matchframe/wavelet.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace mframe {

WaveletMatrix::WaveletMatrix(const std::vector<std::uint32_t>& data) : n_(data.size()) {
    std::uint32_t maxv = 0;
    for (auto v : data) maxv = std::max(maxv, v);
    height_ = std::max(1, static_cast<int>(std::bit_width(maxv)));
    levels_.resize(height_);

    std::vector<std::uint32_t> cur = data, next(n_);
    const std::size_t nwords = n_ / 64 + 1;
    for (int lev = 0; lev < height_; ++lev) {
        Level& L = levels_[lev];
        L.bits.assign(nwords, 0);
        const int shift = height_ - 1 - lev;
        std::size_t nz = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u)
                L.bits[i >> 6] |= std::uint64_t{1} << (i & 63);
            else
                ++nz;
        }
        L.nzeros = nz;
        L.rank.assign(nwords + 1, 0);
        for (std::size_t w = 0; w < nwords; ++w)
            L.rank[w + 1] = L.rank[w] + static_cast<std::uint32_t>(std::popcount(L.bits[w]));
        // stable partition by the bit
        std::size_t z = 0, o = nz;
        for (std::size_t i = 0; i < n_; ++i) {
            if ((cur[i] >> shift) & 1u)
                next[o++] = cur[i];
            else
                next[z++] = cur[i];
        }
        cur.swap(next);
    }
}

std::uint32_t WaveletMatrix::descend_min(int level, std::size_t l, std::size_t r,
                                         std::uint32_t prefix) const {
    for (int lev = level; lev < height_; ++lev) {
        const Level& L = levels_[lev];
        const std::size_t l0 = L.rank0(l), r0 = L.rank0(r);
        if (r0 > l0) {
            l = l0;
            r = r0;
        } else {
            prefix |= std::uint32_t{1} << (height_ - 1 - lev);
            l = L.nzeros + (l - l0);
            r = L.nzeros + (r - r0);
        }
    }
    return prefix;
}

std::uint32_t WaveletMatrix::descend_max(int level, std::size_t l, std::size_t r,
                                         std::uint32_t prefix) const {
    for (int lev = level; lev < height_; ++lev) {
        const Level& L = levels_[lev];
        const std::size_t l0 = L.rank0(l), r0 = L.rank0(r);
        const std::size_t l1 = L.nzeros + (l - l0), r1 = L.nzeros + (r - r0);
        if (r1 > l1) {
            prefix |= std::uint32_t{1} << (height_ - 1 - lev);
            l = l1;
            r = r1;
        } else {
            l = l0;
            r = r0;
        }
    }
    return prefix;
}

std::uint32_t WaveletMatrix::succ(std::size_t l, std::size_t r, std::uint32_t q) const {
    assert(l <= r && r <= n_);
    if (l >= r) return kNone;
    if (height_ < 32 && q >= (std::uint32_t{1} << height_)) return kNone;
    // Walk q's bits; whenever we go left, the right sibling holds values with
    // a strictly larger prefix and is the fallback if the exact path dies.
    struct Fall {
        int level;
        std::size_t l, r;
        std::uint32_t prefix;
    };
    std::vector<Fall> falls;
    falls.reserve(height_);
    std::uint32_t prefix = 0;
    for (int lev = 0; lev < height_; ++lev) {
        const Level& L = levels_[lev];
        const std::size_t l0 = L.rank0(l), r0 = L.rank0(r);
        const std::size_t l1 = L.nzeros + (l - l0), r1 = L.nzeros + (r - r0);
        const std::uint32_t bit = std::uint32_t{1} << (height_ - 1 - lev);
        if (q & bit) {
            prefix |= bit;
            l = l1;
            r = r1;
        } else {
            if (r1 > l1) falls.push_back({lev + 1, l1, r1, prefix | bit});
            l = l0;
            r = r0;
        }
        if (l >= r) {
            if (falls.empty()) return kNone;
            const Fall f = falls.back();
            return descend_min(f.level, f.l, f.r, f.prefix);
        }
    }
    return prefix;  // q itself occurs in the range
}

std::uint32_t WaveletMatrix::pred(std::size_t l, std::size_t r, std::uint32_t q) const {
    assert(l <= r && r <= n_);
    if (l >= r) return kNone;
    if (height_ < 32 && q >= (std::uint32_t{1} << height_))
        q = (std::uint32_t{1} << height_) - 1;
    struct Fall {
        int level;
        std::size_t l, r;
        std::uint32_t prefix;
    };
    std::vector<Fall> falls;
    falls.reserve(height_);
    std::uint32_t prefix = 0;
    for (int lev = 0; lev < height_; ++lev) {
        const Level& L = levels_[lev];
        const std::size_t l0 = L.rank0(l), r0 = L.rank0(r);
        const std::size_t l1 = L.nzeros + (l - l0), r1 = L.nzeros + (r - r0);
        const std::uint32_t bit = std::uint32_t{1} << (height_ - 1 - lev);
        if (q & bit) {
            if (r0 > l0) falls.push_back({lev + 1, l0, r0, prefix});
            prefix |= bit;
            l = l1;
            r = r1;
        } else {
            l = l0;
            r = r0;
        }
        if (l >= r) {
            if (falls.empty()) return kNone;
            const Fall f = falls.back();
            return descend_max(f.level, f.l, f.r, f.prefix);
        }
    }
    return prefix;
}

}  // namespace mframe
