#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

namespace mframe {

// Wavelet matrix over a static sequence of 32-bit values. Supports the two
// order queries the matrix index needs:
//   succ(l, r, q): smallest value >= q at positions [l, r)
//   pred(l, r, q): largest value <= q at positions [l, r)
// Both run in O(log U) where U is the value universe.
class WaveletMatrix {
  public:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    WaveletMatrix() = default;
    explicit WaveletMatrix(const std::vector<std::uint32_t>& data);

    std::size_t size() const { return n_; }
    std::uint32_t succ(std::size_t l, std::size_t r, std::uint32_t q) const;
    std::uint32_t pred(std::size_t l, std::size_t r, std::uint32_t q) const;

  private:
    struct Level {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint32_t> rank;  // ones in words [0..w)
        std::size_t nzeros = 0;

        std::size_t rank1(std::size_t p) const {
            return rank[p >> 6] + std::popcount(bits[p >> 6] & ((std::uint64_t{1} << (p & 63)) - 1));
        }
        std::size_t rank0(std::size_t p) const { return p - rank1(p); }
    };

    // Continue from (level, l, r) picking the smallest/largest value.
    std::uint32_t descend_min(int level, std::size_t l, std::size_t r, std::uint32_t prefix) const;
    std::uint32_t descend_max(int level, std::size_t l, std::size_t r, std::uint32_t prefix) const;

    std::size_t n_ = 0;
    int height_ = 0;
    std::vector<Level> levels_;  // level 0 = most significant bit
};

}  // namespace mframe
