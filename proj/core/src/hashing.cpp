#include "matchframe/hashing.hpp"

#include <algorithm>

namespace mframe {

namespace {

constexpr std::uint64_t kBase = 0x9e3779b97f4a7c15ULL | 1ULL;

}  // namespace

PrefixHash2D::PrefixHash2D(const Matrix& m) : n_(m.rows()), m_(m.cols()) {
    const int top = std::max(n_, m_) + 1;
    pow_.resize(top + 1);
    pow_[0] = 1;
    for (int k = 1; k <= top; ++k) pow_[k] = pow_[k - 1] * kBase;

    row_pre_.assign(static_cast<std::size_t>(m_ + 1) * n_, 0);
    for (int i = 1; i <= n_; ++i) {
        std::uint64_t h = 0;
        for (int j = 1; j <= m_; ++j) {
            h = h * kBase + m.at(i, j) + 1;
            row_pre_[static_cast<std::size_t>(j) * n_ + (i - 1)] = h;
        }
    }
    col_pre_.assign(static_cast<std::size_t>(n_ + 1) * m_, 0);
    for (int j = 1; j <= m_; ++j) {
        std::uint64_t h = 0;
        for (int i = 1; i <= n_; ++i) {
            h = h * kBase + m.at(i, j) + 1;
            col_pre_[static_cast<std::size_t>(i) * m_ + (j - 1)] = h;
        }
    }
}

}  // namespace mframe
