#include "matchframe/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace mframe {
namespace oracle {

namespace {

bool better(const std::optional<Frame>& best, const Frame& cand) {
    if (!best) return true;
    if (cand.perimeter() != best->perimeter()) return cand.perimeter() > best->perimeter();
    return cand < *best;
}

template <typename S>
int naive_lcp(const S& a, const S& b) {
    const std::size_t cap = std::min(a.size(), b.size());
    std::size_t k = 0;
    while (k < cap && a[k] == b[k]) ++k;
    return static_cast<int>(k);
}

template <typename S>
std::set<std::pair<int, int>> interesting_pairs_impl(const std::vector<S>& tuple) {
    if (tuple.size() > 200)
        throw std::invalid_argument("brute_interesting_pairs: tuple too large for the oracle");
    const int n = static_cast<int>(tuple.size());
    std::set<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const int lij = naive_lcp(tuple[i - 1], tuple[j - 1]);
            bool ok = true;
            for (int k = i + 1; k < j && ok; ++k)
                ok = naive_lcp(tuple[i - 1], tuple[k - 1]) < lij;
            if (ok) out.emplace(i, j);
        }
    }
    return out;
}

}  // namespace

std::optional<Frame> brute_max_frame(const Matrix& m) {
    if (static_cast<long long>(m.rows()) * m.cols() > 2048)
        throw std::invalid_argument("brute_max_frame: matrix too large for the oracle");
    std::optional<Frame> best;
    for (int u = 1; u < m.rows(); ++u)
        for (int d = u + 1; d <= m.rows(); ++d)
            for (int l = 1; l < m.cols(); ++l)
                for (int r = l + 1; r <= m.cols(); ++r) {
                    Frame f(u, d, l, r);
                    if (is_matching(m, f) && better(best, f)) best = f;
                }
    return best;
}

std::set<std::pair<int, int>> brute_interesting_pairs(
    const std::vector<std::vector<Symbol>>& tuple) {
    return interesting_pairs_impl(tuple);
}

std::set<std::pair<int, int>> brute_interesting_pairs(const std::vector<std::string>& tuple) {
    return interesting_pairs_impl(tuple);
}

std::optional<VerticalAlignedPair> brute_max_compatible(
    const std::vector<VerticalAlignedPair>& pairs, const HorizontalAlignedPair& h) {
    std::optional<VerticalAlignedPair> best;
    for (const auto& p : pairs) {
        const bool compatible =
            p.a1 <= h.i1 && h.i2 <= p.a2 && h.j1 <= p.b1 && p.b2 <= h.j2;
        if (!compatible) continue;
        if (!best || p.distance() > best->distance() ||
            (p.distance() == best->distance() &&
             std::tie(p.a1, p.a2, p.b1, p.b2) < std::tie(best->a1, best->a2, best->b1, best->b2)))
            best = p;
    }
    return best;
}

std::optional<Frame> brute_surrounding(const Matrix& m, const InnerRectangle& inner) {
    if (static_cast<long long>(m.rows()) * m.cols() > 2048)
        throw std::invalid_argument("brute_surrounding: matrix too large for the oracle");
    std::optional<Frame> best;
    for (int u = 1; u < inner.u; ++u)
        for (int d = inner.d + 1; d <= m.rows(); ++d) {
            if (u >= d) continue;
            for (int l = 1; l < inner.l; ++l)
                for (int r = inner.r + 1; r <= m.cols(); ++r) {
                    if (l >= r) continue;
                    Frame f(u, d, l, r);
                    if (is_matching(m, f) && better(best, f)) best = f;
                }
        }
    return best;
}

}  // namespace oracle
}  // namespace mframe
