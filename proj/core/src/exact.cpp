#include "matchframe/exact.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "matchframe/parallel.hpp"
#include "matchframe/scds.hpp"

namespace mframe {

namespace {

// perimeter first, then lexicographically smallest (u,l,d,r)
bool better(const std::optional<Frame>& best, const Frame& cand) {
    if (!best) return true;
    if (cand.perimeter() != best->perimeter()) return cand.perimeter() > best->perimeter();
    return cand < *best;
}

void take(std::optional<Frame>& best, const std::optional<Frame>& cand) {
    if (cand && better(best, *cand)) best = *cand;
}

Frame transpose_frame(const Frame& f) { return Frame(f.l, f.r, f.u, f.d); }

// Leftmost/rightmost occurrence per vertical-string class inside one maximal
// range. Two columns share a class iff their length-t fingerprints in
// LSA_columns^u coincide; the classes are contiguous in lex order, so they
// are recovered by sorting the range's columns by lex position and splitting
// where adjacent LCP drops below t. One LCP probe per column instead of a
// fingerprint search per column.
std::optional<Frame> short_search_rows(const Matrix& m, const MatrixIndex& x_idx, int x, int u_lo,
                                       int u_hi, std::vector<std::pair<int, int>>& buf) {
    std::optional<Frame> best;
    for (int u = u_lo; u <= u_hi; ++u) {
        const int dmax = std::min(m.rows(), u + x);
        for (int d = u + 1; d <= dmax; ++d) {
            const int t = d - u + 1;
            for (const auto& [a, b] : maximal_equal_ranges(m, u, d)) {
                // b-a bounds the width of any candidate from this range;
                // ranges that cannot reach the current perimeter are skipped
                // (ties are kept, so the tie-break is unaffected).
                if (best && 2 * ((d - u) + (b - a)) < best->perimeter()) continue;
                buf.clear();
                for (int k = a; k <= b; ++k) buf.emplace_back(x_idx.col_lsa_pos(u, k), k);
                std::sort(buf.begin(), buf.end());
                int first = buf[0].second, last = buf[0].second;
                for (std::size_t q = 1; q <= buf.size(); ++q) {
                    const bool split =
                        q == buf.size() ||
                        x_idx.col_lcp(u, buf[q - 1].second, buf[q].second) < t;
                    if (!split) {
                        first = std::min(first, buf[q].second);
                        last = std::max(last, buf[q].second);
                        continue;
                    }
                    if (last > first) take(best, Frame(u, d, first, last));
                    if (q < buf.size()) first = last = buf[q].second;
                }
            }
        }
    }
    return best;
}

}  // namespace

std::vector<std::pair<int, int>> maximal_equal_ranges(const Matrix& m, int u, int d) {
    if (u >= d) throw std::invalid_argument("maximal_equal_ranges: requires u < d");
    m.check_bounds(u, 1);
    m.check_bounds(d, 1);
    std::vector<std::pair<int, int>> out;
    const auto ru = m.row(u), rd = m.row(d);
    int j = 0;
    const int mm = m.cols();
    while (j < mm) {
        if (ru[j] != rd[j]) {
            ++j;
            continue;
        }
        int k = j;
        while (k + 1 < mm && ru[k + 1] == rd[k + 1]) ++k;
        out.emplace_back(j + 1, k + 1);
        j = k + 1;
    }
    return out;
}

std::optional<Frame> short_frame_search(const Matrix& m, const MatrixIndex& x_idx, int x,
                                        const SolverOptions& opts) {
    if (x < 1) throw std::invalid_argument("short_frame_search: x must be >= 1");
    x = std::min(x, m.rows() - 1);
    if (x < 1) return std::nullopt;

    const int n = m.rows();
    if (opts.threads <= 1) {
        std::vector<std::pair<int, int>> buf;
        return short_search_rows(m, x_idx, x, 1, n - 1, buf);
    }
    std::optional<Frame> best;
    std::mutex mu;
    parallel_chunks(n - 1, opts.threads, [&](std::size_t b, std::size_t e) {
        std::vector<std::pair<int, int>> buf;
        auto local = short_search_rows(m, x_idx, x, static_cast<int>(b) + 1,
                                       static_cast<int>(e), buf);
        std::lock_guard<std::mutex> lock(mu);
        take(best, local);
    });
    return best;
}

std::optional<Frame> phw_frame_search(const Matrix& m, const MatrixIndex& x_idx, Position p,
                                      int big_h, int big_w) {
    if (big_h < 1 || big_w < 1)
        throw std::invalid_argument("phw_frame_search: H and W must be >= 1");
    m.check_bounds(p.i, p.j);
    const int n = m.rows(), mm = m.cols();
    const int i = p.i, j = p.j;

    // Vertical aligned pairs: for every column pair (l,r) with width in
    // [ceil(W/2)..W] spanning column j, the maximal agreement through row i.
    // Row spans are clamped to [i-H, i+H]; every query issued below lies
    // inside that band, so compatibility is unchanged.
    std::vector<VerticalAlignedPair> pairs;
    const int wlo = (big_w + 1) / 2;
    for (int w = wlo; w <= big_w; ++w) {
        const int l_from = std::max(1, j - w);
        const int l_to = std::min(j, mm - w);
        for (int l = l_from; l <= l_to; ++l) {
            const int r = l + w;
            if (m.at(i, l) != m.at(i, r)) continue;
            const int down = x_idx.col_lcp(i, l, r);
            const int up = x_idx.rev_col_lcp(i, l, r);
            const int a1 = std::max(i - up + 1, i - big_h);
            const int a2 = std::min(i + down - 1, i + big_h);
            if (a1 < a2) pairs.emplace_back(a1, a2, l, r);
        }
    }
    if (pairs.empty()) return std::nullopt;
    Scds scds(pairs);

    std::optional<Frame> best;
    const int hlo = (big_h + 1) / 2;
    for (int h = hlo; h <= big_h; ++h) {
        const int u_from = std::max(1, i - h);
        const int u_to = std::min(i, n - h);
        for (int u = u_from; u <= u_to; ++u) {
            const int d = u + h;
            if (m.at(u, j) != m.at(d, j)) continue;
            const int right = x_idx.row_lcp(j, u, d);
            const int left = x_idx.rev_row_lcp(j, u, d);
            const int jl = j - left + 1, jr = j + right - 1;
            if (jl >= jr) continue;
            auto hit = scds.max_compatible(HorizontalAlignedPair(u, d, jl, jr));
            if (hit) take(best, Frame(u, d, hit->b1, hit->b2));
        }
    }
    return best;
}

std::optional<Frame> tall_frame_search(const Matrix& m, const MatrixIndex& x_idx, int x,
                                       const SolverOptions& opts) {
    if (x < 1) throw std::invalid_argument("tall_frame_search: x must be >= 1");
    const int n = m.rows(), mm = m.cols();

    std::optional<Frame> best;
    std::mutex mu;
    for (long long big_h = 2LL * x; big_h < 2LL * mm; big_h *= 2) {
        if ((big_h + 1) / 2 > n - 1) break;  // no frame of that height fits
        for (long long big_w = big_h; big_w < 2LL * mm; big_w *= 2) {
            if ((big_w + 1) / 2 > mm - 1) break;
            const int hh = static_cast<int>(big_h), ww = static_cast<int>(big_w);
            // Grid positions: multiples of H/2 and W/2, with the last row and
            // column added so borders stay covered.
            std::vector<int> gi, gj;
            for (int i = hh / 2; i <= n; i += hh / 2) gi.push_back(i);
            if (gi.empty() || gi.back() != n) gi.push_back(n);
            for (int j = ww / 2; j <= mm; j += ww / 2) gj.push_back(j);
            if (gj.empty() || gj.back() != mm) gj.push_back(mm);

            std::vector<Position> cells;
            cells.reserve(gi.size() * gj.size());
            for (int i : gi)
                for (int j : gj) cells.push_back({i, j});
            parallel_chunks(cells.size(), opts.threads, [&](std::size_t b, std::size_t e) {
                std::optional<Frame> local;
                for (std::size_t k = b; k < e; ++k)
                    take(local, phw_frame_search(m, x_idx, cells[k], hh, ww));
                std::lock_guard<std::mutex> lock(mu);
                take(best, local);
            });
        }
    }
    return best;
}

SearchResult max_matching_frame(const Matrix& m, const SolverOptions& opts) {
    SearchResult result;
    const int n = m.rows(), mm = m.cols();
    if (n < 2 || mm < 2) return result;

    const long long a = std::min(n, mm), b = std::max(n, mm);
    const bool short_only = a * a <= b;  // cost model: ab*min{a, sqrt(b)}

    auto consider = [&](const std::optional<Frame>& f, FrameSource src) {
        if (f && better(result.frame, *f)) {
            result.frame = *f;
            result.source = src;
        }
    };

    IndexOptions io;
    io.rows_lsa = false;
    io.rows_wavelets = false;
    io.cols_wavelets = false;
    io.reversed_lsa = false;
    const Matrix mt = transpose(m);
    if (short_only) {
        io.reversed = false;
        MatrixIndex xm(m, io), xt(mt, io);
        consider(short_frame_search(m, xm, static_cast<int>(a), opts), FrameSource::kShort);
        auto tf = short_frame_search(mt, xt, static_cast<int>(a), opts);
        if (tf) consider(transpose_frame(*tf), FrameSource::kTransposedShort);
    } else {
        MatrixIndex xm(m, io), xt(mt, io);
        const int xx = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(mm))));
        consider(short_frame_search(m, xm, xx, opts), FrameSource::kShort);
        consider(tall_frame_search(m, xm, xx, opts), FrameSource::kTall);
        const int xt_thresh = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
        auto sf = short_frame_search(mt, xt, xt_thresh, opts);
        if (sf) consider(transpose_frame(*sf), FrameSource::kTransposedShort);
        auto tf = tall_frame_search(mt, xt, xt_thresh, opts);
        if (tf) consider(transpose_frame(*tf), FrameSource::kTransposedTall);
    }
    return result;
}

}  // namespace mframe
