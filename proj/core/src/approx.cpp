#include "matchframe/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>

#include "matchframe/exact.hpp"
#include "matchframe/hashing.hpp"
#include "matchframe/parallel.hpp"

namespace mframe {

namespace {

bool better(const std::optional<Frame>& best, const Frame& cand) {
    if (!best) return true;
    if (cand.perimeter() != best->perimeter()) return cand.perimeter() > best->perimeter();
    return cand < *best;
}

void take(std::optional<Frame>& best, const std::optional<Frame>& cand) {
    if (cand && better(best, *cand)) best = *cand;
}

// a^k by repeated multiplication; deterministic for a fixed platform, which
// is all reproducibility needs.
long double pow_ld(double a, int k) {
    long double r = 1.0L;
    for (int t = 0; t < k; ++t) r *= a;
    return r;
}

long long ceil_pow(double a, int k) { return static_cast<long long>(std::ceil(pow_ld(a, k))); }

void validate_eps(double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
}

Matrix mask_rect(Matrix w, const InnerRectangle& inner) {
    if (inner.u > inner.d || inner.l > inner.r) return w;  // empty: nothing to mask
    Symbol fresh = std::max(w.alphabet_max(), w.max_cell());
    for (int i = inner.u; i <= inner.d; ++i)
        for (int j = inner.l; j <= inner.r; ++j) w.set(i, j, ++fresh);
    return w;
}

// Smallest-side floor of the enumeration: below it frames are found exactly.
int side_floor(double eps) {
    return std::max(2, static_cast<int>(std::ceil(9.0 / (eps * eps))));
}

struct ClassGrid {
    int h_min = 0, h_max = -1;  // empty when h_min > h_max
    int w_min = 0, w_max = -1;
    int cut = 0;  // heights/widths <= cut are handled exactly
};

ClassGrid plan_classes(int n, int m, double eps) {
    const double a = 1.0 + eps / 3.0;
    const int x0 = side_floor(eps);
    ClassGrid g;
    int h = 1;
    while (ceil_pow(a, h) < x0) ++h;
    g.h_min = g.w_min = h;
    g.cut = static_cast<int>(std::max<long long>(x0, ceil_pow(a, h) - 1));
    g.h_max = g.h_min - 1;
    while (ceil_pow(a, g.h_max + 1) <= n - 1) ++g.h_max;
    g.w_max = g.w_min - 1;
    while (ceil_pow(a, g.w_max + 1) <= m - 1) ++g.w_max;
    return g;
}

// Does any needle hash occur among the haystack hashes? Margins are small
// for most windows, so a linear scan beats sorting there.
template <typename HashFn>
bool any_pair_equal(HashFn&& hash_of, int hay_lo, int hay_hi, int needle_lo, int needle_hi) {
    thread_local std::vector<std::uint64_t> hay;
    hay.clear();
    for (int i = hay_lo; i <= hay_hi; ++i) hay.push_back(hash_of(i));
    if (hay.size() > 64) {
        std::sort(hay.begin(), hay.end());
        for (int i = needle_lo; i <= needle_hi; ++i)
            if (std::binary_search(hay.begin(), hay.end(), hash_of(i))) return true;
    } else {
        for (int i = needle_lo; i <= needle_hi; ++i) {
            const std::uint64_t h = hash_of(i);
            for (const std::uint64_t x : hay)
                if (x == h) return true;
        }
    }
    return false;
}

// Column part of the window prefilter: some left-margin column must equal
// some right-margin column on the inner row strip for a surrounding matching
// frame to exist. Hash equality is necessary for string equality, so no
// window with a surrounding frame is ever rejected.
bool col_margins_may_match(const Window& win, const PrefixHash2D& hashes) {
    const InnerRectangle& in = win.inner;
    if (in.u > in.d) return true;  // empty strip: nothing to compare against
    const int r1 = win.origin_row + in.u, r2 = win.origin_row + in.d;
    return any_pair_equal(
        [&](int j) { return hashes.col_strip(win.origin_col + j, r1, r2); }, 1, in.l - 1,
        in.r + 1, win.width);
}

// Equal pairs among the per-row hashes of one strip, ordered by row. The
// row part of the prefilter: a window at row origin x can contain a
// surrounding matching frame only if some top-margin row equals some
// bottom-margin row on the strip, i.e. some equal pair straddles x's margin
// intervals. On typical inputs there are no equal pairs at all and every
// window of the strip is rejected in O(1). If equal rows abound the search
// is cut short and the filter reports everything as plausible (`saturated`),
// which is always sound.
struct StripPairs {
    std::vector<std::pair<int, int>> pairs;
    bool saturated = false;
};

void collect_equal_pairs(const std::uint64_t* strips, int n, StripPairs& out,
                         std::vector<std::pair<std::uint64_t, int>>& scratch) {
    out.pairs.clear();
    out.saturated = false;
    scratch.resize(n);
    for (int i = 1; i <= n; ++i) scratch[i - 1] = {strips[i], i};
    std::sort(scratch.begin(), scratch.end());
    for (std::size_t a = 0; a < scratch.size();) {
        std::size_t b = a;
        while (b < scratch.size() && scratch[b].first == scratch[a].first) ++b;
        const std::size_t group = b - a;
        if (group > 1) {
            if (group > 8 || out.pairs.size() + group * group > 4096) {
                out.saturated = true;
                return;
            }
            for (std::size_t p = a; p < b; ++p)
                for (std::size_t q = p + 1; q < b; ++q) {
                    const int i = std::min(scratch[p].second, scratch[q].second);
                    const int j = std::max(scratch[p].second, scratch[q].second);
                    out.pairs.emplace_back(i, j);
                }
        }
        a = b;
    }
}

// Is some equal pair positioned as (top-margin row, bottom-margin row) for
// the window at row origin x?
bool row_margins_may_match(const StripPairs& sp, int x, const InnerRectangle& in, int height) {
    if (sp.saturated) return true;
    for (const auto& [i, j] : sp.pairs) {
        if (i > x && i < x + in.u && j > x + in.d && j <= x + height) return true;
        // margins can overlap only when the inner rectangle has no rows
        if (j > x && j < x + in.u && i > x + in.d && i <= x + height) return true;
    }
    return false;
}

}  // namespace

std::vector<Window> decompose(int n, int m, double eps, int h, int w) {
    validate_eps(eps);
    if (n < 1 || m < 1 || h < 1 || w < 1)
        throw std::invalid_argument("decompose: dimensions and class indices must be >= 1");
    const double a = 1.0 + eps / 3.0;
    const int hh = static_cast<int>(std::min<long long>(n, ceil_pow(a, h + 2)));
    const int ww = static_cast<int>(std::min<long long>(m, ceil_pow(a, w + 2)));
    const long long delta_h =
        static_cast<long long>(std::floor(static_cast<long double>(eps) * pow_ld(a, h + 1) / 3.0L));
    const long long delta_w =
        static_cast<long long>(std::floor(static_cast<long double>(eps) * pow_ld(a, w + 1) / 3.0L));
    if (delta_h < 1 || delta_w < 1)
        throw std::domain_error("decompose: degenerate stride; raise the class floor");

    auto origins = [](int total, int len, long long delta) {
        std::vector<int> out;
        for (long long x = 0; x + len <= total; x += delta) out.push_back(static_cast<int>(x));
        if (out.empty() || out.back() != total - len) out.push_back(total - len);
        return out;
    };
    const std::vector<int> rows = origins(n, hh, delta_h);
    const std::vector<int> cols = origins(m, ww, delta_w);

    const int ah = static_cast<int>(ceil_pow(a, h));
    const int aw = static_cast<int>(ceil_pow(a, w));
    const InnerRectangle inner{hh - ah + 1, ah - 1, ww - aw + 1, aw - 1};

    std::vector<Window> out;
    out.reserve(rows.size() * cols.size());
    for (int x : rows)
        for (int y : cols) out.push_back(Window{x, y, hh, ww, inner});
    return out;
}

Matrix mask_inner(const Window& win, const Matrix& m) {
    Matrix sub = extract(m, win.origin_row + 1, win.origin_row + win.height, win.origin_col + 1,
                         win.origin_col + win.width);
    return mask_rect(std::move(sub), win.inner);
}

int compute_L(const MatrixIndex& x_idx, int l, int i, int j) {
    if (i >= j) throw std::invalid_argument("compute_L: requires i < j");
    const int pos = x_idx.row_lsa_pos(l, i);
    int best = 0;
    if (auto right = x_idx.row_range_query(l, i + 1, j, pos + 1, x_idx.rows(),
                                           RangeObjective::kMinSecond))
        best = std::max(best, x_idx.row_lcp(l, i, right->first));
    if (auto left = x_idx.row_range_query(l, i + 1, j, 1, pos - 1, RangeObjective::kMaxSecond))
        best = std::max(best, x_idx.row_lcp(l, i, left->first));
    return best;
}

int compute_I(const MatrixIndex& x_idx, int l, int i, int j) {
    const int len = compute_L(x_idx, l, i, j);
    const Fingerprint fp = x_idx.row_fingerprint(l, i, len);
    const auto hit = x_idx.row_range_query(l, i + 1, j, fp.lo, fp.hi, RangeObjective::kMinFirst);
    // Some k in [i+1..j] attains the maximum, so the box cannot be empty.
    if (!hit) throw std::logic_error("compute_I: no row attains the maximum LCP");
    return hit->first;
}

void interesting_triplets(const Matrix& m, const MatrixIndex& x_idx,
                          const std::function<void(const InterestingTriplet&)>& emit) {
    const int n = m.rows(), mm = m.cols();
    for (int l = 1; l <= mm; ++l) {
        for (int u = 1; u < n; ++u) {
            int j = compute_I(x_idx, l, u, n);
            emit({u, j, l});
            while (j != u + 1) {
                j = compute_I(x_idx, l, u, j - 1);
                emit({u, j, l});
            }
        }
    }
}

std::vector<InterestingTriplet> collect_interesting_triplets(const Matrix& m,
                                                             const MatrixIndex& x_idx) {
    std::vector<InterestingTriplet> out;
    interesting_triplets(m, x_idx, [&](const InterestingTriplet& t) { out.push_back(t); });
    return out;
}

std::optional<int> verify_surrounding(const MatrixIndex& x_masked, const InterestingTriplet& t,
                                      const InnerRectangle& inner) {
    if (t.u >= inner.u || t.d <= inner.d || t.l >= inner.l) return std::nullopt;
    const int len = x_masked.row_lcp(t.l, t.u, t.d);
    const int r_lo = inner.r + 1;
    const int r_hi = t.l + len - 1;
    if (r_lo > r_hi) return std::nullopt;
    const Fingerprint fp = x_masked.col_fingerprint(t.u, t.l, t.d - t.u + 1);
    const auto hit =
        x_masked.col_range_query(t.u, r_lo, r_hi, fp.lo, fp.hi, RangeObjective::kMinFirst);
    if (!hit) return std::nullopt;
    return hit->first;
}

std::optional<Frame> decide_surrounding(const Matrix& window_matrix, const InnerRectangle& inner) {
    const Matrix masked = mask_rect(window_matrix, inner);
    IndexOptions io;
    io.reversed = false;
    io.reversed_lsa = false;
    const MatrixIndex x_idx(masked, io);

    const int n = masked.rows(), mm = masked.cols();
    // Triplets with u >= inner.u, d <= inner.d or l >= inner.l can never
    // verify, so those slices of the enumeration are skipped outright.
    const int l_hi = std::min(mm, inner.l - 1);
    const int u_hi = std::min(n - 1, inner.u - 1);
    for (int l = 1; l <= l_hi; ++l) {
        for (int u = 1; u <= u_hi; ++u) {
            int j = compute_I(x_idx, l, u, n);
            while (true) {
                if (j <= inner.d) break;  // chain is descending; nothing below verifies
                if (auto r = verify_surrounding(x_idx, {u, j, l}, inner))
                    return Frame(u, j, l, *r);
                if (j == u + 1) break;
                j = compute_I(x_idx, l, u, j - 1);
            }
        }
    }
    return std::nullopt;
}

std::optional<Frame> approx_max_frame(const Matrix& m, double eps, const ApproxOptions& opts) {
    validate_eps(eps);
    const int n = m.rows(), mm = m.cols();
    if (n < 2 || mm < 2) return std::nullopt;

    const ClassGrid grid = plan_classes(n, mm, eps);
    SolverOptions solver_opts{opts.threads};

    std::optional<Frame> best;
    {
        IndexOptions io;
        io.rows_lsa = false;
        io.rows_wavelets = false;
        io.cols_wavelets = false;
        io.reversed = false;
        io.reversed_lsa = false;
        const int x_m = std::min(grid.cut, n - 1);
        if (x_m >= 1) {
            MatrixIndex xm(m, io);
            take(best, short_frame_search(m, xm, x_m, solver_opts));
        }
        const Matrix mt = transpose(m);
        const int x_t = std::min(grid.cut, mm - 1);
        if (x_t >= 1) {
            MatrixIndex xt(mt, io);
            if (auto f = short_frame_search(mt, xt, x_t, solver_opts))
                take(best, Frame(f->l, f->r, f->u, f->d));
        }
    }

    if (grid.h_min > grid.h_max || grid.w_min > grid.w_max) return best;

    const bool trace = std::getenv("MATCHFRAME_TRACE") != nullptr;
    std::size_t n_windows = 0, n_passed = 0;

    const PrefixHash2D hashes(m);
    std::mutex mu;
    // The column geometry (width, strip columns, column origins) depends on w
    // alone, so the per-strip work is shared across every h of the same w.
    for (int w = grid.w_min; w <= grid.w_max; ++w) {
        struct RowGeom {
            int height;
            InnerRectangle inner;
            std::vector<int> xs;
        };
        std::vector<RowGeom> rows_of_h;
        std::vector<int> ys;
        int width = 0;
        for (int h = grid.h_min; h <= grid.h_max; ++h) {
            const std::vector<Window> windows = decompose(n, mm, eps, h, w);
            n_windows += windows.size();
            RowGeom g{windows.front().height, windows.front().inner, {}};
            for (const auto& win : windows)
                if (g.xs.empty() || win.origin_row > g.xs.back()) g.xs.push_back(win.origin_row);
            if (rows_of_h.empty()) {
                width = windows.front().width;
                for (const auto& win : windows) {
                    if (win.origin_row != windows.front().origin_row) break;
                    ys.push_back(win.origin_col);
                }
            }
            rows_of_h.push_back(std::move(g));
        }
        const InnerRectangle col_inner = rows_of_h.front().inner;  // l/r shared across h

        parallel_chunks(ys.size(), opts.threads, [&](std::size_t b, std::size_t e) {
            std::optional<Frame> local;
            std::size_t local_passed = 0;
            std::vector<std::uint64_t> strips(n + 1);
            std::vector<std::pair<std::uint64_t, int>> scratch;
            StripPairs sp;
            for (std::size_t k = b; k < e; ++k) {
                const int y = ys[k];
                sp.pairs.clear();
                sp.saturated = true;  // no filter or empty strip: everything plausible
                if (opts.window_filter && col_inner.l <= col_inner.r) {
                    const int c1 = y + col_inner.l, c2 = y + col_inner.r;
                    for (int i = 1; i <= n; ++i) strips[i] = hashes.row_strip(i, c1, c2);
                    collect_equal_pairs(strips.data(), n, sp, scratch);
                }
                for (const RowGeom& g : rows_of_h) {
                    const InnerRectangle& in = g.inner;
                    if (in.u < 2 || in.l < 2 || in.d > g.height - 1 || in.r > width - 1)
                        continue;  // no room for margins on all four sides
                    for (const int x : g.xs) {
                        if (opts.window_filter && !row_margins_may_match(sp, x, in, g.height))
                            continue;
                        const Window win{x, y, g.height, width, in};
                        if (opts.window_filter && !col_margins_may_match(win, hashes)) continue;
                        ++local_passed;
                        const Matrix sub =
                            extract(m, win.origin_row + 1, win.origin_row + win.height,
                                    win.origin_col + 1, win.origin_col + win.width);
                        if (auto f = decide_surrounding(sub, win.inner))
                            take(local, Frame(f->u + win.origin_row, f->d + win.origin_row,
                                              f->l + win.origin_col, f->r + win.origin_col));
                    }
                }
            }
            std::lock_guard<std::mutex> lock(mu);
            n_passed += local_passed;
            take(best, local);
        });
    }
    if (trace)
        std::fprintf(stderr, "[approx] windows=%zu passed=%zu\n", n_windows, n_passed);
    return best;
}

}  // namespace mframe
