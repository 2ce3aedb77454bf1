#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "matchframe/approx.hpp"
#include "matchframe/oracle.hpp"
#include "test_util.hpp"

using namespace mframe;
using namespace testutil;

namespace {

IndexOptions window_options() {
    IndexOptions io;
    io.reversed = false;
    io.reversed_lsa = false;
    return io;
}

int naive_L(const Matrix& m, int l, int i, int j) {
    int best = 0;
    for (int k = i + 1; k <= j; ++k) {
        int t = 0;
        while (l + t <= m.cols() && m.at(i, l + t) == m.at(k, l + t)) ++t;
        best = std::max(best, t);
    }
    return best;
}

int naive_I(const Matrix& m, int l, int i, int j) {
    const int want = naive_L(m, l, i, j);
    for (int k = i + 1; k <= j; ++k) {
        int t = 0;
        while (l + t <= m.cols() && m.at(i, l + t) == m.at(k, l + t)) ++t;
        if (t == want) return k;
    }
    return -1;
}

}  // namespace

TEST_CASE("decompose windows cover admissible frames") {
    // a = 1.1, a^31 ~ 19.2 so the class covers heights [20..21]
    const int n = 100, m = 100, h = 31, w = 31;
    const double eps = 0.3;
    const auto windows = decompose(n, m, eps, h, w);
    CHECK(!windows.empty());
    const double bound = 100.0 * 100 / (eps * eps * std::pow(1.1, h + w));
    CHECK(windows.size() <= 25 * bound);

    for (const auto& win : windows) {
        CHECK(win.height <= n);
        CHECK(win.width <= m);
        CHECK(win.origin_row + win.height <= n);
        CHECK(win.origin_col + win.width <= m);
    }
    // adjacent origins differ by exactly delta except the clamped last one
    std::set<int> row_offsets;
    for (const auto& win : windows) row_offsets.insert(win.origin_row);
    std::vector<int> offs(row_offsets.begin(), row_offsets.end());
    for (std::size_t k = 1; k + 1 < offs.size(); ++k)
        CHECK(offs[k] - offs[k - 1] == offs[1] - offs[0]);

    // every admissible frame is surrounding in some window
    const int lo = 20, hi = 21;
    for (int u = 1; u + lo <= n; u += 7)
        for (int height : {lo, hi})
            for (int l = 1; l + lo <= m; l += 7)
                for (int width : {lo, hi}) {
                    const int d = u + height, r = l + width;
                    if (d > n || r > m) continue;
                    bool covered = false;
                    for (const auto& win : windows) {
                        const int wu = u - win.origin_row, wd = d - win.origin_row;
                        const int wl = l - win.origin_col, wr = r - win.origin_col;
                        if (wu < 1 || wl < 1 || wd > win.height || wr > win.width) continue;
                        if (wu < win.inner.u && wd > win.inner.d && wl < win.inner.l &&
                            wr > win.inner.r) {
                            covered = true;
                            break;
                        }
                    }
                    CHECK(covered);
                }
}

TEST_CASE("decompose rejects degenerate strides") {
    CHECK_THROWS_AS(decompose(100, 100, 0.1, 1, 1), std::domain_error);
    CHECK_THROWS_AS(decompose(100, 100, 1.5, 5, 5), std::invalid_argument);
}

TEST_CASE("mask_inner replaces the inner rectangle with fresh distinct codes") {
    std::mt19937_64 rng(127);
    const Matrix m = random_matrix(rng, 8, 8, 2);
    const Window win{0, 0, 8, 8, InnerRectangle{3, 5, 4, 6}};
    const Matrix masked = mask_inner(win, m);
    std::set<Symbol> fresh;
    for (int i = 1; i <= 8; ++i)
        for (int j = 1; j <= 8; ++j) {
            const bool inside = i >= 3 && i <= 5 && j >= 4 && j <= 6;
            if (inside) {
                CHECK(masked.at(i, j) > masked.alphabet_max());
                fresh.insert(masked.at(i, j));
            } else {
                CHECK(masked.at(i, j) == m.at(i, j));
            }
        }
    CHECK(fresh.size() == 9);  // pairwise distinct
}

TEST_CASE("masking preserves surrounding matching frames") {
    std::mt19937_64 rng(131);
    for (int t = 0; t < 60; ++t) {
        const Matrix m = random_matrix(rng, 8, 8, 2);
        const InnerRectangle inner{3, 4, 3, 5};
        const Matrix masked = mask_inner(Window{0, 0, 8, 8, inner}, m);
        for (int u = 1; u < inner.u; ++u)
            for (int d = inner.d + 1; d <= 8; ++d)
                for (int l = 1; l < inner.l; ++l)
                    for (int r = inner.r + 1; r <= 8; ++r)
                        CHECK(is_matching(m, Frame(u, d, l, r)) ==
                              is_matching(masked, Frame(u, d, l, r)));
    }
}

TEST_CASE("compute_L and compute_I") {
    const Matrix alt = alternating(4, 4);
    const MatrixIndex x(alt, window_options());
    CHECK(compute_L(x, 1, 1, 4) == 4);
    CHECK(compute_I(x, 1, 1, 4) == 3);
    CHECK(compute_L(x, 1, 1, 2) == 0);
    CHECK(compute_I(x, 1, 1, 2) == 2);
    CHECK_THROWS_AS(compute_L(x, 1, 3, 3), std::invalid_argument);

    const Matrix eq = all_equal(6, 5);
    const MatrixIndex xe(eq, window_options());
    for (int i = 1; i < 6; ++i) CHECK(compute_L(xe, 2, i, 6) == 4);
    CHECK(compute_I(xe, 1, 1, 5) == 2);

    std::mt19937_64 rng(137);
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(rng, 10, 6, 2);
        const MatrixIndex xr(m, window_options());
        for (int l = 1; l <= 6; ++l)
            for (int i = 1; i < 10; ++i)
                for (int j = i + 1; j <= 10; ++j) {
                    CHECK(compute_L(xr, l, i, j) == naive_L(m, l, i, j));
                    CHECK(compute_I(xr, l, i, j) == naive_I(m, l, i, j));
                }
    }
}

TEST_CASE("interesting triplets: little-endian rows") {
    for (int n : {8, 16}) {
        const Matrix m = little_endian_matrix(n);
        const MatrixIndex x(m, window_options());
        std::set<std::pair<int, int>> got;
        interesting_triplets(m, x, [&](const InterestingTriplet& t) {
            if (t.l == 1) got.emplace(t.u, t.d);
        });
        std::set<std::pair<int, int>> expected;
        for (int i = 1; i <= n; ++i)
            for (int d = 1; i + d <= n; d *= 2) expected.emplace(i, i + d);
        CHECK(got == expected);
    }
}

TEST_CASE("interesting triplets match the brute oracle per column") {
    std::mt19937_64 rng(139);
    for (int t = 0; t < 25; ++t) {
        const Matrix m = random_matrix(rng, 12, 12, 2);
        const MatrixIndex x(m, window_options());
        std::vector<std::set<std::pair<int, int>>> got(m.cols() + 1);
        interesting_triplets(m, x,
                             [&](const InterestingTriplet& tr) { got[tr.l].emplace(tr.u, tr.d); });
        for (int l = 1; l <= m.cols(); ++l) {
            std::vector<std::vector<Symbol>> tuple;
            for (int i = 1; i <= m.rows(); ++i) {
                std::vector<Symbol> s;
                for (int j = l; j <= m.cols(); ++j) s.push_back(m.at(i, j));
                tuple.push_back(std::move(s));
            }
            CHECK(got[l] == oracle::brute_interesting_pairs(tuple));
        }
    }
}

TEST_CASE("interesting pair chains descend and include adjacent pairs") {
    std::mt19937_64 rng(149);
    const Matrix m = random_matrix(rng, 14, 8, 2);
    const MatrixIndex x(m, window_options());
    int cur_l = 0, cur_u = 0, last_d = 0;
    interesting_triplets(m, x, [&](const InterestingTriplet& t) {
        if (t.l != cur_l || t.u != cur_u) {
            if (cur_l != 0) CHECK(last_d == cur_u + 1);  // chain ended at i+1
            cur_l = t.l;
            cur_u = t.u;
        } else {
            CHECK(t.d < last_d);  // strictly decreasing
        }
        last_d = t.d;
    });
    CHECK(last_d == cur_u + 1);
}

TEST_CASE("verify_surrounding") {
    const Matrix alt = alternating(4, 4);
    const InnerRectangle inner{2, 2, 2, 2};
    const Matrix masked = mask_inner(Window{0, 0, 4, 4, inner}, alt);
    const MatrixIndex x(masked, window_options());
    const auto r = verify_surrounding(x, InterestingTriplet{1, 3, 1}, inner);
    REQUIRE(r.has_value());
    CHECK(*r == 3);
    CHECK_FALSE(verify_surrounding(x, InterestingTriplet{2, 3, 1}, inner).has_value());

    const Matrix d = all_distinct(6, 6);
    const InnerRectangle di{3, 3, 3, 3};
    const MatrixIndex xd(mask_inner(Window{0, 0, 6, 6, di}, d), window_options());
    for (int u = 1; u < 3; ++u)
        CHECK_FALSE(verify_surrounding(xd, InterestingTriplet{u, u + 3, 1}, di).has_value());
}

TEST_CASE("decide_surrounding") {
    const Matrix alt = alternating(4, 4);
    auto f = decide_surrounding(alt, InnerRectangle{2, 2, 2, 2});
    REQUIRE(f.has_value());
    CHECK(*f == Frame(1, 3, 1, 3));

    CHECK_FALSE(decide_surrounding(all_distinct(6, 6), InnerRectangle{3, 3, 3, 3}).has_value());
}

TEST_CASE("decide_surrounding matches the brute oracle on random windows") {
    std::mt19937_64 rng(151);
    std::uniform_int_distribution<int> cd(2, 9);
    for (int t = 0; t < 200; ++t) {
        const Matrix m = random_matrix(rng, 10, 10, 2);
        int u = cd(rng), d = cd(rng), l = cd(rng), r = cd(rng);
        if (u > d) std::swap(u, d);
        if (l > r) std::swap(l, r);
        const InnerRectangle inner{u, d, l, r};
        const auto fast = decide_surrounding(m, inner);
        const auto slow = oracle::brute_surrounding(m, inner);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(is_matching(m, *fast));
            CHECK(fast->u < inner.u);
            CHECK(fast->d > inner.d);
            CHECK(fast->l < inner.l);
            CHECK(fast->r > inner.r);
        }
    }
}

TEST_CASE("approx examples") {
    const Matrix eq = all_equal(16, 16);
    auto f = approx_max_frame(eq, 0.5);
    REQUIRE(f.has_value());
    CHECK(f->perimeter() >= 30);

    CHECK_FALSE(approx_max_frame(all_distinct(9, 9), 0.3).has_value());
    CHECK_THROWS_AS(approx_max_frame(eq, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(approx_max_frame(eq, 1.0), std::invalid_argument);
}

TEST_CASE("a unique small frame is found exactly") {
    // random-ish filler of distinct symbols with one planted 2x2 block
    Matrix m = all_distinct(7, 7);
    m.set(3, 4, 500);
    m.set(3, 5, 500);
    m.set(4, 4, 500);
    m.set(4, 5, 500);
    auto f = approx_max_frame(m, 0.4);
    REQUIRE(f.has_value());
    CHECK(*f == Frame(3, 4, 4, 5));
}

TEST_CASE("approximation guarantee on random instances") {
    std::mt19937_64 rng(157);
    for (double eps : {0.1, 0.3, 0.5}) {
        for (int t = 0; t < 120; ++t) {
            std::uniform_int_distribution<int> nd(2, 14);
            const Matrix m = random_matrix(rng, nd(rng), nd(rng), 2);
            const auto opt = oracle::brute_max_frame(m);
            const auto got = approx_max_frame(m, eps);
            CHECK(got.has_value() == opt.has_value());
            if (opt) {
                REQUIRE(got.has_value());
                CHECK(is_matching(m, *got));
                CHECK(got->perimeter() >= (1.0 - eps) * opt->perimeter());
            }
        }
    }
}

TEST_CASE("window pipeline on large planted frames") {
    // Matrices big enough that the window phase actually runs for eps = 0.5
    // (the exact floor is 36).
    std::mt19937_64 rng(163);
    for (int t = 0; t < 3; ++t) {
        Matrix m = random_matrix(rng, 100, 100, 2);
        // plant a matching frame of height/width ~ 60
        const Frame planted(15, 79, 18, 80);
        for (int i = planted.u; i <= planted.d; ++i) m.set(i, planted.r, m.at(i, planted.l));
        for (int j = planted.l; j <= planted.r; ++j) m.set(planted.d, j, m.at(planted.u, j));
        REQUIRE(is_matching(m, planted));

        for (bool filter : {true, false}) {
            ApproxOptions opts;
            opts.window_filter = filter;
            const auto got = approx_max_frame(m, 0.5, opts);
            REQUIRE(got.has_value());
            CHECK(is_matching(m, *got));
            CHECK(got->perimeter() >= 0.5 * planted.perimeter());
        }
    }
}

TEST_CASE("window pipeline on a non-square matrix") {
    std::mt19937_64 rng(173);
    Matrix m = random_matrix(rng, 60, 140, 2);
    const Frame planted(4, 55, 11, 111);  // both sides above the eps=0.5 floor
    for (int i = planted.u; i <= planted.d; ++i) m.set(i, planted.r, m.at(i, planted.l));
    for (int j = planted.l; j <= planted.r; ++j) m.set(planted.d, j, m.at(planted.u, j));
    REQUIRE(is_matching(m, planted));
    const auto got = approx_max_frame(m, 0.5);
    REQUIRE(got.has_value());
    CHECK(is_matching(m, *got));
    CHECK(got->perimeter() >= 0.5 * planted.perimeter());
}

TEST_CASE("approx is deterministic across thread counts") {
    std::mt19937_64 rng(167);
    Matrix m = random_matrix(rng, 60, 60, 2);
    const Frame planted(3, 50, 5, 52);
    for (int i = planted.u; i <= planted.d; ++i) m.set(i, planted.r, m.at(i, planted.l));
    for (int j = planted.l; j <= planted.r; ++j) m.set(planted.d, j, m.at(planted.u, j));
    ApproxOptions one{1, true}, four{4, true};
    CHECK(approx_max_frame(m, 0.5, one) == approx_max_frame(m, 0.5, four));
}
