#include <doctest.h>

#include <random>

#include "matchframe/matrix_index.hpp"
#include "test_util.hpp"

using namespace mframe;
using namespace testutil;

namespace {

std::vector<Symbol> row_suffix(const Matrix& m, int i, int l) {
    std::vector<Symbol> out;
    for (int j = l; j <= m.cols(); ++j) out.push_back(m.at(i, j));
    return out;
}

std::vector<Symbol> rev_row_prefix(const Matrix& m, int i, int l) {
    std::vector<Symbol> out;
    for (int j = l; j >= 1; --j) out.push_back(m.at(i, j));
    return out;
}

std::vector<Symbol> col_suffix(const Matrix& m, int u, int j) {
    std::vector<Symbol> out;
    for (int i = u; i <= m.rows(); ++i) out.push_back(m.at(i, j));
    return out;
}

void check_all_lcps(const Matrix& m, const MatrixIndex& x) {
    for (int l = 1; l <= m.cols(); ++l)
        for (int i = 1; i <= m.rows(); ++i)
            for (int j = 1; j <= m.rows(); ++j) {
                CHECK(x.row_lcp(l, i, j) == naive_lcp(row_suffix(m, i, l), row_suffix(m, j, l)));
                CHECK(x.rev_row_lcp(l, i, j) ==
                      naive_lcp(rev_row_prefix(m, i, l), rev_row_prefix(m, j, l)));
                CHECK(x.row_lcp(l, i, j) <= m.cols() - l + 1);
            }
    const Matrix mt = transpose(m);
    for (int u = 1; u <= m.rows(); ++u)
        for (int j1 = 1; j1 <= m.cols(); ++j1)
            for (int j2 = 1; j2 <= m.cols(); ++j2)
                CHECK(x.col_lcp(u, j1, j2) ==
                      naive_lcp(row_suffix(mt, j1, u), row_suffix(mt, j2, u)));
}

void check_lsa_sorted(const Matrix& m, const MatrixIndex& x) {
    for (int l = 1; l <= m.cols(); ++l) {
        for (int pos = 1; pos < m.rows(); ++pos) {
            const auto a = row_suffix(m, x.row_lsa_id(l, pos), l);
            const auto b = row_suffix(m, x.row_lsa_id(l, pos + 1), l);
            CHECK(!std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()));
            if (a == b)  // ties broken by id
                CHECK(x.row_lsa_id(l, pos) < x.row_lsa_id(l, pos + 1));
        }
        for (int i = 1; i <= m.rows(); ++i) CHECK(x.row_lsa_id(l, x.row_lsa_pos(l, i)) == i);
    }
}

}  // namespace

TEST_CASE("1x1 matrix index") {
    const Matrix m = make_matrix({"a"});
    MatrixIndex x(m);
    CHECK(x.row_lcp(1, 1, 1) == 1);
    CHECK(x.col_lcp(1, 1, 1) == 1);
    CHECK(x.row_lsa_id(1, 1) == 1);
}

TEST_CASE("2x3 matrix lex order") {
    const Matrix m = make_matrix({"aba", "aab"});
    MatrixIndex x(m);
    CHECK(x.row_lsa_id(1, 1) == 2);  // "aab" < "aba"
    CHECK(x.row_lsa_id(1, 2) == 1);
}

TEST_CASE("alternating 4x4 row groups") {
    const Matrix m = alternating(4, 4);
    MatrixIndex x(m);
    // rows {1,3} ("abab") adjacent, then {2,4} ("baba")
    CHECK(x.row_lsa_id(1, 1) == 1);
    CHECK(x.row_lsa_id(1, 2) == 3);
    CHECK(x.row_lsa_id(1, 3) == 2);
    CHECK(x.row_lsa_id(1, 4) == 4);

    CHECK(x.row_lcp(1, 1, 3) == 4);
    CHECK(x.row_lcp(1, 1, 2) == 0);
    CHECK(x.row_lcp(2, 1, 1) == 3);
    CHECK(x.rev_row_lcp(4, 1, 3) == 4);
    CHECK(x.rev_row_lcp(1, 1, 3) == 1);
    CHECK(x.rev_row_lcp(1, 1, 2) == 0);
    CHECK(x.col_lcp(1, 1, 3) == 4);
    CHECK(x.col_lcp(1, 1, 2) == 0);
}

TEST_CASE("all-equal 8x8 column lcp") {
    const Matrix m = all_equal(8, 8);
    MatrixIndex x(m);
    CHECK(x.col_lcp(4, 1, 5) == 5);
    CHECK(x.rev_col_lcp(1, 2, 7) == 1);
}

TEST_CASE("lcps agree with naive comparison") {
    std::mt19937_64 rng(71);
    check_all_lcps(alternating(4, 4), MatrixIndex(alternating(4, 4)));
    for (int t = 0; t < 8; ++t) {
        std::uniform_int_distribution<int> nd(1, 16);
        const Matrix m = random_matrix(rng, nd(rng), nd(rng), t % 2 ? 2 : 3);
        MatrixIndex x(m);
        check_all_lcps(m, x);
        check_lsa_sorted(m, x);
    }
}

TEST_CASE("row fingerprints") {
    const Matrix m = alternating(4, 4);
    MatrixIndex x(m);
    const Fingerprint fp = x.row_fingerprint(1, 1, 4);
    CHECK(fp.lo == 1);
    CHECK(fp.hi == 2);  // exactly rows {1,3}
    CHECK(x.row_lsa_id(1, 1) + x.row_lsa_id(1, 2) == 4);

    CHECK(x.row_fingerprint(2, 3, 0) == Fingerprint{1, 4, 0});
    CHECK_THROWS_AS(x.row_fingerprint(2, 1, 4), std::invalid_argument);

    const Matrix d = all_distinct(5, 3);
    MatrixIndex xd(d);
    for (int i = 1; i <= 5; ++i) {
        const Fingerprint f = xd.row_fingerprint(1, i, 1);
        CHECK(f.lo == f.hi);
    }
}

TEST_CASE("range queries agree with linear scan") {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(rng, 20, 20, 2);
        MatrixIndex x(m);
        std::uniform_int_distribution<int> cd(1, 20);
        for (int q = 0; q < 200; ++q) {
            const int l = cd(rng);
            int i1 = cd(rng), i2 = cd(rng), a = cd(rng), b = cd(rng);
            if (i1 > i2) std::swap(i1, i2);
            if (a > b) std::swap(a, b);
            // scan oracle over the points (i, lexpos)
            struct Hit {
                int row, lex;
            };
            std::optional<Hit> mins[4];
            for (int i = i1; i <= i2; ++i) {
                const int lex = x.row_lsa_pos(l, i);
                if (lex < a || lex > b) continue;
                if (!mins[0] || i < mins[0]->row) mins[0] = Hit{i, lex};
                if (!mins[1] || i > mins[1]->row) mins[1] = Hit{i, lex};
                if (!mins[2] || lex < mins[2]->lex) mins[2] = Hit{i, lex};
                if (!mins[3] || lex > mins[3]->lex) mins[3] = Hit{i, lex};
            }
            const RangeObjective objs[4] = {RangeObjective::kMinFirst, RangeObjective::kMaxFirst,
                                            RangeObjective::kMinSecond,
                                            RangeObjective::kMaxSecond};
            for (int k = 0; k < 4; ++k) {
                const auto got = x.row_range_query(l, i1, i2, a, b, objs[k]);
                CHECK(got.has_value() == mins[k].has_value());
                if (got && mins[k]) {
                    CHECK(got->first == mins[k]->row);
                    CHECK(got->second == mins[k]->lex);
                }
            }
        }
    }
}

TEST_CASE("single-row boxes return the stored point") {
    const Matrix m = alternating(4, 6);
    MatrixIndex x(m);
    for (int l = 1; l <= 6; ++l)
        for (int i = 1; i <= 4; ++i) {
            const auto got = x.row_range_query(l, i, i, 1, 4, RangeObjective::kMinFirst);
            REQUIRE(got.has_value());
            CHECK(got->first == i);
            CHECK(got->second == x.row_lsa_pos(l, i));
        }
    CHECK_FALSE(x.row_range_query(1, 3, 2, 1, 4, RangeObjective::kMinFirst).has_value());
}

TEST_CASE("reversed lex arrays are sorted") {
    std::mt19937_64 rng(79);
    const Matrix m = random_matrix(rng, 9, 7, 2);
    MatrixIndex x(m);
    for (int l = 1; l <= m.cols(); ++l)
        for (int pos = 1; pos < m.rows(); ++pos) {
            const auto a = rev_row_prefix(m, x.rev_row_lsa_id(l, pos), l);
            const auto b = rev_row_prefix(m, x.rev_row_lsa_id(l, pos + 1), l);
            CHECK(!std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end()));
        }
}

TEST_CASE("bounds errors") {
    const Matrix m = alternating(4, 4);
    MatrixIndex x(m);
    CHECK_THROWS_AS(x.row_lcp(0, 1, 2), std::out_of_range);
    CHECK_THROWS_AS(x.row_lcp(1, 5, 2), std::out_of_range);
    CHECK_THROWS_AS(x.col_lcp(5, 1, 2), std::out_of_range);
}
