#include <doctest.h>

#include <random>

#include "matchframe/grid.hpp"
#include "test_util.hpp"

using namespace mframe;
using namespace testutil;

TEST_CASE("perimeter") {
    CHECK(Frame(2, 6, 3, 9).perimeter() == 20);
    CHECK(Frame(1, 2, 1, 2).perimeter() == 4);
    CHECK(Frame(1, 4, 1, 4).perimeter() == 12);
}

TEST_CASE("perimeter is even and at least 4") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coord(1, 40);
    for (int t = 0; t < 200; ++t) {
        int u = coord(rng), d = coord(rng), l = coord(rng), r = coord(rng);
        if (u == d || l == r) continue;
        Frame f(std::min(u, d), std::max(u, d), std::min(l, r), std::max(l, r));
        CHECK(f.perimeter() >= 4);
        CHECK(f.perimeter() % 2 == 0);
    }
}

TEST_CASE("frame validation") {
    CHECK_THROWS_AS(Frame(2, 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(Frame(3, 2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(Frame(1, 2, 0, 3), std::invalid_argument);
}

TEST_CASE("is_matching on the alternating matrix") {
    const Matrix m = alternating(4, 4);
    CHECK(is_matching(m, Frame(1, 3, 1, 3)));
    CHECK_FALSE(is_matching(m, Frame(1, 4, 1, 4)));
}

TEST_CASE("is_matching: all-equal matrix matches every frame") {
    const Matrix m = all_equal(5, 6);
    for (int u = 1; u < 5; ++u)
        for (int d = u + 1; d <= 5; ++d)
            for (int l = 1; l < 6; ++l)
                for (int r = l + 1; r <= 6; ++r) CHECK(is_matching(m, Frame(u, d, l, r)));
}

TEST_CASE("is_matching: all-distinct matrix matches no frame") {
    const Matrix m = all_distinct(4, 5);
    for (int u = 1; u < 4; ++u)
        for (int d = u + 1; d <= 4; ++d)
            for (int l = 1; l < 5; ++l)
                for (int r = l + 1; r <= 5; ++r) CHECK_FALSE(is_matching(m, Frame(u, d, l, r)));
}

TEST_CASE("is_matching bounds error") {
    const Matrix m = alternating(4, 4);
    CHECK_THROWS_AS(is_matching(m, Frame(1, 5, 1, 4)), std::out_of_range);
}

TEST_CASE("transpose") {
    const Matrix row = make_matrix({"abc"});
    const Matrix col = transpose(row);
    CHECK(col.rows() == 3);
    CHECK(col.cols() == 1);
    CHECK(col.at(1, 1) == 'a');
    CHECK(col.at(3, 1) == 'c');

    std::mt19937_64 rng(11);
    const Matrix m = random_matrix(rng, 5, 7, 3);
    CHECK(transpose(transpose(m)) == m);

    const Matrix alt = alternating(4, 4);
    CHECK(transpose(alt) == alt);
    CHECK(is_matching(transpose(alt), Frame(1, 3, 1, 3)));
}

TEST_CASE("is_matching commutes with transposition") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const Matrix m = random_matrix(rng, 5, 4, 2);
        const Matrix mt = transpose(m);
        for (int u = 1; u < 5; ++u)
            for (int d = u + 1; d <= 5; ++d)
                for (int l = 1; l < 4; ++l)
                    for (int r = l + 1; r <= 4; ++r)
                        CHECK(is_matching(m, Frame(u, d, l, r)) ==
                              is_matching(mt, Frame(l, r, u, d)));
    }
}
