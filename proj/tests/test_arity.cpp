#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyadic/arity.hpp"

#include <numeric>

using namespace polyadic;
using namespace polyadic::arity;

// Published table of twist place counts for 2 <= m,n <= 7.
static const long long kTwistTable[6][6] = {
    {2, 4, 6, 8, 10, 12},  {4, 6, 10, 13, 16, 19},  {6, 10, 12, 18, 22, 26},
    {8, 13, 18, 20, 28, 33}, {10, 16, 22, 28, 30, 40}, {12, 19, 26, 33, 40, 42},
};

TEST_CASE("word_length") {
    CHECK(word_length(3, 1) == 3);
    CHECK(word_length(3, 2) == 5);
    CHECK(word_length(2, 4) == 5);
    CHECK_THROWS_AS(word_length(1, 1), ShapeError);
}

TEST_CASE("admissible_dimensions") {
    CHECK(admissible_dimensions(3, 3) == std::vector<long long>{1, 3, 5, 7});
    CHECK(admissible_dimensions(4, 2) == std::vector<long long>{1, 4, 7});
    CHECK(admissible_dimensions(2, 3) == std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("structure_constant_count") {
    CHECK(structure_constant_count(1, 2, 2) == 8);
    CHECK(structure_constant_count(2, 1, 3) == 2);
    CHECK(structure_constant_count(1, 3, 3) == 81);
}

TEST_CASE("twist table reproduced cell-for-cell in paper mode") {
    for (long long m = 2; m <= 7; ++m)
        for (long long n = 2; n <= 7; ++n)
            CHECK(twist_places(m, n, TwistMode::paper) == kTwistTable[m - 2][n - 2]);
}

TEST_CASE("twist exact vs paper") {
    CHECK(twist_places(3, 2, TwistMode::paper) == 4);
    CHECK(twist_places(3, 3, TwistMode::paper) == 6);
    CHECK(twist_places(3, 5, TwistMode::exact) == 12);
    CHECK(twist_places(3, 5, TwistMode::paper) == 13);
    for (long long n = 2; n <= 7; ++n)
        CHECK(twist_places(n, n, TwistMode::paper) == twist_places(n, n, TwistMode::exact));
    for (long long m = 2; m <= 9; ++m)
        for (long long n = 2; n <= 9; ++n) {
            bool agree = twist_places(m, n, TwistMode::paper) == twist_places(m, n, TwistMode::exact);
            bool expect = (m == n) || std::gcd(m - 1, n - 1) == 1;
            CHECK(agree == expect);
        }
}

TEST_CASE("convolution_arity against the published arity table") {
    CHECK(convolution_arity(2, 1, 2, 1) == 2);
    CHECK(convolution_arity(3, 1, 2, 2) == 3);
    CHECK_THROWS_AS(convolution_arity(3, 1, 4, 1), ShapeError);

    // All populated cells of the n-star table for n,n' in 2..5, iterations 1..3.
    struct Cell { long long np, lp, n, l, v; };
    const Cell cells[] = {
        {2, 1, 2, 1, 2},  {2, 2, 2, 2, 3},  {2, 2, 3, 1, 3},  {2, 3, 2, 3, 4},  {2, 3, 4, 1, 4},
        {3, 1, 2, 2, 3},  {3, 1, 3, 1, 3},  {3, 2, 3, 2, 5},  {3, 2, 5, 1, 5},  {3, 3, 3, 3, 7},
        {3, 3, 4, 2, 7},  {4, 1, 2, 3, 4},  {4, 1, 4, 1, 4},  {4, 2, 3, 3, 7},  {4, 2, 4, 2, 7},
        {4, 3, 4, 3, 10}, {5, 1, 3, 2, 5},  {5, 1, 5, 1, 5},  {5, 2, 5, 2, 9},  {5, 3, 5, 3, 13},
    };
    for (auto& c : cells) CHECK(convolution_arity(c.n, c.l, c.np, c.lp) == c.v);
    // Cells not listed are inadmissible.
    for (auto& c : cells) {
        bool found = false;
        for (auto& d : cells)
            if (d.n == c.n && d.l == c.l && d.np == c.np && d.lp == c.lp) found = true;
        CHECK(found);
    }
    for (long long n = 2; n <= 5; ++n)
        for (long long l = 1; l <= 3; ++l)
            for (long long np = 2; np <= 5; ++np)
                for (long long lp = 1; lp <= 3; ++lp) {
                    bool listed = false;
                    for (auto& c : cells)
                        if (c.n == n && c.l == l && c.np == np && c.lp == lp) listed = true;
                    if (listed)
                        CHECK(convolution_arity(n, l, np, lp) ==
                              convolution_arity(np, lp, n, l));
                    else
                        CHECK_THROWS_AS(convolution_arity(n, l, np, lp), ShapeError);
                }
}

TEST_CASE("heteromorphism_arity") {
    CHECK(heteromorphism_arity(2, 3, 1).value == 2);
    CHECK(heteromorphism_arity(1, 5, 0).value == 5);
    CHECK(heteromorphism_arity(2, 5, 1).value == 3);
    CHECK_FALSE(heteromorphism_arity(2, 4, 1).admissible);
}

TEST_CASE("group_function_arity") {
    CHECK(group_function_arity(2, 3, 1).value == 2);
    CHECK(group_function_arity(1, 4, 0).value == 4);
    CHECK_FALSE(group_function_arity(3, 5, 2).admissible);
}

TEST_CASE("heine_number") {
    CHECK(heine_number(0, 5) == 0);
    CHECK(heine_number(2, -1) == 0);
    CHECK(heine_number(3, 2) == 7);
    CHECK(heine_number(4, 1) == 4);
    CHECK(heine_number(1, -1) == 1);
    CHECK(heine_number(2, -2) == -1);
}

TEST_CASE("quasipolyangular_shape") {
    CHECK(quasipolyangular_shape(2, 2, false).value == 1);
    CHECK(quasipolyangular_shape(2, 2, true).value == 3);
    CHECK_FALSE(quasipolyangular_shape(3, 4, false).admissible);
}

TEST_CASE("ell_shape") {
    // The flagship ternary algebra has shape (2,2,2): ell*(3-1) = 2*(3-1).
    auto s = ell_shape(3, 3, 2);
    CHECK(s.admissible);
    CHECK(s.value == 2);
    CHECK_FALSE(ell_shape(4, 2, 1).admissible);
}
