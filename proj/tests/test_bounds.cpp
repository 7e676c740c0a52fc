#include "doctest.h"
#include "encap/bounds.hpp"
#include "encap/errors.hpp"

using namespace encap;

TEST_CASE("f_three") {
    CHECK(f_three(2) == 4);
    CHECK(f_three(4) == 7);
    CHECK(f_three(10) == 16);
    CHECK_THROWS_AS(f_three(0), InputError);
}

TEST_CASE("f_upper") {
    CHECK(f_upper(2, 4) == 22);
    for (long d = 1; d <= 6; ++d) CHECK(f_upper(d, 3) == 3 * d / 2 + 1);
    CHECK(f_upper(1, 7) == 6);
    CHECK(f_upper(5, 1) == 0);
    CHECK(f_upper(5, 2) == 1);
    // Independent re-evaluation of the recursion for a few entries.
    CHECK(f_upper(3, 4) == 6 * 1 + 4 * 5 + f_upper(1, 4));
    CHECK(f_upper(2, 5) == 10 * 1 + 10 * 4 + 5 * 22 + 0);
    // Monotone in d and n, and below the closed form.
    for (long d = 2; d <= 8; ++d)
        for (long n = 4; n <= 8; ++n) {
            CHECK(f_upper(d, n) <= f_closed(d, n));
            CHECK(f_upper(d, n) >= f_upper(d - 1, n));
            CHECK(f_upper(d, n) >= f_upper(d, n - 1));
        }
}

TEST_CASE("f_closed") {
    CHECK(f_closed(2, 4) == 192);
    CHECK(f_closed(3, 4) == 432);
    CHECK(f_closed(2, 2) == 4);  // 2 * 2^0 * 2!
    CHECK(f_closed(10, 5) == 240000);
}

TEST_CASE("turan_t") {
    CHECK(turan_t(4) == 6);
    CHECK(turan_t(5) == 9);
    CHECK(turan_t(8) == 24);
    CHECK(turan_t(9) == 30);
    CHECK(turan_t(1) == 0);
}

TEST_CASE("lm_bounds") {
    CHECK(lm_bounds(5, 2).first == 6);
    CHECK(lm_bounds(4, 2).second == 18);
    Integer expect = 4;
    for (int i = 0; i < 9; ++i) expect *= 10;  // C(5,2) = 10
    CHECK(lm_bounds(5, 10).second == expect);
    CHECK(f_closed(10, 5) < lm_bounds(5, 10).second);
}

TEST_CASE("disjoint_planar_bound") {
    CHECK(disjoint_planar_bound(4) == 9);
    CHECK(disjoint_planar_bound(3) == 4);
    CHECK(disjoint_planar_bound(10) == 39);
    CHECK(disjoint_planar_bound(3) == f_three(2));
    CHECK_THROWS_AS(disjoint_planar_bound(2), InputError);
}

TEST_CASE("bound table rows") {
    auto rows = bound_table(1, 4, 2, 6);
    CHECK(rows.size() == 20);
    for (const auto& r : rows)
        if (r.n == 3) CHECK(*r.f_upper == 3 * r.d / 2 + 1);
}
