#include <random>

#include "doctest.h"
#include "encap/errors.hpp"
#include "encap/lp.hpp"

using namespace encap;

namespace {
RVector v(std::initializer_list<long> xs) {
    RVector r;
    for (long x : xs) r.emplace_back(x);
    return r;
}
}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS(Rational::parse("1/-2"));

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
    // Values far beyond 64 bits stay exact.
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000003);
    CHECK((big + 1) - big == Rational(1));
}

TEST_CASE("lp_feasible examples") {
    {
        std::vector<LinConstraint> c{lt(v({1}), 0), lt(v({-1}), 0)};
        CHECK_FALSE(lp_feasible(c, 1).feasible);
    }
    {
        std::vector<LinConstraint> c{ge(v({1}), 0)};
        auto r = lp_feasible(c, 1);
        REQUIRE(r.feasible);
        CHECK(r.witness == v({0}));
    }
    {
        std::vector<LinConstraint> c{gt(v({1}), 0), eq(v({1}), 1)};
        auto r = lp_feasible(c, 1);
        REQUIRE(r.feasible);
        CHECK(r.witness == v({1}));
    }
    {
        std::vector<LinConstraint> c{lt(v({0}), 1)};
        CHECK_THROWS_AS(lp_feasible(c, 1), InputError);
    }
    {
        std::vector<LinConstraint> c{lt(v({1, 0}), 1)};
        CHECK_THROWS_AS(lp_feasible(c, 1), InputError);
    }
}

TEST_CASE("lp_feasible handles strict systems, equalities and degeneracy") {
    // Open triangle x>0, y>0, x+y<1.
    std::vector<LinConstraint> tri{gt(v({1, 0}), 0), gt(v({0, 1}), 0), lt(v({1, 1}), 1)};
    auto r = lp_feasible(tri, 2);
    REQUIRE(r.feasible);
    for (const auto& c : tri) CHECK(c.satisfied_by(r.witness));

    // Same triangle with x+y<0 is empty; with x+y<=0 and non-strict sides it is the origin.
    tri[2] = lt(v({1, 1}), 0);
    CHECK_FALSE(lp_feasible(tri, 2).feasible);
    std::vector<LinConstraint> corner{ge(v({1, 0}), 0), ge(v({0, 1}), 0), le(v({1, 1}), 0)};
    r = lp_feasible(corner, 2);
    REQUIRE(r.feasible);
    CHECK(r.witness == v({0, 0}));

    // Inconsistent equalities.
    std::vector<LinConstraint> eqs{eq(v({1, 1}), 1), eq(v({2, 2}), 3)};
    CHECK_FALSE(lp_feasible(eqs, 2).feasible);

    // A line meeting an open half-plane only at its boundary.
    std::vector<LinConstraint> touch{eq(v({1, 0}), 0), lt(v({1, 0}), 0)};
    CHECK_FALSE(lp_feasible(touch, 2).feasible);

    // Many redundant degenerate constraints through one point.
    std::vector<LinConstraint> fan;
    for (long k = 1; k <= 12; ++k) fan.push_back(le(v({k, 13 - k, 1}), 0));
    fan.push_back(ge(v({0, 0, 1}), 0));
    fan.push_back(ge(v({1, 0, 0}), 0));
    fan.push_back(ge(v({0, 1, 0}), 0));
    r = lp_feasible(fan, 3);
    REQUIRE(r.feasible);
    CHECK(r.witness == v({0, 0, 0}));
    fan.push_back(gt(v({1, 1, 1}), 0));
    CHECK_FALSE(lp_feasible(fan, 3).feasible);
}

TEST_CASE("lp_feasible agrees with brute force on random 1-D systems") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coef(-3, 3), rel(0, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<LinConstraint> cs;
        const int m = 1 + trial % 4;
        for (int i = 0; i < m; ++i) {
            long a = coef(rng);
            if (a == 0) a = 1;
            cs.push_back({v({a}), Rational(coef(rng)), static_cast<Relation>(rel(rng))});
        }
        // Feasible sets in 1-D are intervals with endpoints among b/a; probing all
        // endpoints and midpoints between them (plus far points) decides exactly.
        std::vector<Rational> cand{Rational(-100), Rational(100)};
        std::vector<Rational> ends;
        for (const auto& c : cs) ends.push_back(c.offset / c.normal[0]);
        for (const auto& a : ends) {
            cand.push_back(a);
            for (const auto& b : ends) cand.push_back((a + b) / 2);
        }
        bool brute = false;
        for (const auto& x : cand) {
            bool ok = true;
            for (const auto& c : cs) ok = ok && c.satisfied_by(RVector{x});
            brute = brute || ok;
        }
        CHECK(lp_feasible(cs, 1).feasible == brute);
    }
}

TEST_CASE("affine_hull examples and idempotence") {
    std::vector<RVector> one{v({0, 0})};
    CHECK(affine_hull(one).dim() == 0);
    std::vector<RVector> two{v({0, 0}), v({1, 0})};
    Flat xaxis = affine_hull(two);
    CHECK(xaxis.dim() == 1);
    CHECK(xaxis.contains(v({5, 0})));
    CHECK_FALSE(xaxis.contains(v({5, 1})));
    std::vector<RVector> three{v({0, 0}), v({1, 0}), v({0, 1})};
    CHECK(affine_hull(three) == Flat::whole(2));
    CHECK(affine_hull(std::vector<RVector>{}).dim() == -1);

    std::vector<RVector> skew{v({1, 2, 3}), v({2, 3, 5}), v({3, 4, 7})};
    Flat f = affine_hull(skew);
    CHECK(f.dim() == 1);
    auto pts = f.sample_points();
    CHECK(affine_hull(pts) == f);
    auto [normals, offsets] = f.equations();
    CHECK(normals.size() == 2);
    for (const auto& p : skew)
        for (std::size_t i = 0; i < normals.size(); ++i) CHECK(dot(normals[i], p) == offsets[i]);
}
