#include <random>

#include "doctest.h"
#include "encap/errors.hpp"
#include "encap/geom.hpp"

using namespace encap;

namespace {
RVector v(std::initializer_list<long> xs) {
    RVector r;
    for (long x : xs) r.emplace_back(x);
    return r;
}
Piece P(std::vector<LinConstraint> cs, std::size_t d) { return Piece(std::move(cs), d); }
}  // namespace

TEST_CASE("piece_contains examples") {
    Piece neg = P({lt(v({1}), 0)}, 1);
    CHECK(piece_contains(neg, v({-1})));
    CHECK_FALSE(piece_contains(neg, v({0})));
    Piece tri = P({ge(v({1, 0}), 0), ge(v({0, 1}), 0), le(v({1, 1}), 1)}, 2);
    CHECK(piece_contains(tri, RVector{Rational(1, 3), Rational(1, 3)}));
    CHECK(tri.dim() == 2);
}

TEST_CASE("piece construction validates and computes dimension") {
    CHECK_THROWS_AS(P({lt(v({1}), 0), gt(v({1}), 0)}, 1), InputError);
    CHECK_THROWS_AS(P({}, 1), InputError);
    CHECK_THROWS_AS(P({lt(v({0, 0}), 1)}, 2), InputError);
    CHECK(P({le(v({1, 0}), 0), ge(v({1, 0}), 0), lt(v({0, 1}), 3)}, 2).dim() == 1);
    CHECK(P({eq(v({1, 0}), 2), eq(v({0, 1}), 1)}, 2).dim() == 0);
    CHECK(P({le(v({1, 1}), 0), ge(v({1, 0}), 0), ge(v({0, 1}), 0)}, 2).dim() == 0);
}

TEST_CASE("body_touches examples") {
    ConvexBody unit{"K", {P({gt(v({1}), 0), lt(v({1}), 1)}, 1)}};
    CHECK(body_touches(unit, v({0})));
    CHECK_FALSE(body_touches(unit, RVector{Rational(1, 2)}));
    CHECK_FALSE(body_touches(unit, v({2})));
}

TEST_CASE("entry_cone examples and soundness") {
    Piece neg = P({lt(v({1}), 0)}, 1);
    auto c = entry_cone(neg, v({0}));
    CHECK(c.contains(v({-1})));
    CHECK_FALSE(c.contains(v({1})));
    CHECK_FALSE(c.contains(v({0})));
    auto inside = entry_cone(neg, v({-1}));
    CHECK(inside.constraints.empty());
    CHECK(inside.contains(v({1})));
    CHECK(inside.contains(v({-1})));

    Piece q = P({le(v({1, 0}), 0), le(v({0, 1}), 0)}, 2);
    auto cq = entry_cone(q, v({0, 0}));
    CHECK(cq.contains(v({-1, 0})));
    CHECK(cq.contains(v({-1, -2})));
    CHECK_FALSE(cq.contains(v({1, -1})));

    // Sampled soundness: cone membership predicts membership for small steps.
    Piece wedge = P({lt(v({1, -2}), 0), le(v({-1, 0}), 0), lt(v({1, 1}), 5)}, 2);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-4, 4);
    const RVector origin = v({0, 0});
    auto cone = entry_cone(wedge, origin);
    for (int i = 0; i < 300; ++i) {
        RVector dir = v({coef(rng), coef(rng)});
        if (is_zero(dir)) continue;
        const Rational t(1, 64);
        CHECK(cone.contains(dir) == wedge.contains(axpy(origin, t, dir)));
        CHECK(cone.contains(dir) == wedge.contains(axpy(origin, t / 1000, dir)));
    }
    auto away = entry_cone(wedge, v({-1, 0}));
    CHECK(away.empty);
}

TEST_CASE("bodies_pairwise_disjoint examples") {
    Scene chain{1,
                {{"K1", {P({lt(v({1}), 0)}, 1)}},
                 {"K2", {P({gt(v({1}), 0), lt(v({1}), 1)}, 1)}},
                 {"K3", {P({gt(v({1}), 1)}, 1)}}}};
    CHECK(bodies_pairwise_disjoint(chain).disjoint);
    Scene halves{1, {{"A", {P({lt(v({1}), 1)}, 1)}}, {"B", {P({gt(v({1}), -1)}, 1)}}}};
    auto r = bodies_pairwise_disjoint(halves);
    CHECK_FALSE(r.disjoint);
    CHECK(r.witness[0] > Rational(-1));
    CHECK(r.witness[0] < Rational(1));
    // Symmetric in body order.
    std::swap(halves.bodies[0], halves.bodies[1]);
    CHECK_FALSE(bodies_pairwise_disjoint(halves).disjoint);
}

TEST_CASE("verify_convex_union examples") {
    ConvexBody ray{"K", {P({lt(v({1, 0}), 0)}, 2), P({eq(v({1, 0}), 0), ge(v({0, 1}), 0)}, 2)}};
    CHECK(verify_convex_union(ray, 200, 1).pass);
    ConvexBody broken{"K", {P({lt(v({1, 0}), 0)}, 2), P({eq(v({1, 0}), 1), eq(v({0, 1}), 0)}, 2)}};
    auto r = verify_convex_union(broken, 50, 1);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(broken.contains(r.counterexample));
    CHECK(r.counterexample == v({0, 0}));
    ConvexBody simplex{"K", {P({ge(v({1, 0}), 0), ge(v({0, 1}), 0), le(v({1, 1}), 1)}, 2)}};
    CHECK(verify_convex_union(simplex, 50, 1).pass);
    CHECK_THROWS_AS(verify_convex_union(simplex, 0, 1), InputError);
}

TEST_CASE("first_uncovered finds exact gaps") {
    Interval a = Interval::everything();
    a.hi = Rational(1, 2);
    Interval b = Interval::everything();
    b.lo = Rational(1, 2);
    CHECK(first_uncovered({a, b}, 0, 1) == Rational(1, 2));
    b.lo_closed = true;
    CHECK_FALSE(first_uncovered({a, b}, 0, 1).has_value());
}
