#include <random>

#include "doctest.h"
#include "encap/complement.hpp"
#include "encap/errors.hpp"
#include "helpers.hpp"

using namespace encap;
using namespace testing_helpers;

TEST_CASE("touch_set examples") {
    const Scene chain = chain3();
    CHECK(touch_set(chain, v({0})).indices == std::vector<std::size_t>{0, 1});
    CHECK(touch_set(chain, v({1})).indices == std::vector<std::size_t>{1, 2});
    CHECK(touch_set(half_planes_scene(), v({0, 0})).indices == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(touch_set(chain, RVector{Rational(1, 2)}), PreconditionError);
}

TEST_CASE("is_encapsulated examples") {
    const Scene chain = chain3();
    CHECK(is_encapsulated(chain, v({0})).encapsulated);
    auto r = is_encapsulated(half_planes_scene(), v({1, 0}));
    CHECK_FALSE(r.encapsulated);
    REQUIRE(r.uncovered_direction);
    CHECK(*r.uncovered_direction == v({1, 0}));
    auto in = is_encapsulated(chain, v({5}));
    CHECK_FALSE(in.encapsulated);
    CHECK(in.inside_body == std::optional<std::size_t>(2));
}

TEST_CASE("local_dimension and ordinary_flat_at examples") {
    const Scene halves = half_planes_scene();
    CHECK(local_dimension(halves, v({0, 0})) == 2);
    CHECK(local_dimension(halves, v({1, 0})) == 1);
    CHECK(local_dimension(chain3(), v({0})) == 0);
    CHECK_THROWS_AS(local_dimension(halves, v({1, 1})), PreconditionError);

    auto axis = ordinary_flat_at(halves, v({1, 0}));
    REQUIRE(axis);
    std::vector<RVector> pts{v({0, 0}), v({1, 0})};
    CHECK(*axis == affine_hull(pts));
    CHECK_FALSE(ordinary_flat_at(halves, v({0, 0})));
    auto pt = ordinary_flat_at(chain3(), v({0}));
    REQUIRE(pt);
    CHECK(*pt == Flat::point(v({0})));
}

TEST_CASE("strong_cover examples") {
    auto halves = strong_cover(half_planes_scene());
    CHECK(halves.nu == std::vector<std::size_t>{0, 1, 1});
    auto chain = strong_cover(chain3());
    CHECK(chain.nu == std::vector<std::size_t>{2, 0});
    CHECK(chain.flats[0] == Flat::point(v({0})));
    CHECK(chain.flats[1] == Flat::point(v({1})));
    auto empty = strong_cover(Scene{2, {}});
    CHECK(empty.nu == std::vector<std::size_t>{0, 0, 1});
}

TEST_CASE("enumerate_encapsulated on the interval chain") {
    auto pts = enumerate_encapsulated(chain3());
    CHECK(pts == std::vector<RVector>{v({0}), v({1})});
}

namespace {

Scene random_planar(std::mt19937_64& rng, int bodies) {
    std::uniform_int_distribution<long> coef(-2, 2), off(-2, 2), rel(0, 7), cnt(1, 3);
    Scene s{2, {}};
    for (int b = 0; b < bodies; ++b) {
        while (true) {
            std::vector<LinConstraint> cs;
            const long k = cnt(rng);
            for (long i = 0; i < k; ++i) {
                RVector n{Rational(coef(rng)), Rational(coef(rng))};
                if (is_zero(n)) n[1] = 1;
                const long r = rel(rng);
                cs.push_back({n, Rational(off(rng)), r < 4 ? Relation::Lt : r < 7 ? Relation::Le : Relation::Eq});
            }
            try {
                s.bodies.push_back({"B" + std::to_string(b), {Piece(cs, 2)}});
                break;
            } catch (const InputError&) {
            }
        }
    }
    return s;
}

}  // namespace

TEST_CASE("local analysis agrees with the full arrangement") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const Scene s = random_planar(rng, 2 + trial % 3);
        const auto full = enumerate_cells(s, 64);
        const ComplementAnalyzer an(s);
        const auto sv = an.survey();
        // Every S-cell in some piece closure is found by the restricted search.
        std::size_t in_closure = 0;
        bool full_interior = false;
        for (const auto& c : full.cells) {
            if (!c.in_S) continue;
            if (c.dim == 2) full_interior = true;
            bool near = false;
            for (const auto& b : s.bodies) near = near || b.closure_contains(c.witness);
            if (near) ++in_closure;
        }
        CHECK(sv.cells.size() == in_closure);
        CHECK(sv.has_interior == full_interior);
        for (const auto& c : full.cells) {
            if (!c.in_S) continue;
            int dm = -1;
            for (const auto& e : full.cells)
                if (e.in_S && closure_adjacent(c, e)) dm = std::max(dm, e.dim);
            const auto L = an.local(c.witness);
            CHECK(L.local_dim == dm);
            const bool iso = c.dim == 0 && dm == 0;
            CHECK(is_encapsulated(s, c.witness).encapsulated == iso);
        }
        CHECK_NOTHROW(strong_cover(s));
    }
}
