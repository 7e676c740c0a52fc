#include "doctest.h"
#include "encap/constructions.hpp"
#include "encap/errors.hpp"
#include "encap/report_check.hpp"
#include "helpers.hpp"

using namespace encap;
using testing_helpers::v;

namespace {
void require_pass(const ConstructionReport& r) {
    const ReportCheck c = check_report(r);
    for (const auto& f : c.failures) MESSAGE(r.name << ": " << f);
    CHECK(c.pass);
}
}  // namespace

TEST_CASE("interval chain") {
    auto r3 = gen_interval_chain(3);
    CHECK(enumerate_encapsulated(r3.scene) == std::vector<RVector>{v({0}), v({1})});
    CHECK(enumerate_encapsulated(gen_interval_chain(2).scene).size() == 1);
    CHECK(enumerate_encapsulated(gen_interval_chain(5).scene).size() == 4);
    for (std::size_t n : {1, 2, 3, 5}) require_pass(gen_interval_chain(n));
    CHECK_THROWS_AS(gen_interval_chain(0), InputError);
}

TEST_CASE("grid") {
    CHECK(enumerate_encapsulated(gen_grid(2, 6).scene).size() == 4);
    CHECK(enumerate_encapsulated(gen_grid(1, 3).scene).size() == 2);
    CHECK(enumerate_encapsulated(gen_grid(2, 4).scene).size() == 1);
    require_pass(gen_grid(2, 6));
    require_pass(gen_grid(1, 3));
    CHECK_THROWS_AS(gen_grid(2, 5), InputError);
    CHECK_THROWS_AS(gen_grid(2, 2), InputError);
}

TEST_CASE("three sets") {
    for (std::size_t d : {1, 2, 3}) {
        auto r = gen_three_sets(d);
        CHECK(*r.expected_encapsulated == 3 * d / 2 + 1);
        const ReportCheck c = check_report(r);
        for (const auto& f : c.failures) MESSAGE("d=" << d << ": " << f);
        CHECK(c.pass);
        CHECK(c.disjoint);
        CHECK(c.complement_finite);
    }
    CHECK_THROWS_AS(gen_three_sets(0), InputError);
    CHECK_THROWS_AS(gen_three_sets(kMaxThreeSetsDim + 1), ResourceError);
}

TEST_CASE("two sets profiles") {
    auto nu_of = [](std::vector<int> p) { return strong_cover(gen_two_sets_profile(p).scene).nu; };
    CHECK(nu_of({1, 0}) == std::vector<std::size_t>{1, 0});
    CHECK(nu_of({0, 1}) == std::vector<std::size_t>{0, 1});
    CHECK(nu_of({1, 1, 1}) == std::vector<std::size_t>{1, 1, 1});
    for (int mask = 0; mask < 8; ++mask) require_pass(gen_two_sets_profile({mask & 1, (mask >> 1) & 1, (mask >> 2) & 1}));
    CHECK_THROWS_AS(gen_two_sets_profile({}), InputError);
    CHECK_THROWS_AS(gen_two_sets_profile({1}), InputError);
}

TEST_CASE("turan planar") {
    CHECK(strong_cover(gen_turan_planar(1, 1, 1, 1).scene).nu[1] == 6);
    CHECK(strong_cover(gen_turan_planar(2, 1, 1, 1).scene).nu[1] == 9);
    CHECK(strong_cover(gen_turan_planar(2, 3, 2, 2).scene).nu[1] == 30);
    require_pass(gen_turan_planar(1, 1, 1, 1));
    CHECK_THROWS_AS(gen_turan_planar(0, 1, 1, 1), InputError);
}

TEST_CASE("disjoint planar") {
    for (std::size_t n : {3, 4, 5, 6}) {
        auto r = gen_disjoint_planar(n);
        CHECK(enumerate_encapsulated(r.scene).size() == 5 * n - 11);
        require_pass(r);
    }
    CHECK_THROWS_AS(gen_disjoint_planar(2), InputError);
}

TEST_CASE("cyclic polytope facets") {
    CHECK(cyclic_polytope_facets(6, 4).size() == 9);
    CHECK(cyclic_polytope_facets(7, 4).size() == 14);
    CHECK(cyclic_polytope_facets(5, 4).size() == 5);
    CHECK(cyclic_polytope_facets(6, 3).size() == 8);
}

TEST_CASE("neighborly tiling") {
    for (std::size_t n : {4, 5}) {
        auto r = gen_neighborly_tiling(3, n);
        CHECK(r.expected_nu.at(2) == n * (n - 1) / 2);
        require_pass(r);
    }
    CHECK_THROWS_AS(gen_neighborly_tiling(2, 4), InputError);
}

TEST_CASE("carved tiling is disjoint and leaves projected vertices") {
    auto r = gen_carved_tiling(3, 5);
    const ReportCheck c = check_report(r);
    CHECK(c.disjoint);
    CHECK(c.complement_finite);
    // The top polar vertex has no finite image.
    CHECK(c.encapsulated + 1 == *r.expected_encapsulated);
    CHECK_THROWS_AS(gen_carved_tiling(3, 4), InputError);
}
