#include "doctest.h"
#include "encap/complement.hpp"
#include "encap/constructions.hpp"
#include "encap/errors.hpp"
#include "encap/oracle.hpp"
#include "helpers.hpp"

using namespace encap;
using testing_helpers::v;

TEST_CASE("sample_check_encapsulated examples") {
    const Scene chain = testing_helpers::chain3();
    CHECK(sample_check_encapsulated(chain, v({0}), 100, 1).verdict == SampleVerdict::AgreeTrue);
    const Scene halves = testing_helpers::half_planes_scene();
    auto r = sample_check_encapsulated(halves, v({1, 0}), 100, 1);
    CHECK(r.verdict == SampleVerdict::False);
    REQUIRE(r.certificate);
    CHECK(*r.certificate == v({1, 0}));
    CHECK_THROWS_AS(sample_check_encapsulated(chain, v({0}), 0, 1), InputError);
    CHECK_THROWS_AS(sample_check_encapsulated(chain, v({-1}), 10, 1), PreconditionError);
}

TEST_CASE("grid_cover_check examples") {
    CHECK(grid_cover_check(testing_helpers::half_planes_scene(), 64) == std::vector<std::size_t>{0, 1, 1});
    CHECK(grid_cover_check(testing_helpers::chain3(), 64)[0] == 2);
    CHECK(grid_cover_check(gen_two_sets_profile({1, 1, 1}).scene, 64) == std::vector<std::size_t>{1, 1, 1});
    CHECK(grid_cover_check(gen_three_sets(2).scene, 64) == strong_cover(gen_three_sets(2).scene).nu);
    CHECK_THROWS_AS(grid_cover_check(gen_three_sets(3).scene, 64), InputError);
    CHECK_THROWS_AS(grid_cover_check(testing_helpers::chain3(), 8), InputError);
}

TEST_CASE("euler_audit examples") {
    auto four = euler_audit(gen_disjoint_planar(4).scene);
    CHECK(four.f == 4);
    CHECK(four.bound_value == 9);
    CHECK(four.s_count == 9);
    CHECK(four.pass());
    auto three = euler_audit(gen_three_sets(2).scene);
    CHECK(three.f == 3);
    CHECK(three.bound_value == 4);
    CHECK(three.s_count == 4);
    CHECK(three.v == 1);
    CHECK(three.e_r == 3);
    CHECK(three.pass());
    Scene overlap{2,
                  {{"A", {testing_helpers::P({lt(v({1, 0}), 1)}, 2)}},
                   {"B", {testing_helpers::P({gt(v({1, 0}), 0)}, 2)}}}};
    CHECK_THROWS_WITH_AS(euler_audit(overlap), doctest::Contains("A and B"), PreconditionError);
}

TEST_CASE("grid_cover_check sees segments at arbitrary slopes") {
    const Scene s = gen_turan_planar(1, 1, 1, 1).scene;
    CHECK(grid_cover_check(s, 64) == std::vector<std::size_t>{0, 6, 1});
}

TEST_CASE("oracle_concordance on constructions") {
    const Concordance c = oracle_concordance(gen_three_sets(2).scene, 100, 7);
    CHECK(c.ok());
    CHECK(c.agree_encapsulated == 4);
    CHECK(c.grid_checked);
    CHECK(c.grid_nu == c.exact_nu);
    const Concordance t = oracle_concordance(gen_two_sets_profile({1, 1, 0}).scene, 100, 7);
    CHECK(t.ok());
    CHECK(t.exact_nu == std::vector<std::size_t>{1, 1, 0});
    const Concordance three = oracle_concordance(gen_three_sets(3).scene, 50, 7);
    CHECK(three.ok());
    CHECK_FALSE(three.grid_checked);
}
