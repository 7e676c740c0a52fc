#pragma once

#include <initializer_list>

#include "encap/geom.hpp"

namespace testing_helpers {

inline encap::RVector v(std::initializer_list<long> xs) {
    encap::RVector r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

inline encap::Piece P(std::vector<encap::LinConstraint> cs, std::size_t d) { return encap::Piece(std::move(cs), d); }

// K1 = (-inf,0), K2 = (0,1), K3 = (1,inf)
inline encap::Scene chain3() {
    using namespace encap;
    return Scene{1,
                 {{"K1", {P({lt(v({1}), 0)}, 1)}},
                  {"K2", {P({gt(v({1}), 0), lt(v({1}), 1)}, 1)}},
                  {"K3", {P({gt(v({1}), 1)}, 1)}}}};
}

// K1 = {x >= 0, y > 0}, K2 = {x >= 0, y < 0}
inline encap::Scene half_planes_scene() {
    using namespace encap;
    return Scene{2,
                 {{"K1", {P({ge(v({1, 0}), 0), gt(v({0, 1}), 0)}, 2)}},
                  {"K2", {P({ge(v({1, 0}), 0), lt(v({0, 1}), 0)}, 2)}}}};
}

}  // namespace testing_helpers
