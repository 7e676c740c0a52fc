#pragma once

#include <algorithm>
#include <random>

#include "encap/errors.hpp"
#include "encap/geom.hpp"

namespace encap::testing {

// Seeded planar scene of 2..5 single-piece bodies: half-planes, wedges,
// triangles and rays on lines through points of {-1,0,1}^2, at most 12
// constraints in total. Bodies may overlap.
inline Scene random_planar_scene(std::uint64_t seed, std::size_t bodies) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-1, 1), kind(0, 9), coin(0, 1);
    auto lattice = [&] { return RVector{Rational(coord(rng)), Rational(coord(rng))}; };
    // Constraint on the line through a and b keeping side of c (or the line).
    auto side = [&](const RVector& a, const RVector& b, const RVector& c, bool closed) {
        RVector n{a[1] - b[1], b[0] - a[0]};
        Rational off = dot(n, a);
        if (dot(n, c) > off) n = scale(n, -1), off = -off;
        return LinConstraint{n, off, closed ? Relation::Le : Relation::Lt};
    };
    auto collinear = [](const RVector& a, const RVector& b, const RVector& c) {
        return (b[0] - a[0]) * (c[1] - a[1]) == (b[1] - a[1]) * (c[0] - a[0]);
    };
    const std::size_t cap = 12;
    Scene s{2, {}};
    std::size_t used = 0;
    for (std::size_t b = 0; b < bodies; ++b) {
        while (true) {
            const RVector p = lattice(), q = lattice(), r = lattice();
            if (collinear(p, q, r)) continue;
            const long k = kind(rng);
            std::vector<LinConstraint> cs;
            if (k < 3) {  // half-plane
                cs.push_back(side(p, q, r, coin(rng)));
            } else if (k < 6) {  // wedge at p
                cs.push_back(side(p, q, r, coin(rng)));
                cs.push_back(side(p, r, q, coin(rng)));
            } else if (k < 9) {  // triangle
                cs.push_back(side(p, q, r, coin(rng)));
                cs.push_back(side(p, r, q, coin(rng)));
                cs.push_back(side(q, r, p, coin(rng)));
            } else {  // ray from p through q
                LinConstraint on = side(p, q, r, true);
                on.rel = Relation::Eq;
                cs.push_back(on);
                const RVector dir = sub(q, p);
                cs.push_back({scale(dir, -1), -dot(dir, p), coin(rng) ? Relation::Le : Relation::Lt});
            }
            if (used + cs.size() + (bodies - b - 1) > cap) continue;
            try {
                s.bodies.push_back({"R" + std::to_string(b + 1), {Piece(cs, 2)}});
                used += cs.size();
                break;
            } catch (const InputError&) {
            }
        }
    }
    return s;
}

// Seeded fan: n >= 3 sectors (each narrower than a half-plane) around a
// lattice apex, each boundary ray owned by one neighbour or by neither,
// optionally one sector truncated by an extra lattice half-plane.
inline Scene random_fan_scene(std::uint64_t seed, std::size_t bodies) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-1, 1), dir(-2, 2), owner(0, 2), coin(0, 1);
    auto cross = [](const RVector& a, const RVector& b) { return a[0] * b[1] - a[1] * b[0]; };
    auto upper = [](const RVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    while (true) {
        const RVector c{Rational(small(rng)), Rational(small(rng))};
        std::vector<RVector> u;
        while (u.size() < bodies) {
            RVector v{Rational(dir(rng)), Rational(dir(rng))};
            if (is_zero(v)) continue;
            bool dup = false;
            for (const RVector& w : u) dup = dup || (cross(v, w) == 0 && dot(v, w) > 0);
            if (!dup) u.push_back(v);
        }
        std::sort(u.begin(), u.end(), [&](const RVector& a, const RVector& b) {
            if (upper(a) != upper(b)) return upper(a);
            return cross(a, b) > 0;
        });
        bool narrow = true;
        for (std::size_t i = 0; i < bodies; ++i) narrow = narrow && cross(u[i], u[(i + 1) % bodies]) > 0;
        if (!narrow) continue;
        std::vector<long> own(bodies);  // 0: sector before the ray, 1: after, 2: neither
        for (auto& o : own) o = owner(rng);
        Scene s{2, {}};
        for (std::size_t i = 0; i < bodies; ++i) {
            const RVector& a = u[i];
            const RVector& b = u[(i + 1) % bodies];
            // cross(a, x - c) >= 0 and cross(x - c, b) >= 0, as lt/le rows.
            const RVector na{a[1], -a[0]}, nb{-b[1], b[0]};
            std::vector<LinConstraint> cs{
                {na, dot(na, c), own[i] == 1 ? Relation::Le : Relation::Lt},
                {nb, dot(nb, c), own[(i + 1) % bodies] == 0 ? Relation::Le : Relation::Lt}};
            s.bodies.push_back({"F" + std::to_string(i + 1), {Piece(cs, 2)}});
        }
        if (coin(rng)) {
            const std::size_t i = rng() % bodies;
            const RVector p{Rational(small(rng)), Rational(small(rng))}, q{Rational(small(rng)), Rational(small(rng))};
            if (p != q) {
                std::vector<LinConstraint> cs = s.bodies[i].pieces[0].constraints();
                const RVector n{p[1] - q[1], q[0] - p[0]};
                cs.push_back({n, dot(n, p), coin(rng) ? Relation::Le : Relation::Lt});
                try {
                    s.bodies[i].pieces[0] = Piece(cs, 2);
                } catch (const InputError&) {
                }
            }
        }
        return s;
    }
}

inline constexpr std::size_t kRandomSuiteSize = 200;
inline constexpr std::uint64_t kRandomSuiteSeed = 20261019;

inline std::vector<Scene> random_suite() {
    std::vector<Scene> out;
    for (std::size_t i = 0; i < kRandomSuiteSize; ++i) {
        const std::size_t n = 2 + i % 4;
        out.push_back(n >= 3 && i % 8 >= 4 ? random_fan_scene(kRandomSuiteSeed + i, n)
                                           : random_planar_scene(kRandomSuiteSeed + i, n));
    }
    return out;
}

}  // namespace encap::testing
