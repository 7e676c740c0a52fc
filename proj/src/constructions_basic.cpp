#include <array>
#include <map>

#include "construct_util.hpp"
#include "encap/constructions.hpp"

namespace encap {

using detail::Affine;
using detail::Constraints;
using detail::body_name;
using detail::ivec;
using detail::pad;
using detail::push_sign;
using detail::try_add_piece;

namespace {

std::map<int, std::size_t> point_profile(std::size_t d, std::size_t points) {
    std::map<int, std::size_t> nu;
    for (std::size_t k = 0; k <= d; ++k) nu[static_cast<int>(k)] = k == 0 ? points : 0;
    return nu;
}

}  // namespace

ConstructionReport gen_interval_chain(std::size_t n) {
    if (n == 0) throw InputError("interval chain needs n >= 1");
    ConstructionReport r;
    r.name = "interval-chain";
    r.scene.d = 1;
    if (n == 1) {
        ConvexBody k{body_name(0), {}};
        k.pieces.emplace_back(Constraints{lt(ivec({1}), 0)}, 1);
        k.pieces.emplace_back(Constraints{ge(ivec({1}), 0)}, 1);
        r.scene.bodies.push_back(std::move(k));
        r.description = "the whole line as one body";
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            Constraints cs;
            if (i > 0) cs.push_back(gt(ivec({1}), Rational(static_cast<long>(i) - 1)));
            if (i + 1 < n) cs.push_back(lt(ivec({1}), Rational(static_cast<long>(i))));
            r.scene.bodies.push_back({body_name(i), {Piece(std::move(cs), 1)}});
        }
        r.description = std::to_string(n) + " consecutive open intervals with gap points 0.." + std::to_string(n - 2);
    }
    r.expected_encapsulated = n - 1;
    r.expected_nu = point_profile(1, n - 1);
    r.expected_disjoint = true;
    return r;
}

ConstructionReport gen_grid(std::size_t d, std::size_t n) {
    if (d == 0) throw InputError("grid needs d >= 1");
    if (n % d != 0) throw InputError("grid needs d to divide n");
    const std::size_t m = n / d;
    if (m < 2) throw InputError("grid needs n/d >= 2");
    ConstructionReport r;
    r.name = "grid";
    r.scene.d = d;
    std::size_t idx = 0;
    for (std::size_t a = 0; a < d; ++a) {
        const RVector e = unit(d, a);
        for (std::size_t k = 0; k < m; ++k) {
            Constraints cs;
            if (k > 0) cs.push_back(gt(e, Rational(static_cast<long>(k))));
            if (k + 1 < m) cs.push_back(lt(e, Rational(static_cast<long>(k) + 1)));
            r.scene.bodies.push_back({body_name(idx++), {Piece(std::move(cs), d)}});
        }
    }
    std::size_t count = 1;
    for (std::size_t a = 0; a < d; ++a) count *= m - 1;
    r.description = std::to_string(m) + " open slabs per axis; complement is the lattice {1.." + std::to_string(m - 1) + "}^" +
                    std::to_string(d);
    r.expected_encapsulated = count;
    r.expected_nu = point_profile(d, count);
    r.expected_disjoint = d == 1;
    return r;
}

namespace {

// Three disjoint bodies in R^d, each a list of pieces, together with a
// lexicographic separator per pair: body i lies where the first nonzero
// functional is positive, body j where it is negative.
struct ThreeLevel {
    std::size_t d = 0;
    std::array<std::vector<Constraints>, 3> bodies;
    std::map<std::pair<int, int>, std::vector<Affine>> sep;
};

const std::array<std::array<long, 2>, 3> kRays{{{1, 0}, {-1, 1}, {-1, -1}}};

long det2(const std::array<long, 2>& u, const std::array<long, 2>& w) { return u[0] * w[1] - u[1] * w[0]; }

ThreeLevel three_base(std::size_t d) {
    ThreeLevel t;
    t.d = d;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) t.sep[{i, j}] = {};
    if (d == 1) {
        t.bodies[0] = {{lt(ivec({1}), 0)}};
        t.bodies[1] = {{gt(ivec({1}), 0), lt(ivec({1}), 1)}};
        t.bodies[2] = {{gt(ivec({1}), 1)}};
        t.sep[{0, 1}] = {{ivec({-1}), 0}};
        t.sep[{0, 2}] = {{ivec({-1}), 0}};
        t.sep[{1, 2}] = {{ivec({-1}), 1}};
    }
    return t;
}

// Functional on (y, a, b) acting only on the plane coordinates.
Affine plane_functional(std::size_t dy, long ca, long cb, const Rational& f = 0) {
    RVector g = zeros(dy + 2);
    g[dy] = ca;
    g[dy + 1] = cb;
    return {std::move(g), f};
}

// R^{d} -> R^{d+2}: the old space becomes the flat a = b = 0, the plane
// (a, b) is split by three rays.
ThreeLevel three_step(const ThreeLevel& old) {
    const std::size_t dy = old.d, D = dy + 2;
    ThreeLevel t;
    t.d = D;
    for (int i = 0; i < 3; ++i) {
        for (const Constraints& cs : old.bodies[i]) {
            Constraints lifted;
            for (const LinConstraint& c : cs) lifted.push_back({pad(c.normal, D), c.offset, c.rel});
            lifted.push_back(eq(unit(D, dy), 0));
            lifted.push_back(eq(unit(D, dy + 1), 0));
            t.bodies[i].push_back(std::move(lifted));
        }
        // Open sector between the other two rays.
        const auto& u = kRays[(i + 1) % 3];
        const auto& w = kRays[(i + 2) % 3];
        Constraints sector;
        const long su = det2(u, w) > 0 ? 1 : -1, sw = det2(w, u) > 0 ? 1 : -1;
        push_sign(sector, plane_functional(dy, -u[1] * su, u[0] * su), 1);
        push_sign(sector, plane_functional(dy, -w[1] * sw, w[0] * sw), 1);
        t.bodies[i].push_back(std::move(sector));
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const int c = 3 - i - j;
            const auto& ec = kRays[c];
            const Rational norm2(ec[0] * ec[0] + ec[1] * ec[1]);
            // Old separator completed so the functionals vanish together
            // only at the ray point x_c.
            std::vector<Affine> completed = old.sep.at({i, j});
            for (std::size_t q = 0; q < dy; ++q) completed.push_back({unit(dy, q), 0});
            completed.push_back({zeros(dy), -1});
            std::vector<Affine> lifted;
            for (const Affine& a : completed) {
                Affine m{pad(a.g, D), a.f};
                m.g[dy] = -a.f * Rational(ec[0]) / norm2;
                m.g[dy + 1] = -a.f * Rational(ec[1]) / norm2;
                if (!is_zero(m.g)) lifted.push_back(std::move(m));
            }
            // Half-flat through the old space in direction e_c, split
            // lexicographically between bodies i and j.
            Constraints base;
            push_sign(base, plane_functional(dy, -ec[1], ec[0]), 0);
            push_sign(base, plane_functional(dy, ec[0], ec[1]), 1);
            for (std::size_t k = 0; k < lifted.size(); ++k) {
                Constraints prefix = base;
                for (std::size_t q = 0; q < k; ++q) push_sign(prefix, lifted[q], 0);
                Constraints pos = prefix, neg = prefix;
                push_sign(pos, lifted[k], 1);
                push_sign(neg, lifted[k], -1);
                t.bodies[i].push_back(std::move(pos));
                t.bodies[j].push_back(std::move(neg));
            }
            const auto& ej = kRays[j];
            const long s = det2(ec, ej) > 0 ? 1 : -1;
            std::vector<Affine> sep{plane_functional(dy, -ec[1] * s, ec[0] * s)};
            sep.insert(sep.end(), lifted.begin(), lifted.end());
            t.sep[{i, j}] = std::move(sep);
        }
    }
    return t;
}

}  // namespace

ConstructionReport gen_three_sets(std::size_t d) {
    if (d == 0) throw InputError("three-sets needs d >= 1 (a scene needs positive dimension)");
    if (d > kMaxThreeSetsDim) throw ResourceError("three-sets supports d <= " + std::to_string(kMaxThreeSetsDim));
    ThreeLevel t = three_base(d % 2);
    while (t.d < d) t = three_step(t);
    ConstructionReport r;
    r.name = "three-sets";
    r.scene.d = d;
    for (std::size_t i = 0; i < 3; ++i) {
        ConvexBody body{body_name(i), {}};
        for (Constraints& cs : t.bodies[i]) try_add_piece(body, std::move(cs), d);
        r.scene.bodies.push_back(std::move(body));
    }
    const std::size_t count = 3 * d / 2 + 1;
    r.description = "three disjoint bodies whose complement is " + std::to_string(count) + " encapsulated points";
    r.expected_encapsulated = count;
    r.expected_nu = point_profile(d, count);
    r.expected_disjoint = true;
    return r;
}

ConstructionReport gen_two_sets_profile(const std::vector<int>& profile) {
    if (profile.size() < 2) throw InputError("profile needs bits for dimensions 0..d with d >= 1");
    for (int b : profile)
        if (b != 0 && b != 1) throw InputError("profile bits must be 0 or 1");
    const std::size_t d = profile.size() - 1;
    std::array<std::vector<Constraints>, 2> bodies;
    // Dimension one: the four configurations of two bodies on a line.
    const RVector x = ivec({1});
    const int b0 = profile[0], b1 = profile[1];
    if (b0 == 0 && b1 == 0) bodies = {{{{lt(x, 0)}}, {{ge(x, 0)}}}};
    else if (b0 == 1 && b1 == 0) bodies = {{{{lt(x, 0)}}, {{gt(x, 0)}}}};
    else if (b0 == 0 && b1 == 1) bodies = {{{{lt(x, 0)}}, {{gt(x, 1)}}}};
    else bodies = {{{{gt(x, 0), lt(x, 1)}}, {{gt(x, 1)}}}};
    for (std::size_t k = 2; k <= d; ++k) {
        // R^{k-1} becomes the hyperplane x_k = 0 of R^k.
        std::array<std::vector<Constraints>, 2> next;
        for (int i = 0; i < 2; ++i) {
            for (const Constraints& cs : bodies[i]) {
                Constraints lifted;
                for (const LinConstraint& c : cs) lifted.push_back({pad(c.normal, k), c.offset, c.rel});
                lifted.push_back(eq(unit(k, k - 1), 0));
                next[i].push_back(std::move(lifted));
            }
        }
        next[0].push_back({lt(unit(k, k - 1), 0)});
        if (profile[k] == 1) next[1].push_back({gt(unit(k, k - 1), 0), le(unit(k, k - 1), 1)});
        else next[1].push_back({gt(unit(k, k - 1), 0)});
        bodies = std::move(next);
    }
    ConstructionReport r;
    r.name = "two-sets-profile";
    r.scene.d = d;
    std::string bits;
    for (std::size_t i = 0; i < 2; ++i) {
        ConvexBody body{body_name(i), {}};
        for (Constraints& cs : bodies[i])
            if (!try_add_piece(body, std::move(cs), d)) throw InvariantError("two-sets piece is empty");
        r.scene.bodies.push_back(std::move(body));
    }
    for (std::size_t k = 0; k <= d; ++k) {
        r.expected_nu[static_cast<int>(k)] = static_cast<std::size_t>(profile[k]);
        bits += static_cast<char>('0' + profile[k]);
    }
    r.description = "two bodies whose strong cover has profile " + bits;
    r.expected_encapsulated = static_cast<std::size_t>(profile[0]);
    r.expected_disjoint = true;
    return r;
}

}  // namespace encap
