#include <algorithm>
#include <array>
#include <map>

#include "construct_util.hpp"
#include "encap/constructions.hpp"

namespace encap {

using detail::Constraints;
using detail::body_name;
using detail::ivec;
using detail::try_add_piece;

namespace {

using Pt = RVector;

Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Pt lerp(const Pt& p, const Pt& q, const Rational& t) { return axpy(p, t, sub(q, p)); }

// Counterclockwise strictly convex hull (collinear points dropped).
std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]).sign() <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Open polygon interior from a counterclockwise vertex list.
Constraints polygon_interior(const std::vector<Pt>& h) {
    Constraints cs;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Pt& p = h[i];
        const Pt& q = h[(i + 1) % h.size()];
        RVector n{q[1] - p[1], p[0] - q[0]};
        const Rational off = dot(n, p);
        cs.push_back(lt(std::move(n), off));
    }
    return cs;
}

// Relatively open segment (p, q).
Constraints open_segment(const Pt& p, const Pt& q) {
    RVector n{q[1] - p[1], p[0] - q[0]};
    const Rational off = dot(n, p);
    const RVector u = sub(q, p);
    Constraints cs{eq(std::move(n), off)};
    cs.push_back(gt(u, dot(u, p)));
    cs.push_back(lt(u, dot(u, q)));
    return cs;
}

// Relatively open ray from p in direction u.
Constraints open_ray(const Pt& p, const Pt& u) {
    Constraints cs{eq(RVector{u[1], -u[0]}, u[1] * p[0] - u[0] * p[1])};
    cs.push_back(gt(u, dot(u, p)));
    return cs;
}

}  // namespace

ConstructionReport gen_turan_planar(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t n4) {
    const std::array<std::size_t, 4> n{n1, n2, n3, n4};
    for (std::size_t x : n)
        if (x == 0) throw InputError("turan-planar needs every part size >= 1");

    // Central triangle K4 and three outer regions K1..K3; K_i (i < 3) lies
    // beyond the side opposite vertex i.
    const std::array<Pt, 3> V{ivec({0, 0}), ivec({12, 0}), ivec({6, 10})};
    const Pt centroid{Rational(6), Rational(10, 3)};
    std::array<Pt, 3> ray;
    for (int i = 0; i < 3; ++i) ray[i] = scale(sub(V[i], centroid), Rational(3, 20));
    std::array<Pt, 4> inside;  // an interior point of each region
    for (int i = 0; i < 3; ++i) {
        const Pt mid = lerp(V[(i + 1) % 3], V[(i + 2) % 3], Rational(1, 2));
        inside[i] = axpy(mid, 1, sub(mid, centroid));
    }
    inside[3] = centroid;

    // Shared edge e_ij for i < j, oriented P -> Q.
    std::map<std::pair<int, int>, std::pair<Pt, Pt>> edge;
    for (int i = 0; i < 3; ++i) {
        const Pt& P = V[(i + 1) % 3];
        const Pt& Q = V[(i + 2) % 3];
        edge[{i, 3}] = {lerp(P, Q, Rational(1, 4)), lerp(P, Q, Rational(3, 4))};
    }
    // The ray from vertex v separates the two outer regions other than v.
    for (int vtx = 0; vtx < 3; ++vtx) {
        const int a = std::min((vtx + 1) % 3, (vtx + 2) % 3), b = std::max((vtx + 1) % 3, (vtx + 2) % 3);
        edge[{a, b}] = {axpy(V[vtx], 2, ray[vtx]), axpy(V[vtx], 8, ray[vtx])};
    }

    auto toward = [](const Pt& p, const Pt& q, const Pt& target) {
        Pt perp{p[1] - q[1], q[0] - p[0]};
        if (cross(p, q, target).sign() < 0) perp = scale(perp, -1);
        return perp;
    };

    Rational h_gamma(1, 8);
    for (int attempt = 0; attempt < 24; ++attempt, h_gamma /= 2) {
        // chains[{i,j}][t] = vertices of the chord path delta_t (t = 1..n_i).
        std::map<std::pair<int, int>, std::vector<std::vector<Pt>>> chains;
        for (const auto& [key, pq] : edge) {
            const auto [i, j] = key;
            const auto& [P, Q] = pq;
            const std::size_t ni = n[i], nj = n[j];
            const Pt bulge = toward(P, Q, inside[i]);
            std::vector<Pt> G;
            for (std::size_t k = 0; k <= ni + 2; ++k) {
                const Rational s(static_cast<long>(k), static_cast<long>(ni + 2));
                G.push_back(axpy(lerp(P, Q, s), h_gamma * s * (1 - s), bulge));
            }
            const Rational h_delta = h_gamma / Rational(static_cast<long>(4 * (ni + 2)));
            std::vector<std::vector<Pt>> deltas(ni + 1);
            for (std::size_t t = 1; t <= ni; ++t) {
                const Pt& A = G[t];
                const Pt& B = G[t + 1];
                const Pt out = toward(A, B, inside[j]);
                for (std::size_t k = 0; k <= nj + 2; ++k) {
                    const Rational s(static_cast<long>(k), static_cast<long>(nj + 2));
                    deltas[t].push_back(axpy(lerp(A, B, s), h_delta * s * (1 - s), out));
                }
            }
            chains[key] = std::move(deltas);
        }

        // Segments each polygon K_i^l must have as boundary edges.
        std::vector<std::pair<std::string, std::vector<std::pair<Pt, Pt>>>> polys;
        for (int i = 0; i < 4; ++i) {
            for (std::size_t l = 1; l <= n[i]; ++l) {
                std::vector<std::pair<Pt, Pt>> segs;
                for (int j = 0; j < 4; ++j) {
                    if (j == i) continue;
                    if (i < j) {
                        const auto& D = chains[{i, j}][l];
                        for (std::size_t s = 1; s <= n[j]; ++s) segs.emplace_back(D[s], D[s + 1]);
                    } else {
                        const auto& deltas = chains[{j, i}];
                        for (std::size_t t = 1; t <= n[j]; ++t) segs.emplace_back(deltas[t][l], deltas[t][l + 1]);
                    }
                }
                polys.emplace_back(body_name(i) + "_" + std::to_string(l), std::move(segs));
            }
        }

        bool ok = true;
        std::vector<std::vector<Pt>> hulls;
        for (const auto& [name, segs] : polys) {
            std::vector<Pt> pts;
            for (const auto& [p, q] : segs) {
                pts.push_back(p);
                pts.push_back(q);
            }
            std::vector<Pt> h = convex_hull(pts);
            // Every segment must be a hull edge.
            for (const auto& [p, q] : segs) {
                const auto ip = std::find(h.begin(), h.end(), p), iq = std::find(h.begin(), h.end(), q);
                if (ip == h.end() || iq == h.end()) {
                    ok = false;
                    break;
                }
                const std::size_t a = static_cast<std::size_t>(ip - h.begin()), b = static_cast<std::size_t>(iq - h.begin());
                if ((a + 1) % h.size() != b && (b + 1) % h.size() != a) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
            hulls.push_back(std::move(h));
        }
        if (!ok) continue;

        ConstructionReport r;
        r.name = "turan-planar";
        r.scene.d = 2;
        for (std::size_t k = 0; k < polys.size(); ++k)
            r.scene.bodies.push_back({polys[k].first, {Piece(polygon_interior(hulls[k]), 2)}});
        std::size_t lines = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) lines += n[i] * n[j];
        r.description = "open polygons meeting pairwise along " + std::to_string(lines) + " ordinary segments";
        r.expected_nu[1] = lines;
        r.expected_disjoint = true;
        return r;
    }
    throw InvariantError("turan-planar: no convex-position chord layout found");
}

ConstructionReport gen_disjoint_planar(std::size_t n) {
    if (n < 3) throw InputError("disjoint-planar needs n >= 3");
    const std::size_t m = n - 3;
    const long lm = static_cast<long>(m);
    const Pt O = ivec({0, 0});
    const Pt e3 = ivec({-1, -1});
    // Two bent paths from O: the A path turns clockwise, the B path
    // counterclockwise, so every vertex is a proper corner of each region
    // around it. Chords A_k B_k (k = 1..m) cut the wedge between the paths.
    const Rational bend(1, 4 * static_cast<long>(m + 1));
    std::vector<Pt> A{O}, B{O};
    auto a_dir = [&](long k) { return Pt{Rational(1), -bend * k}; };
    auto b_dir = [&](long k) { return Pt{Rational(-1), 1 - bend * k}; };
    for (long k = 1; k <= lm; ++k) {
        A.push_back(axpy(A.back(), 2, a_dir(k)));
        B.push_back(axpy(B.back(), 2, b_dir(k)));
    }
    const Pt a_tail = a_dir(lm + 1), b_tail = b_dir(lm + 1);

    auto left_of = [](const Pt& p, const Pt& q) {
        RVector nrm{p[1] - q[1], q[0] - p[0]};
        const Rational off = dot(nrm, p);
        return gt(std::move(nrm), off);
    };
    auto right_of = [](const Pt& p, const Pt& q) {
        RVector nrm{p[1] - q[1], q[0] - p[0]};
        const Rational off = dot(nrm, p);
        return lt(std::move(nrm), off);
    };
    auto b_edge = [&](long k) { return k < lm ? std::make_pair(B[k], B[k + 1]) : std::make_pair(B[k], add(B[k], b_tail)); };
    auto a_edge = [&](long k) { return k < lm ? std::make_pair(A[k], A[k + 1]) : std::make_pair(A[k], add(A[k], a_tail)); };

    // Bodies: K1 left of the B path, K2 below the A path, K_{3+k} = Q_k
    // between chords k and k+1 (chord 0 is the apex O).
    std::vector<ConvexBody> bodies(n);
    for (std::size_t i = 0; i < n; ++i) bodies[i].name = body_name(i);
    {
        Constraints left{right_of(O, e3)}, below{left_of(O, e3)};
        for (long k = 0; k <= lm; ++k) {
            const auto [p, q] = b_edge(k);
            left.push_back(left_of(p, q));
            const auto [s, t] = a_edge(k);
            below.push_back(right_of(s, t));
        }
        try_add_piece(bodies[0], std::move(left), 2);
        try_add_piece(bodies[1], std::move(below), 2);
    }
    for (long k = 0; k <= lm; ++k) {
        Constraints cs;
        const auto [bp, bq] = b_edge(k);
        const auto [ap, aq] = a_edge(k);
        cs.push_back(right_of(bp, bq));
        cs.push_back(left_of(ap, aq));
        if (k > 0) cs.push_back(right_of(A[k], B[k]));
        if (k < lm) cs.push_back(left_of(A[k + 1], B[k + 1]));
        if (!try_add_piece(bodies[static_cast<std::size_t>(2 + k)], std::move(cs), 2))
            throw InvariantError("disjoint-planar region is empty");
    }

    // Every edge keeps one S point; its two open halves go to the regions on
    // either side. S = vertices plus one point per edge.
    std::size_t s_count = 1 + 2 * m;
    auto split_segment = [&](const Pt& p, const Pt& q, std::size_t first, std::size_t second) {
        const Pt mid = lerp(p, q, Rational(1, 2));
        try_add_piece(bodies[first], open_segment(p, mid), 2);
        try_add_piece(bodies[second], open_segment(mid, q), 2);
        ++s_count;
    };
    auto split_tail = [&](const Pt& p, const Pt& u, std::size_t near, std::size_t far) {
        const Pt cut = add(p, u);
        try_add_piece(bodies[near], open_segment(p, cut), 2);
        try_add_piece(bodies[far], open_ray(cut, u), 2);
        ++s_count;
    };
    split_tail(O, e3, 0, 1);
    for (long k = 0; k < lm; ++k) {
        const std::size_t q = static_cast<std::size_t>(2 + k);
        split_segment(A[k], A[k + 1], 1, q);
        split_segment(B[k], B[k + 1], q, 0);
        split_segment(A[k + 1], B[k + 1], q, q + 1);
    }
    split_tail(A[m], a_tail, 1, static_cast<std::size_t>(2 + lm));
    split_tail(B[m], b_tail, static_cast<std::size_t>(2 + lm), 0);

    ConstructionReport r;
    r.name = "disjoint-planar";
    r.scene.d = 2;
    r.scene.bodies = std::move(bodies);
    if (s_count != 5 * n - 11) throw InvariantError("disjoint-planar bookkeeping");
    r.description = std::to_string(n) + " disjoint planar bodies leaving " + std::to_string(s_count) + " points";
    r.expected_encapsulated = 5 * n - 11;
    r.expected_nu = {{0, 5 * n - 11}, {1, 0}, {2, 0}};
    r.expected_disjoint = true;
    return r;
}

}  // namespace encap
