#include <algorithm>

#include "construct_util.hpp"
#include "encap/constructions.hpp"

namespace encap {

using detail::Affine;
using detail::Constraints;
using detail::body_name;
using detail::push_sign;
using detail::try_add_piece;

std::vector<std::vector<std::size_t>> cyclic_polytope_facets(std::size_t n, std::size_t dim) {
    if (dim < 2 || n < dim + 1) throw InputError("cyclic polytope needs dim >= 2 and n >= dim + 1");
    if (n > 20) throw ResourceError("cyclic polytope facet enumeration supports n <= 20");
    std::vector<std::vector<std::size_t>> facets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != dim) continue;
        // Gale evenness: between any two non-members an even number of members.
        bool ok = true;
        std::size_t run = 0;
        bool seen_gap = false;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (mask >> i & 1u) {
                ++run;
            } else {
                if (seen_gap && run % 2 == 1) ok = false;
                seen_gap = true;
                run = 0;
            }
        }
        if (!ok) continue;
        std::vector<std::size_t> f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) f.push_back(i);
        facets.push_back(std::move(f));
    }
    std::sort(facets.begin(), facets.end());
    return facets;
}

namespace {

// Linear functionals f_i on R^d whose upper envelope regions are the
// central projections of the facets of the polar of a cyclic
// (d+1)-polytope. Returns the functionals and the polar's facet count.
struct Projection {
    std::vector<Affine> f;
    std::size_t polar_vertices = 0;
};

Projection project_polar(std::size_t d, std::size_t n) {
    const std::size_t D = d + 1;
    const auto facets = cyclic_polytope_facets(n, D);
    // Points on the moment curve, sheared (an affine map keeps the facet
    // structure) until the polar has a unique highest vertex.
    for (long shear = 1; shear <= 16; ++shear) {
        std::vector<RVector> v(n, zeros(D));
        RVector centroid = zeros(D);
        for (std::size_t i = 0; i < n; ++i) {
            Rational t(static_cast<long>(i) + 1), pw(1);
            for (std::size_t a = 0; a < D; ++a) v[i][a] = pw *= t;
            for (std::size_t a = 0; a + 1 < D; ++a) v[i][a] += Rational(shear * static_cast<long>(a + 1), 100) * v[i][D - 1];
            centroid = add(centroid, v[i]);
        }
        centroid = scale(centroid, Rational(1, static_cast<long>(n)));
        for (auto& x : v) x = sub(x, centroid);

        // Vertices of the polar {y : v_i . y <= 1}, one per facet.
        std::vector<RVector> verts;
        for (const auto& F : facets) {
            RMatrix a;
            for (std::size_t i : F) a.push_back(v[i]);
            auto sol = solve_affine(a, RVector(D, Rational(1)), D);
            if (!sol || !sol->kernel.empty()) throw InvariantError("degenerate cyclic polytope facet");
            verts.push_back(sol->particular);
        }
        std::size_t top = 0;
        for (std::size_t k = 1; k < verts.size(); ++k)
            if (verts[k][D - 1] > verts[top][D - 1]) top = k;
        Rational second, lowest = verts[0][D - 1];
        bool unique = true, have_second = false;
        for (std::size_t k = 0; k < verts.size(); ++k) {
            lowest = std::min(lowest, verts[k][D - 1]);
            if (k == top) continue;
            if (verts[k][D - 1] == verts[top][D - 1]) unique = false;
            if (!have_second || verts[k][D - 1] > second) second = verts[k][D - 1], have_second = true;
        }
        if (!unique) continue;
        // Projection centre inside the polar, above every vertex but the top.
        const RVector& x = verts[top];
        Rational lambda(1, 2);
        RVector xp = scale(x, 1 - lambda);
        while (xp[D - 1] <= second) {
            lambda /= 2;
            xp = scale(x, 1 - lambda);
        }
        const Rational c = lowest - 1;
        Projection out;
        out.polar_vertices = verts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const RVector w = scale(v[i], 1 / (1 - dot(v[i], xp)));
            RVector g(w.begin(), w.begin() + static_cast<long>(d));
            out.f.push_back({std::move(g), w[d] * c - dot(w, xp)});
        }
        return out;
    }
    throw InvariantError("no cyclic polytope with a unique top polar vertex found");
}

Affine minus(const Affine& a, const Affine& b) { return {sub(a.g, b.g), a.f - b.f}; }

}  // namespace

ConstructionReport gen_neighborly_tiling(std::size_t d, std::size_t n) {
    if (d < 3) throw InputError("neighborly-tiling needs d >= 3");
    if (n < d + 1) throw InputError("neighborly-tiling needs n >= d + 1");
    std::vector<Affine> f;
    if (n == d + 1) {
        for (std::size_t i = 0; i < d; ++i) f.push_back({unit(d, i), 0});
        f.push_back({RVector(d, Rational(-1)), 0});
    } else {
        f = project_polar(d, n).f;
    }
    ConstructionReport r;
    r.name = "neighborly-tiling";
    r.scene.d = d;
    for (std::size_t i = 0; i < n; ++i) {
        Constraints cs;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !push_sign(cs, minus(f[i], f[j]), 1)) throw InvariantError("neighborly-tiling: equal functionals");
        ConvexBody body{body_name(i), {}};
        if (!try_add_piece(body, std::move(cs), d)) throw InvariantError("neighborly-tiling: empty region");
        r.scene.bodies.push_back(std::move(body));
    }
    const std::size_t walls = n * (n - 1) / 2;
    r.description = std::to_string(n) + " open cells tiling R^" + std::to_string(d) + ", pairwise adjacent along walls";
    for (std::size_t k = 0; k <= d; ++k) r.expected_nu[static_cast<int>(k)] = k + 1 == d ? walls : 0;
    r.expected_disjoint = true;
    return r;
}

ConstructionReport gen_carved_tiling(std::size_t d, std::size_t n) {
    if (d < 3 || n <= d + 1) throw InputError("carved-tiling needs n > d + 1 >= 4");
    const Projection proj = project_polar(d, n);
    const auto& f = proj.f;
    ConstructionReport r;
    r.name = "carved-tiling";
    r.scene.d = d;
    for (std::size_t i = 0; i < n; ++i) r.scene.bodies.push_back({body_name(i), {}});
    // Each relatively open face {f_t equal and maximal exactly for t in T}
    // of dimension >= 1 goes to the body of min T; vertices stay uncovered.
    std::size_t vertices = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> T;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) T.push_back(i);
        if (T.size() > d + 1) continue;
        Constraints cs;
        bool ok = true;
        for (std::size_t k = 1; k < T.size() && ok; ++k) ok = push_sign(cs, minus(f[T[k]], f[T[0]]), 0);
        for (std::size_t k = 0; k < n && ok; ++k)
            if (!(mask >> k & 1u)) ok = push_sign(cs, minus(f[k], f[T[0]]), -1);
        if (!ok) continue;
        try {
            Piece face(std::move(cs), d);
            if (face.dim() == 0) ++vertices;
            else r.scene.bodies[T[0]].pieces.push_back(std::move(face));
        } catch (const InputError&) {
        }
    }
    for (const auto& b : r.scene.bodies)
        if (b.pieces.empty()) throw InvariantError("carved-tiling: empty body");
    r.description = std::to_string(n) + " disjoint carved cells; " + std::to_string(vertices) +
                    " projected polar vertices stay uncovered";
    // One expected point per facet of the cyclic polytope.
    r.expected_encapsulated = proj.polar_vertices;
    r.expected_disjoint = true;
    return r;
}

}  // namespace encap
