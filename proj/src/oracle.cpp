#include "encap/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "encap/arrangement.hpp"
#include "encap/complement.hpp"
#include "encap/errors.hpp"

namespace encap {

bool direction_covered(const Scene& scene, const RVector& p, const RVector& u) {
    for (const ConvexBody& b : scene.bodies)
        for (const Piece& piece : b.pieces) {
            const Interval iv = piece.restrict_to_line(p, u);
            if (iv.empty) continue;
            if ((!iv.lo || *iv.lo <= 0) && (!iv.hi || *iv.hi > 0)) return true;
        }
    return false;
}

SampleCheck sample_check_encapsulated(const Scene& scene, const RVector& p, std::size_t trials, std::uint64_t seed) {
    if (trials == 0) throw InputError("trials must be >= 1");
    if (p.size() != scene.d) throw InputError("point dimension does not match the scene");
    if (scene.body_containing(p)) throw PreconditionError("point " + to_string(p) + " lies in a body");
    SampleCheck out;
    auto test = [&](const RVector& u) {
        ++out.directions_tested;
        if (direction_covered(scene, p, u)) return false;
        out.verdict = SampleVerdict::False;
        out.certificate = u;
        return true;
    };
    for (std::size_t a = 0; a < scene.d; ++a)
        for (int s : {1, -1})
            if (test(scale(unit(scene.d, a), s))) return out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> den_dist(1, 64);
    for (std::size_t k = 0; k < trials; ++k) {
        // Point on the boundary of [-1,1]^d: one coordinate fixed at +-1.
        RVector u(scene.d);
        const long den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(-den, den);
        for (auto& x : u) x = Rational(num_dist(rng), den);
        const std::size_t face = std::uniform_int_distribution<std::size_t>(0, scene.d - 1)(rng);
        u[face] = (rng() & 1u) ? 1 : -1;
        if (test(u)) return out;
    }
    out.verdict = SampleVerdict::AgreeTrue;
    return out;
}

namespace {

std::vector<Hyperplane> scene_hyperplanes(const Scene& scene) {
    std::set<Hyperplane> hs;
    for (const ConvexBody& b : scene.bodies)
        for (const Piece& piece : b.pieces)
            for (const LinConstraint& c : piece.constraints()) hs.insert(canonical_hyperplane(c.normal, c.offset));
    return {hs.begin(), hs.end()};
}

bool in_S(const Scene& scene, const RVector& p) { return !scene.body_containing(p); }

std::vector<std::size_t> grid_cover_1d(const Scene& scene, std::size_t res) {
    std::vector<Rational> pts;
    for (const Hyperplane& h : scene_hyperplanes(scene)) pts.push_back(h.offset / h.normal[0]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const Rational lo = pts.empty() ? Rational(-1) : pts.front() - 1;
    const Rational hi = pts.empty() ? Rational(1) : pts.back() + 1;
    const Rational step = (hi - lo) / Rational(static_cast<long>(res));
    Rational h = step;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) h = std::min(h, pts[i + 1] - pts[i]);
    h /= 1024;

    std::vector<std::size_t> nu(2, 0);
    for (std::size_t k = 0; k <= res && nu[1] == 0; ++k) {
        const Rational t = lo + step * Rational(static_cast<long>(k));
        if (in_S(scene, {t}) && in_S(scene, {t - h}) && in_S(scene, {t + h})) nu[1] = 1;
    }
    for (const Rational& t : pts)
        if (in_S(scene, {t}) && !in_S(scene, {t - h}) && !in_S(scene, {t + h})) ++nu[0];
    return nu;
}

// Counterclockwise order of nonzero planar directions starting at angle 0.
bool angle_less(const RVector& a, const RVector& b) {
    auto half = [](const RVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
    if (half(a) != half(b)) return half(b);
    return a[0] * b[1] - a[1] * b[0] > 0;
}

std::vector<std::size_t> grid_cover_2d(const Scene& scene, std::size_t res) {
    const std::vector<Hyperplane> lines = scene_hyperplanes(scene);
    std::set<RVector> vset;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto sol = solve_affine({lines[i].normal, lines[j].normal}, {lines[i].offset, lines[j].offset}, 2);
            if (sol && sol->kernel.empty()) vset.insert(sol->particular);
        }
    const std::vector<RVector> verts(vset.begin(), vset.end());

    // Box around the vertices (or the lines' closest points to the origin).
    std::vector<RVector> anchor_pts = verts;
    for (const Hyperplane& l : lines) anchor_pts.push_back(scale(l.normal, l.offset / dot(l.normal, l.normal)));
    if (anchor_pts.empty()) anchor_pts.push_back(zeros(2));
    RVector lo = anchor_pts.front(), hi = anchor_pts.front();
    for (const RVector& p : anchor_pts)
        for (int a = 0; a < 2; ++a) lo[a] = std::min(lo[a], p[a]), hi[a] = std::max(hi[a], p[a]);
    Rational extent = std::max(hi[0] - lo[0], hi[1] - lo[1]);
    const Rational margin = std::max(Rational(1), extent / 8);
    for (int a = 0; a < 2; ++a) lo[a] -= margin, hi[a] += margin;
    extent += 2 * margin;
    const Rational step = extent / Rational(static_cast<long>(res));

    // Below every positive coordinate gap, hence below the distance between
    // any two vertices.
    Rational h = step;
    for (int a = 0; a < 2; ++a) {
        std::vector<Rational> cs;
        for (const RVector& p : verts) cs.push_back(p[a]);
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) h = std::min(h, cs[i + 1] - cs[i]);
    }
    // Probes of max-norm 2h from a vertex stay off every line missing it.
    for (const RVector& p : verts)
        for (const Hyperplane& l : lines) {
            const Rational gap = abs(dot(l.normal, p) - l.offset);
            if (gap != 0) h = std::min(h, gap / (4 * (abs(l.normal[0]) + abs(l.normal[1]))));
        }
    // Probes of max-norm 2h from a vertex stay off every line missing it.
    for (const RVector& p : verts)
        for (const Hyperplane& l : lines) {
            const Rational gap = abs(dot(l.normal, p) - l.offset);
            if (gap != 0) h = std::min(h, gap / (4 * (abs(l.normal[0]) + abs(l.normal[1]))));
        }
    h /= 1024;

    static const long ring[16][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {1, 1},   {1, -1},  {-1, 1},  {-1, -1},
                                     {1, 2},  {1, -2}, {-1, 2}, {-1, -2}, {2, 1},  {2, -1},  {-2, 1},  {-2, -1}};
    auto off = [&](const RVector& p, long a, long b) { return RVector{p[0] + h * a, p[1] + h * b}; };

    std::vector<std::size_t> nu(3, 0);
    for (std::size_t i = 0; i <= res && nu[2] == 0; ++i)
        for (std::size_t j = 0; j <= res && nu[2] == 0; ++j) {
            const RVector p{lo[0] + step * Rational(static_cast<long>(i)), lo[1] + step * Rational(static_cast<long>(j))};
            if (!in_S(scene, p)) continue;
            bool all = true;
            for (const auto& r : ring)
                if (!in_S(scene, off(p, r[0], r[1]))) {
                    all = false;
                    break;
                }
            if (all) nu[2] = 1;
        }

    // A vertex is isolated in S iff no probe leaves it inside S: one probe
    // along each scene line through it, one inside each angular sector.
    for (const RVector& p : verts) {
        if (!in_S(scene, p)) continue;
        std::vector<RVector> dirs;
        for (const Hyperplane& l : lines) {
            if (l.side(p) != 0) continue;
            RVector u{-l.normal[1], l.normal[0]};
            u = scale(u, 1 / std::max(abs(u[0]), abs(u[1])));
            dirs.push_back(u);
            dirs.push_back(scale(u, -1));
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
        std::vector<RVector> probes = dirs;
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            const RVector& a = dirs[k];
            const RVector& b = dirs[(k + 1) % dirs.size()];
            const RVector mid = add(a, b);
            probes.push_back(is_zero(mid) ? RVector{-a[1], a[0]} : mid);
        }
        bool isolated = true;
        for (const RVector& u : probes)
            if (in_S(scene, axpy(p, h, u))) {
                isolated = false;
                break;
            }
        if (isolated) ++nu[0];
    }

    for (const Hyperplane& l : lines) {
        const RVector u{-l.normal[1], l.normal[0]};
        const RVector nrm = l.normal;
        const Rational uu = dot(u, u);
        const RVector p0 = scale(nrm, l.offset / dot(nrm, nrm));
        // Parameters: a grid across the box plus vertices on the line and
        // the midpoints between them.
        std::vector<Rational> ts;
        for (const RVector& v : verts)
            if (l.side(v) == 0) ts.push_back(dot(sub(v, p0), u) / uu);
        std::sort(ts.begin(), ts.end());
        const std::size_t nv = ts.size();
        for (std::size_t k = 0; k + 1 < nv; ++k) ts.push_back((ts[k] + ts[k + 1]) / 2);
        Rational tlo, thi;
        bool first = true;
        for (long cx : {0, 1})
            for (long cy : {0, 1}) {
                const RVector c{cx ? hi[0] : lo[0], cy ? hi[1] : lo[1]};
                const Rational t = dot(sub(c, p0), u) / uu;
                if (first || t < tlo) tlo = t;
                if (first || t > thi) thi = t;
                first = false;
            }
        for (std::size_t k = 0; k <= res; ++k) ts.push_back(tlo + (thi - tlo) * Rational(static_cast<long>(k), static_cast<long>(res)));
        const Rational hu = h / std::max(abs(u[0]), abs(u[1]));
        const Rational hn = h / std::max(abs(nrm[0]), abs(nrm[1]));
        for (const Rational& t : ts) {
            const RVector q = axpy(p0, t, u);
            if (!in_S(scene, q) || !in_S(scene, axpy(q, hu, u)) || !in_S(scene, axpy(q, -hu, u))) continue;
            bool ok = true;
            for (long a : {-1, 0, 1})
                for (long b : {-1, 1})
                    if (ok && in_S(scene, axpy(axpy(q, hu * a, u), hn * b, nrm))) ok = false;
            if (ok) {
                ++nu[1];
                break;
            }
        }
    }
    return nu;
}

}  // namespace

std::vector<std::size_t> grid_cover_check(const Scene& scene, std::size_t resolution) {
    if (scene.d > 2) throw InputError("grid_cover_check supports d <= 2 only");
    if (resolution < 16) throw InputError("grid_cover_check needs resolution >= 16");
    return scene.d == 1 ? grid_cover_1d(scene, resolution) : grid_cover_2d(scene, resolution);
}

Concordance oracle_concordance(const Scene& scene, std::size_t trials, std::uint64_t seed, std::size_t resolution,
                               std::size_t budget) {
    Concordance c;
    const ComplementAnalyzer a(scene, budget);
    const ComplementSurvey sv = a.survey();
    std::vector<RVector> pts;
    for (const Cell& cell : sv.cells) pts.push_back(cell.witness);
    if (sv.interior_point) pts.push_back(*sv.interior_point);
    for (const RVector& p : pts) {
        ++c.points;
        const int k = a.local(p).local_dim;
        const SampleCheck s = sample_check_encapsulated(scene, p, trials, seed);
        if (k == 0) {
            if (s.verdict == SampleVerdict::False)
                c.contradictions.push_back("exact engine calls " + to_string(p) + " encapsulated but direction " +
                                           to_string(*s.certificate) + " stays in S");
            else ++c.agree_encapsulated;
        } else if (s.verdict == SampleVerdict::False) {
            ++c.certified;
        } else {
            ++c.non_isolated;
        }
    }
    if (scene.d <= 2) {
        c.grid_checked = true;
        c.exact_nu = strong_cover(scene, budget, seed).nu;
        c.grid_nu = grid_cover_check(scene, resolution);
        if (c.grid_nu != c.exact_nu) {
            std::string g, e;
            for (auto x : c.grid_nu) g += std::to_string(x) + " ";
            for (auto x : c.exact_nu) e += std::to_string(x) + " ";
            c.contradictions.push_back("grid estimate nu = ( " + g + ") differs from exact nu = ( " + e + ")");
        }
    }
    return c;
}

bool AuditReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

AuditReport euler_audit(const Scene& scene, std::size_t budget) {
    if (scene.d != 2) throw PreconditionError("euler_audit needs a planar scene");
    const DisjointnessResult dj = bodies_pairwise_disjoint(scene);
    if (!dj.disjoint)
        throw PreconditionError("bodies " + scene.bodies[dj.first].name + " and " + scene.bodies[dj.second].name +
                                " overlap at " + to_string(dj.witness));
    std::vector<std::vector<const Piece*>> full(scene.bodies.size());
    for (std::size_t i = 0; i < scene.bodies.size(); ++i) {
        for (const Piece& p : scene.bodies[i].pieces)
            if (p.dim() == 2) full[i].push_back(&p);
        if (full[i].empty()) throw PreconditionError("body " + scene.bodies[i].name + " is not full-dimensional");
    }
    const ComplementAnalyzer analyzer(scene, budget);
    const ComplementSurvey sv = analyzer.survey();
    if (sv.has_interior) throw PreconditionError("complement is infinite: it has interior points");
    for (const Cell& c : sv.cells)
        if (c.dim > 0) throw PreconditionError("complement is infinite: it contains " + to_string(c.witness) + " on a " +
                                               std::to_string(c.dim) + "-dimensional cell");

    AuditReport r;
    r.f = scene.bodies.size();
    r.s_count = sv.cells.size();
    // Edges: one-dimensional cl(K_a) n cl(K_b), the union of the closed
    // pairwise intersections of full-dimensional pieces.
    for (std::size_t a = 0; a < r.f; ++a)
        for (std::size_t b = a + 1; b < r.f; ++b) {
            std::vector<Piece> parts;
            for (const Piece* pa : full[a])
                for (const Piece* pb : full[b]) {
                    auto cs = pa->closure_constraints();
                    for (auto& c : pb->closure_constraints()) cs.push_back(c);
                    try {
                        Piece z(std::move(cs), 2);
                        if (z.dim() == 1) parts.push_back(std::move(z));
                    } catch (const InputError&) {
                    }
                }
            if (parts.empty()) continue;
            AuditEdge e;
            e.a = a;
            e.b = b;
            e.p0 = parts.front().witness();
            const auto& cs0 = parts.front().constraints();
            for (const LinConstraint& c : cs0)
                if (c.rel == Relation::Eq) {
                    e.u = {-c.normal[1], c.normal[0]};
                    break;
                }
            if (e.u.empty()) {
                // Implicit equality: recover the direction from two points.
                std::mt19937_64 rng(7);
                RVector q = parts.front().sample(rng);
                for (int k = 0; k < 8 && q == e.p0; ++k) q = parts.front().sample(rng);
                if (q == e.p0) throw InvariantError("euler_audit: cannot find edge direction");
                e.u = sub(q, e.p0);
            }
            bool lo_inf = false, hi_inf = false;
            for (const Piece& z : parts) {
                const Interval iv = z.restrict_to_line(e.p0, e.u);
                if (iv.empty) throw InvariantError("euler_audit: edge pieces are not collinear");
                if (!iv.lo) lo_inf = true;
                else if (!e.lo || *iv.lo < *e.lo) e.lo = iv.lo;
                if (!iv.hi) hi_inf = true;
                else if (!e.hi || *iv.hi > *e.hi) e.hi = iv.hi;
            }
            if (lo_inf) e.lo.reset();
            if (hi_inf) e.hi.reset();
            e.kind = (e.lo && e.hi) ? AuditEdge::Kind::Segment : (e.lo || e.hi) ? AuditEdge::Kind::Ray : AuditEdge::Kind::Line;
            r.edges.push_back(std::move(e));
        }
    r.e = r.edges.size();
    std::set<RVector> cand;
    for (const AuditEdge& e : r.edges) {
        if (e.lo) cand.insert(axpy(e.p0, *e.lo, e.u));
        if (e.hi) cand.insert(axpy(e.p0, *e.hi, e.u));
        if (e.kind == AuditEdge::Kind::Ray) ++r.e_r;
        if (e.kind == AuditEdge::Kind::Line) ++r.e_l;
    }
    for (const RVector& p : cand) {
        std::size_t k = 0;
        for (const ConvexBody& b : scene.bodies)
            if (b.closure_contains(p)) ++k;
        if (k >= 3) r.vertices.push_back(p);
    }
    r.v = r.vertices.size();
    for (const RVector& p : r.vertices)
        for (const AuditEdge& e : r.edges) {
            // p on the closed edge?
            const RVector w = sub(p, e.p0);
            if ((w[0] * e.u[1] - w[1] * e.u[0]).sign() != 0) continue;
            const Rational t = dot(w, e.u) / dot(e.u, e.u);
            if ((!e.lo || t >= *e.lo) && (!e.hi || t <= *e.hi)) ++r.X;
        }
    r.bound_value = 5 * static_cast<long>(r.f) - 11;
    const long v = static_cast<long>(r.v), e = static_cast<long>(r.e), f = static_cast<long>(r.f);
    const long er = static_cast<long>(r.e_r), el = static_cast<long>(r.e_l), X = static_cast<long>(r.X);
    r.checks = {{"v-e+f=1", v - e + f == 1},
                {"3v<=X", 3 * v <= X},
                {"X<=2e-e_r-2e_l", X <= 2 * e - er - 2 * el},
                {"e_r+2e_l>=3", er + 2 * el >= 3},
                {"|S|<=v+e", static_cast<long>(r.s_count) <= v + e},
                {"v+e<=5f-11", v + e <= r.bound_value}};
    return r;
}

}  // namespace encap
