#include "encap/complement.hpp"

#include <algorithm>
#include <map>

#include "encap/errors.hpp"

namespace encap {

ComplementAnalyzer::ComplementAnalyzer(const Scene& scene, std::size_t budget) : scene_(scene), index_(scene, budget) {}

LocalStructure ComplementAnalyzer::local(const RVector& p) const {
    if (p.size() != scene_.d) throw InputError("point dimension does not match scene");
    if (auto b = scene_.body_containing(p))
        throw PreconditionError("point " + to_string(p) + " lies in body '" + scene_.bodies[*b].name + "'");
    LocalStructure out;
    out.point = p;
    const SignVector sign = index_.sign_of(p);
    std::vector<std::size_t> to_local(sign.size(), 0);
    std::vector<Hyperplane> planes;
    for (std::size_t i = 0; i < sign.size(); ++i)
        if (sign[i] == 0) {
            to_local[i] = planes.size();
            out.active.push_back(i);
            planes.push_back({index_.planes()[i].normal, Rational(0)});
        }

    // Entry cones of the pieces whose closure holds p, as sign masks on the active planes.
    std::vector<std::vector<std::pair<std::size_t, std::uint8_t>>> cones;
    for (const auto& cp : index_.pieces()) {
        if (!cp.closure_holds(sign)) continue;
        std::vector<std::pair<std::size_t, std::uint8_t>> rows;
        for (const auto& r : cp.rows)
            if (sign[r.plane] == 0) rows.emplace_back(to_local[r.plane], r.mask());
        cones.push_back(std::move(rows));
    }

    SignSearch search(planes, scene_.d);
    search.run([&](const SignVector& s, int dim, const RVector& w) {
        bool covered = false;
        for (const auto& rows : cones) {
            bool inside = true;
            for (auto [i, mask] : rows)
                if (!(mask & sign_bit(s[i]))) {
                    inside = false;
                    break;
                }
            if (inside) {
                covered = true;
                break;
            }
        }
        RMatrix zero;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == 0) zero.push_back(planes[i].normal);
        out.cells.push_back({s, dim, w, !covered, nullspace(zero, scene_.d)});
        return true;
    });

    RMatrix spans;
    for (const auto& c : out.cells)
        if (c.in_S) {
            out.local_dim = std::max(out.local_dim, c.dim);
            spans.insert(spans.end(), c.span.begin(), c.span.end());
        }
    const RMatrix basis = rref(spans);
    if (static_cast<int>(basis.size()) != out.local_dim) return out;

    // p is ordinary iff no covered direction class meets the span of the uncovered ones.
    std::vector<LinConstraint> span_eqs;
    for (auto& n : nullspace(basis, scene_.d)) span_eqs.push_back(eq(std::move(n), 0));
    for (const auto& c : out.cells) {
        if (c.in_S) continue;
        std::vector<LinConstraint> rows = span_eqs;
        for (std::size_t i = 0; i < c.sign.size(); ++i) {
            const auto& n = planes[i].normal;
            rows.push_back(c.sign[i] < 0 ? lt(n, 0) : c.sign[i] == 0 ? eq(n, 0) : gt(n, 0));
        }
        if (lp_feasible(rows, scene_.d)) return out;
    }
    out.ordinary_flat = Flat(p, basis);
    return out;
}

namespace {

// Open interval of t keeping p + t u inside the cell; the cell's zero planes
// must contain u.
std::pair<std::optional<Rational>, std::optional<Rational>> cell_chord(const HyperplaneIndex& idx, const SignVector& sign,
                                                                       const RVector& p, const RVector& u) {
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < sign.size(); ++i) {
        if (sign[i] == 0) continue;
        const auto& h = idx.planes()[i];
        const Rational alpha = dot(h.normal, u);
        if (alpha.is_zero()) continue;
        const Rational root = -(dot(h.normal, p) - h.offset) / alpha;
        if (alpha.sign() == sign[i]) {
            if (!lo || root > *lo) lo = root;
        } else if (!hi || root < *hi) {
            hi = root;
        }
    }
    return {lo, hi};
}

}  // namespace

RVector ComplementAnalyzer::sample_cell(const SignVector& sign, const RVector& witness, std::mt19937_64& rng) const {
    RMatrix zero;
    for (std::size_t i = 0; i < sign.size(); ++i)
        if (sign[i] == 0) zero.push_back(index_.planes()[i].normal);
    const RMatrix dirs = nullspace(zero, scene_.d);
    if (dirs.empty()) return witness;
    std::uniform_int_distribution<long> coef(-3, 3), frac(1, 7);
    RVector u = zeros(scene_.d);
    while (is_zero(u))
        for (const auto& b : dirs) u = axpy(u, Rational(coef(rng)), b);
    auto [lo, hi] = cell_chord(index_, sign, witness, u);
    const Rational a = lo ? *lo : Rational(-2), b = hi ? *hi : Rational(2);
    const RVector q = axpy(witness, a + (b - a) * Rational(frac(rng), 8), u);
    if (index_.sign_of(q) != sign) throw InvariantError("cell sample left its cell");
    return q;
}

ComplementSurvey ComplementAnalyzer::survey() const {
    const std::size_t d = scene_.d;
    const auto& pieces = index_.pieces();
    const std::size_t m = index_.size();
    ComplementSurvey out;
    bool any_full = false;
    for (const auto& cp : pieces) any_full = any_full || cp.piece->dim() == static_cast<int>(d);
    out.has_interior = !any_full;

    // A prefix whose region lies in the interior of a piece closure holds no
    // S-cell and no cell bordering an interior point of S.
    std::vector<PruneGroup> groups;
    for (const auto& cp : pieces) {
        PruneGroup g;
        bool has_eq = false;
        for (const auto& r : cp.rows) {
            has_eq = has_eq || r.rel == Relation::Eq;
            g.terms.emplace_back(r.plane, sign_bit(-r.orientation));
        }
        if (!has_eq) groups.push_back(std::move(g));
    }

    std::map<SignVector, Cell> found;
    for (const auto& cp : pieces) {
        SignSearch search(index_.planes(), d);
        std::vector<std::size_t> order;
        std::vector<bool> placed(m, false);
        for (const auto& r : cp.rows) {
            search.restrict_sign(r.plane, r.closure_mask());
            if (!placed[r.plane]) order.push_back(r.plane);
            placed[r.plane] = true;
        }
        for (std::size_t i = 0; i < m; ++i)
            if (!placed[i]) order.push_back(i);
        search.set_order(std::move(order));
        for (const auto& g : groups) search.add_prune_group(g);
        search.run([&](const SignVector& s, int dim, const RVector& w) {
            if (index_.in_S(s) && !found.count(s)) found.emplace(s, Cell{s, dim, w, true, std::vector<bool>(index_.body_count(), false)});
            if (!out.has_interior && dim == static_cast<int>(d) - 1) {
                std::size_t z = 0;
                while (s[z] != 0) ++z;
                for (int side : {-1, 1}) {
                    SignVector t = s;
                    t[z] = static_cast<std::int8_t>(side);
                    if (!index_.in_S(t)) continue;
                    const RVector& n = index_.planes()[z].normal;
                    auto [lo, hi] = cell_chord(index_, s, w, n);
                    const Rational step = side > 0 ? (hi ? *hi / 2 : Rational(1)) : (lo ? *lo / 2 : Rational(-1));
                    out.has_interior = true;
                    out.interior_point = axpy(w, step, n);
                    break;
                }
            }
            return true;
        });
    }
    if (out.has_interior && !out.interior_point) {
        // No full-dimensional pieces: any point off every hyperplane is interior to S.
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
        while (!out.interior_point) {
            RVector x;
            for (std::size_t i = 0; i < d; ++i) x.emplace_back(num(rng), den(rng));
            const SignVector s = index_.sign_of(x);
            if (std::find(s.begin(), s.end(), 0) == s.end()) out.interior_point = std::move(x);
        }
    }
    for (auto& [s, c] : found) out.cells.push_back(std::move(c));
    return out;
}

TouchSet touch_set(const Scene& scene, const RVector& p) {
    if (auto b = scene.body_containing(p))
        throw PreconditionError("point " + to_string(p) + " lies in body '" + scene.bodies[*b].name + "'");
    TouchSet t{p, {}};
    for (std::size_t i = 0; i < scene.bodies.size(); ++i)
        if (scene.bodies[i].closure_contains(p)) t.indices.push_back(i);
    return t;
}

EncapsulationResult is_encapsulated(const Scene& scene, const RVector& p) {
    EncapsulationResult r;
    if ((r.inside_body = scene.body_containing(p))) return r;
    const LocalStructure L = ComplementAnalyzer(scene).local(p);
    if (L.local_dim == 0) {
        r.encapsulated = true;
        return r;
    }
    for (const auto& c : L.cells) {
        if (!c.in_S || c.dim == 0) continue;
        r.uncovered_direction = is_zero(c.witness) ? c.span.front() : c.witness;
        break;
    }
    return r;
}

std::vector<RVector> enumerate_encapsulated(const Scene& scene, std::size_t budget) {
    const ComplementAnalyzer a(scene, budget);
    std::vector<RVector> pts;
    for (const auto& c : a.survey().cells)
        if (c.dim == 0 && a.local(c.witness).local_dim == 0) pts.push_back(c.witness);
    std::sort(pts.begin(), pts.end());
    return pts;
}

int local_dimension(const Scene& scene, const RVector& p) { return ComplementAnalyzer(scene).local(p).local_dim; }

std::optional<Flat> ordinary_flat_at(const Scene& scene, const RVector& p) {
    return ComplementAnalyzer(scene).local(p).ordinary_flat;
}

StrongCover strong_cover(const Scene& scene, std::size_t budget, std::uint64_t seed) {
    const ComplementAnalyzer a(scene, budget);
    const ComplementSurvey sv = a.survey();
    std::mt19937_64 rng(seed);
    std::map<Flat, std::vector<RVector>> flats;
    std::vector<std::pair<RVector, int>> points;  // every examined S point with its local dimension

    for (const auto& c : sv.cells) {
        const LocalStructure first = a.local(c.witness);
        std::vector<RVector> probe{c.witness};
        if (c.dim > 0)
            for (int k = 0; k < 3; ++k) probe.push_back(a.sample_cell(c.sign, c.witness, rng));
        for (std::size_t k = 0; k < probe.size(); ++k) {
            const LocalStructure L = k == 0 ? first : a.local(probe[k]);
            if (L.local_dim != first.local_dim || L.ordinary_flat != first.ordinary_flat)
                throw InvariantError("ordinariness is not constant on cell " + sign_string(c.sign) + " (points " +
                                     to_string(c.witness) + " and " + to_string(probe[k]) + ")");
            if (L.ordinary_flat) flats[*L.ordinary_flat].push_back(probe[k]);
            points.emplace_back(probe[k], L.local_dim);
        }
    }
    if (sv.has_interior) flats[Flat::whole(scene.d)].push_back(*sv.interior_point);

    for (const auto& [p, k] : points) {
        bool ok = false;
        for (const auto& [f, _] : flats)
            if (f.dim() == k && f.contains(p)) {
                ok = true;
                break;
            }
        if (!ok)
            throw InvariantError("point " + to_string(p) + " of local dimension " + std::to_string(k) +
                                 " lies on no ordinary flat of that dimension");
    }
    for (const auto& [f, anchors] : flats) {
        bool needed = false;
        for (const auto& p : anchors) {
            bool elsewhere = false;
            for (const auto& [g, _] : flats)
                if (!(g == f) && g.dim() == f.dim() && g.contains(p)) elsewhere = true;
            if (!elsewhere) {
                needed = true;
                break;
            }
        }
        if (!needed) throw InvariantError("ordinary flat " + f.describe() + " is redundant in the cover");
    }

    StrongCover out;
    out.nu.assign(scene.d + 1, 0);
    for (auto& [f, anchors] : flats) {
        ++out.nu[static_cast<std::size_t>(f.dim())];
        out.flats.push_back(f);
        out.anchors.push_back(anchors.front());
    }
    return out;
}

}  // namespace encap
