#include "encap/geom.hpp"

#include <algorithm>
#include <set>

#include "encap/errors.hpp"

namespace encap {

Interval Interval::everything() {
    Interval r;
    r.empty = false;
    return r;
}

bool Interval::contains(const Rational& t) const {
    if (empty) return false;
    if (lo && (lo_closed ? t < *lo : t <= *lo)) return false;
    if (hi && (hi_closed ? t > *hi : t >= *hi)) return false;
    return true;
}

Interval Interval::intersect(const Interval& o) const {
    if (empty || o.empty) return Interval{};
    Interval r = *this;
    if (o.lo && (!r.lo || *o.lo > *r.lo || (*o.lo == *r.lo && !o.lo_closed))) {
        r.lo = o.lo;
        r.lo_closed = o.lo_closed;
    }
    if (o.hi && (!r.hi || *o.hi < *r.hi || (*o.hi == *r.hi && !o.hi_closed))) {
        r.hi = o.hi;
        r.hi_closed = o.hi_closed;
    }
    if (r.lo && r.hi && (*r.lo > *r.hi || (*r.lo == *r.hi && !(r.lo_closed && r.hi_closed)))) return Interval{};
    return r;
}

std::optional<Rational> first_uncovered(const std::vector<Interval>& parts, const Rational& a, const Rational& b) {
    std::set<Rational> marks{a, b};
    for (const auto& iv : parts) {
        if (iv.empty) continue;
        if (iv.lo && *iv.lo > a && *iv.lo < b) marks.insert(*iv.lo);
        if (iv.hi && *iv.hi > a && *iv.hi < b) marks.insert(*iv.hi);
    }
    // Coverage is constant on each open gap between consecutive marks.
    std::vector<Rational> probes;
    const Rational* prev = nullptr;
    for (const auto& m : marks) {
        if (prev) probes.push_back((*prev + m) / 2);
        probes.push_back(m);
        prev = &m;
    }
    for (const auto& t : probes) {
        bool covered = false;
        for (const auto& iv : parts)
            if (iv.contains(t)) {
                covered = true;
                break;
            }
        if (!covered) return t;
    }
    return std::nullopt;
}

Piece::Piece(std::vector<LinConstraint> constraints, std::size_t d) : constraints_(std::move(constraints)), d_(d) {
    if (constraints_.empty()) throw InputError("piece without constraints");
    for (const auto& c : constraints_) {
        if (c.normal.size() != d) throw InputError("constraint arity does not match dimension");
        if (is_zero(c.normal)) throw InputError("constraint with zero normal vector");
    }
    auto r = lp_feasible(constraints_, d);
    if (!r) throw InputError("empty piece");
    witness_ = std::move(r.witness);

    // Implicit equalities: equality rows and non-strict rows that cannot be made strict.
    RMatrix tight;
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        const auto& c = constraints_[i];
        if (c.rel == Relation::Eq) {
            tight.push_back(c.normal);
        } else if (c.rel == Relation::Le) {
            auto probe = constraints_;
            probe[i].rel = Relation::Lt;
            if (!lp_feasible(probe, d)) tight.push_back(c.normal);
        }
    }
    hull_ = nullspace(tight, d);
    dim_ = static_cast<int>(hull_.size());
}

bool Piece::contains(const RVector& p) const {
    for (const auto& c : constraints_)
        if (!c.satisfied_by(p)) return false;
    return true;
}

bool Piece::closure_contains(const RVector& p) const {
    for (const auto& c : constraints_) {
        const Relation r = c.rel == Relation::Lt ? Relation::Le : c.rel;
        if (!relation_holds(r, dot(c.normal, p), c.offset)) return false;
    }
    return true;
}

std::vector<LinConstraint> Piece::closure_constraints() const {
    auto out = constraints_;
    for (auto& c : out)
        if (c.rel == Relation::Lt) c.rel = Relation::Le;
    return out;
}

Interval Piece::restrict_to_line(const RVector& p, const RVector& u) const {
    Interval iv = Interval::everything();
    for (const auto& c : constraints_) {
        const Rational alpha = dot(c.normal, u);
        const Rational beta = dot(c.normal, p) - c.offset;
        Interval part = Interval::everything();
        if (alpha.is_zero()) {
            if (!relation_holds(c.rel, beta, Rational(0))) return Interval{};
            continue;
        }
        const Rational root = -beta / alpha;
        if (c.rel == Relation::Eq) {
            part.lo = part.hi = root;
            part.lo_closed = part.hi_closed = true;
        } else if (alpha.sign() > 0) {
            part.hi = root;
            part.hi_closed = c.rel == Relation::Le;
        } else {
            part.lo = root;
            part.lo_closed = c.rel == Relation::Le;
        }
        iv = iv.intersect(part);
        if (iv.empty) return iv;
    }
    return iv;
}

RVector Piece::sample(std::mt19937_64& rng) const {
    RVector x = witness_;
    if (hull_.empty()) return x;
    std::uniform_int_distribution<long> coef(-3, 3), frac(1, 7);
    for (int step = 0; step < 2; ++step) {
        RVector u = zeros(d_);
        for (const auto& b : hull_) u = axpy(u, Rational(coef(rng)), b);
        if (is_zero(u)) continue;
        const Interval iv = restrict_to_line(x, u);
        // x is in the piece, so 0 is in iv; pick a point strictly inside the chord.
        const Rational lo = iv.lo ? *iv.lo : Rational(-4);
        const Rational hi = iv.hi ? *iv.hi : Rational(4);
        if (lo >= hi) continue;
        const Rational t = lo + (hi - lo) * Rational(frac(rng), 8);
        x = axpy(x, t, u);
    }
    if (!contains(x)) throw InvariantError("piece sample left the piece");
    return x;
}

bool ConvexBody::contains(const RVector& p) const {
    return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& q) { return q.contains(p); });
}

bool ConvexBody::closure_contains(const RVector& p) const {
    return std::any_of(pieces.begin(), pieces.end(), [&](const Piece& q) { return q.closure_contains(p); });
}

void Scene::validate() const {
    if (d == 0) throw InputError("scene dimension must be at least 1");
    std::set<std::string> names;
    for (const auto& b : bodies) {
        if (b.name.empty()) throw InputError("body with empty name");
        if (!names.insert(b.name).second) throw InputError("duplicate body name '" + b.name + "'");
        if (b.pieces.empty()) throw InputError("body '" + b.name + "' has no pieces");
        for (const auto& p : b.pieces)
            if (p.ambient() != d) throw InputError("body '" + b.name + "' has a piece of wrong dimension");
    }
}

std::optional<std::size_t> Scene::body_containing(const RVector& p) const {
    for (std::size_t i = 0; i < bodies.size(); ++i)
        if (bodies[i].contains(p)) return i;
    return std::nullopt;
}

std::size_t Scene::piece_count() const {
    std::size_t n = 0;
    for (const auto& b : bodies) n += b.pieces.size();
    return n;
}

bool DirectionCone::contains(const RVector& v) const {
    if (empty || is_zero(v)) return false;
    for (const auto& c : constraints)
        if (!c.satisfied_by(v)) return false;
    return true;
}

bool piece_contains(const Piece& piece, const RVector& p) { return piece.contains(p); }

bool body_touches(const ConvexBody& body, const RVector& p) { return body.closure_contains(p) && !body.contains(p); }

DirectionCone entry_cone(const Piece& piece, const RVector& p) {
    DirectionCone cone;
    for (const auto& c : piece.constraints()) {
        const Rational r = c.residual(p);
        if (r.is_zero()) {
            cone.constraints.push_back({c.normal, Rational(0), c.rel});
        } else if (r.sign() > 0 || c.rel == Relation::Eq) {
            cone.empty = true;
            cone.constraints.clear();
            return cone;
        }
    }
    return cone;
}

DisjointnessResult bodies_pairwise_disjoint(const Scene& scene) {
    for (std::size_t i = 0; i < scene.bodies.size(); ++i)
        for (std::size_t j = i + 1; j < scene.bodies.size(); ++j)
            for (const auto& p : scene.bodies[i].pieces)
                for (const auto& q : scene.bodies[j].pieces) {
                    auto cs = p.constraints();
                    cs.insert(cs.end(), q.constraints().begin(), q.constraints().end());
                    auto r = lp_feasible(cs, scene.d);
                    if (r) return {false, i, j, std::move(r.witness)};
                }
    return {};
}

ConvexityResult verify_convex_union(const ConvexBody& body, std::size_t budget, std::uint64_t seed) {
    if (budget == 0) throw InputError("convexity check budget must be positive");
    if (body.pieces.empty()) throw InputError("body has no pieces");
    const auto check = [&](const RVector& a, const RVector& b) -> std::optional<ConvexityResult> {
        const RVector u = sub(b, a);
        std::vector<Interval> parts;
        for (const auto& q : body.pieces) parts.push_back(q.restrict_to_line(a, u));
        if (auto t = first_uncovered(parts, Rational(0), Rational(1))) return ConvexityResult{false, a, b, axpy(a, *t, u)};
        return std::nullopt;
    };
    const auto& ps = body.pieces;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (auto bad = check(ps[i].witness(), ps[j].witness())) return *bad;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, ps.size() - 1);
    for (std::size_t k = 0; k < budget; ++k) {
        const auto& p = ps[pick(rng)];
        const auto& q = ps[pick(rng)];
        if (auto bad = check(p.sample(rng), q.sample(rng))) return *bad;
    }
    return {};
}

}  // namespace encap
