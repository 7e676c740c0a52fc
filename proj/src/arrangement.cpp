#include "encap/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "encap/errors.hpp"

namespace encap {

Hyperplane canonical_hyperplane(const RVector& normal, const Rational& offset, int* orientation) {
    if (is_zero(normal)) throw InputError("hyperplane with zero normal");
    Integer l = 1;
    for (const auto& x : normal) l = lcm(l, x.den());
    Integer g = 0;
    int first = 0;
    for (const auto& x : normal) {
        const Integer scaled = x.num() * (l / x.den());
        g = gcd(g, scaled);
        if (first == 0 && sgn(scaled) != 0) first = sgn(scaled);
    }
    const Rational factor = Rational(l, g) * Rational(first);
    if (orientation) *orientation = first;
    return {scale(normal, factor), offset * factor};
}

std::uint8_t CompiledRow::mask() const {
    switch (rel) {
        case Relation::Lt: return sign_bit(-orientation);
        case Relation::Le: return sign_bit(-orientation) | kZero;
        case Relation::Eq: return kZero;
    }
    return 0;
}

std::uint8_t CompiledRow::closure_mask() const {
    return rel == Relation::Eq ? kZero : static_cast<std::uint8_t>(sign_bit(-orientation) | kZero);
}

bool CompiledPiece::holds(const SignVector& s) const {
    for (const auto& r : rows)
        if (!(r.mask() & sign_bit(s[r.plane]))) return false;
    return true;
}

bool CompiledPiece::closure_holds(const SignVector& s) const {
    for (const auto& r : rows)
        if (!(r.closure_mask() & sign_bit(s[r.plane]))) return false;
    return true;
}

HyperplaneIndex::HyperplaneIndex(const Scene& scene, std::size_t budget) : d_(scene.d), bodies_(scene.bodies.size()) {
    std::map<Hyperplane, std::size_t> seen;
    for (std::size_t b = 0; b < scene.bodies.size(); ++b)
        for (const auto& piece : scene.bodies[b].pieces) {
            CompiledPiece cp{b, &piece, {}};
            for (const auto& c : piece.constraints()) {
                int o = 0;
                Hyperplane h = canonical_hyperplane(c.normal, c.offset, &o);
                auto [it, fresh] = seen.emplace(h, planes_.size());
                if (fresh) planes_.push_back(std::move(h));
                cp.rows.push_back({it->second, o, c.rel});
            }
            pieces_.push_back(std::move(cp));
        }
    if (planes_.size() > budget)
        throw ResourceError("arrangement has " + std::to_string(planes_.size()) + " distinct hyperplanes, budget is " +
                            std::to_string(budget));
}

SignVector HyperplaneIndex::sign_of(const RVector& p) const {
    SignVector s(planes_.size());
    for (std::size_t i = 0; i < planes_.size(); ++i) s[i] = static_cast<std::int8_t>(planes_[i].side(p));
    return s;
}

bool HyperplaneIndex::in_body(const SignVector& s, std::size_t body) const {
    for (const auto& p : pieces_)
        if (p.body == body && p.holds(s)) return true;
    return false;
}

bool HyperplaneIndex::in_S(const SignVector& s) const {
    for (const auto& p : pieces_)
        if (p.holds(s)) return false;
    return true;
}

std::vector<bool> HyperplaneIndex::membership(const SignVector& s) const {
    std::vector<bool> m(bodies_, false);
    for (const auto& p : pieces_)
        if (!m[p.body] && p.holds(s)) m[p.body] = true;
    return m;
}

SignSearch::SignSearch(const std::vector<Hyperplane>& planes, std::size_t d)
    : planes_(planes), d_(d), order_(planes.size()), allowed_(planes.size(), kAnySign),
      groups_of_plane_(planes.size()), sign_(planes.size(), 0) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
}

void SignSearch::set_order(std::vector<std::size_t> order) {
    std::vector<std::size_t> check = order;
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> all(planes_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (check != all) throw InvariantError("search order is not a permutation of the planes");
    order_ = std::move(order);
}

void SignSearch::add_prune_group(PruneGroup g) {
    std::map<std::size_t, std::uint8_t> merged;
    for (auto [plane, mask] : g.terms) {
        auto [it, fresh] = merged.emplace(plane, mask);
        if (!fresh) it->second &= mask;
    }
    PruneGroup clean;
    for (auto [plane, mask] : merged) clean.terms.emplace_back(plane, mask);
    const std::size_t id = groups_.size();
    for (auto [plane, mask] : clean.terms) groups_of_plane_.at(plane).push_back(id);
    groups_.push_back(std::move(clean));
}

LinConstraint SignSearch::prefix_row(std::size_t plane, int s) const {
    const auto& h = planes_[plane];
    if (s < 0) return lt(h.normal, h.offset);
    if (s == 0) return eq(h.normal, h.offset);
    return gt(h.normal, h.offset);
}

RMatrix SignSearch::zero_space() const { return nullspace(zero_rows_, d_); }

SignSearch::Line SignSearch::line_through(const RVector& w, const RVector& u) const {
    Line line{u, std::nullopt, std::nullopt};
    for (std::size_t plane : assigned_) {
        const int s = sign_[plane];
        if (s == 0) continue;
        const auto& h = planes_[plane];
        const Rational alpha = dot(h.normal, u);
        if (alpha.is_zero()) continue;
        const Rational root = -(dot(h.normal, w) - h.offset) / alpha;
        if (alpha.sign() == s) {
            if (!line.lo || root > *line.lo) line.lo = root;
        } else {
            if (!line.hi || root < *line.hi) line.hi = root;
        }
    }
    return line;
}

bool SignSearch::run(const Visitor& visit) {
    visit_ = &visit;
    group_hits_.assign(groups_.size(), 0);
    assigned_.clear();
    zero_rows_.clear();
    std::fill(sign_.begin(), sign_.end(), 0);
    const RVector w = zeros(d_);
    std::optional<Line> line;
    if (d_ == 1) line = line_through(w, unit(1, 0));
    return descend(0, w, static_cast<int>(d_), line);
}

namespace {

Rational inside_open(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (lo && hi) return (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    if (hi) return *hi - 1;
    return Rational(0);
}

}  // namespace

bool SignSearch::descend(std::size_t depth, const RVector& w, int dim, const std::optional<Line>& line) {
    if (depth == order_.size()) return (*visit_)(sign_, dim, w);
    const std::size_t h = order_[depth];
    const auto& plane = planes_[h];
    const Rational val = dot(plane.normal, w) - plane.offset;
    const int s0 = val.sign();
    const std::uint8_t ok = allowed_[h];

    if (dim == 0) return !(ok & sign_bit(s0)) || assign(depth, s0, w, 0, std::nullopt);

    if (dim == 1) {
        const Rational alpha = dot(plane.normal, line->u);
        if (alpha.is_zero()) return !(ok & sign_bit(s0)) || assign(depth, s0, w, 1, line);
        const Rational cross = -val / alpha;
        const bool crosses = (!line->lo || *line->lo < cross) && (!line->hi || cross < *line->hi);
        if (!crosses) return !(ok & sign_bit(s0)) || assign(depth, s0, w, 1, line);
        for (int s : {-1, 0, 1}) {
            if (!(ok & sign_bit(s))) continue;
            if (s == 0) {
                if (!assign(depth, 0, axpy(w, cross, line->u), 0, std::nullopt)) return false;
                continue;
            }
            // Values grow with t when alpha > 0, so the negative side lies left of the crossing.
            const bool left = (s < 0) == (alpha.sign() > 0);
            const std::optional<Rational> lo = left ? line->lo : std::optional<Rational>(cross);
            const std::optional<Rational> hi = left ? std::optional<Rational>(cross) : line->hi;
            const Rational t = s == s0 ? Rational(0) : inside_open(lo, hi);
            Line child{line->u, lo, hi};
            if (child.lo) *child.lo -= t;
            if (child.hi) *child.hi -= t;
            if (!assign(depth, s, t.is_zero() ? w : axpy(w, t, line->u), 1, child)) return false;
        }
        return true;
    }

    if (s0 == 0) {
        RMatrix rows = zero_rows_;
        rows.push_back(plane.normal);
        if (rank(rows) == zero_rows_.size()) return !(ok & kZero) || assign(depth, 0, w, dim, std::nullopt);
        // The plane cuts the current flat through w: step off it inside the region.
        RVector b;
        Rational nb;
        for (auto& k : zero_space()) {
            nb = dot(plane.normal, k);
            if (!nb.is_zero()) {
                b = std::move(k);
                break;
            }
        }
        const Line l = line_through(w, b);
        const Rational up = l.hi ? *l.hi / 2 : Rational(1);
        const Rational down = l.lo ? *l.lo / 2 : Rational(-1);
        for (int s : {-1, 0, 1}) {
            if (!(ok & sign_bit(s))) continue;
            if (s == 0) {
                if (!assign(depth, 0, w, dim - 1, std::nullopt)) return false;
                continue;
            }
            const Rational t = (s == nb.sign()) ? up : down;
            if (!assign(depth, s, axpy(w, t, b), dim, std::nullopt)) return false;
        }
        return true;
    }

    std::optional<RVector> other;
    if (ok & (sign_bit(-s0) | kZero)) {
        std::vector<LinConstraint> rows;
        rows.reserve(assigned_.size() + 1);
        for (std::size_t p : assigned_) rows.push_back(prefix_row(p, sign_[p]));
        rows.push_back(prefix_row(h, -s0));
        auto r = lp_feasible(rows, d_);
        if (r) other = std::move(r.witness);
    }
    for (int s : {-1, 0, 1}) {
        if (!(ok & sign_bit(s))) continue;
        if (s == s0) {
            if (!assign(depth, s, w, dim, std::nullopt)) return false;
        } else if (other) {
            if (s == 0) {
                const Rational val2 = dot(plane.normal, *other) - plane.offset;
                const Rational t = val / (val - val2);
                if (!assign(depth, 0, axpy(w, t, sub(*other, w)), dim - 1, std::nullopt)) return false;
            } else {
                if (!assign(depth, s, *other, dim, std::nullopt)) return false;
            }
        }
    }
    return true;
}

bool SignSearch::assign(std::size_t depth, int s, const RVector& w, int dim, const std::optional<Line>& line) {
    const std::size_t h = order_[depth];
    const int current = static_cast<int>(d_) - static_cast<int>(zero_rows_.size());
    const bool pushed = dim < current;
    if (pushed) zero_rows_.push_back(planes_[h].normal);
    sign_[h] = static_cast<std::int8_t>(s);
    assigned_.push_back(h);

    bool pruned = false;
    for (std::size_t g : groups_of_plane_[h]) {
        for (auto [plane, mask] : groups_[g].terms)
            if (plane == h && (mask & sign_bit(s))) {
                if (++group_hits_[g] == groups_[g].terms.size()) pruned = true;
            }
    }

    bool keep_going = true;
    if (!pruned) {
        std::optional<Line> next = line;
        if (dim == 1 && !next) next = line_through(w, zero_space().front());
        keep_going = descend(depth + 1, w, dim, next);
    }

    for (std::size_t g : groups_of_plane_[h])
        for (auto [plane, mask] : groups_[g].terms)
            if (plane == h && (mask & sign_bit(s))) --group_hits_[g];
    assigned_.pop_back();
    sign_[h] = 0;
    if (pushed) zero_rows_.pop_back();
    return keep_going;
}

std::size_t ArrangementIndex::locate(const RVector& p) const {
    SignVector s(hyperplanes.size());
    for (std::size_t i = 0; i < hyperplanes.size(); ++i) s[i] = static_cast<std::int8_t>(hyperplanes[i].side(p));
    auto it = std::lower_bound(cells.begin(), cells.end(), s, [](const Cell& c, const SignVector& k) { return c.sign < k; });
    if (it == cells.end() || it->sign != s) throw InvariantError("point " + to_string(p) + " maps to no enumerated cell");
    return static_cast<std::size_t>(it - cells.begin());
}

ArrangementIndex enumerate_cells(const Scene& scene, std::size_t budget) {
    HyperplaneIndex idx(scene, budget);
    ArrangementIndex out;
    out.d = scene.d;
    out.hyperplanes = idx.planes();
    SignSearch search(out.hyperplanes, scene.d);
    search.run([&](const SignVector& s, int dim, const RVector& w) {
        out.cells.push_back({s, dim, w, idx.in_S(s), idx.membership(s)});
        return true;
    });
    std::sort(out.cells.begin(), out.cells.end(), [](const Cell& a, const Cell& b) { return a.sign < b.sign; });
    return out;
}

bool cell_in_S(const Cell& cell, const Scene& scene) {
    const bool by_point = scene.in_complement(cell.witness);
    if (by_point != cell.in_S)
        throw InvariantError("cell " + sign_string(cell.sign) + " has inconsistent complement membership");
    return by_point;
}

bool closure_adjacent(const Cell& c, const Cell& d) {
    if (c.sign.size() != d.sign.size()) throw InputError("cells from different arrangements");
    for (std::size_t i = 0; i < c.sign.size(); ++i)
        if (c.sign[i] != 0 && c.sign[i] != d.sign[i]) return false;
    return true;
}

std::string sign_string(const SignVector& s) {
    std::string out;
    for (auto x : s) out.push_back(x < 0 ? '-' : x == 0 ? '0' : '+');
    return out;
}

}  // namespace encap
