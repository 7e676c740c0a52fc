#include "encap/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace encap {

RVector zeros(std::size_t d) { return RVector(d, Rational(0)); }

RVector unit(std::size_t d, std::size_t i) {
    RVector v = zeros(d);
    v.at(i) = 1;
    return v;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() || b[i].is_zero()) continue;
        acc += a[i].raw() * b[i].raw();
    }
    return Rational(acc);
}

RVector add(const RVector& a, const RVector& b) {
    RVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
    return r;
}

RVector sub(const RVector& a, const RVector& b) {
    RVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
    return r;
}

RVector scale(const RVector& a, const Rational& s) {
    RVector r(a);
    for (auto& x : r) x *= s;
    return r;
}

RVector axpy(const RVector& a, const Rational& s, const RVector& b) {
    RVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b.at(i);
    return r;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string to_string(const RVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

RMatrix rref(RMatrix rows, std::vector<std::size_t>* pivots) {
    std::vector<std::size_t> piv;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const Rational inv = Rational(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    if (pivots) *pivots = std::move(piv);
    return rows;
}

std::size_t rank(const RMatrix& rows) { return rref(rows).size(); }

RMatrix nullspace(const RMatrix& rows, std::size_t cols) {
    std::vector<std::size_t> piv;
    const RMatrix red = rref(rows, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : piv) is_pivot[c] = true;
    RMatrix basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RVector v = zeros(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < red.size(); ++i) v[piv[i]] = -red[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<AffineSolution> solve_affine(const RMatrix& a, const RVector& b, std::size_t cols) {
    RMatrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        RVector row = a[i];
        row.push_back(b.at(i));
        aug.push_back(std::move(row));
    }
    std::vector<std::size_t> piv;
    const RMatrix red = rref(aug, &piv);
    AffineSolution sol{zeros(cols), {}};
    for (std::size_t i = 0; i < red.size(); ++i) {
        if (piv[i] == cols) return std::nullopt;  // 0 = nonzero
        sol.particular[piv[i]] = red[i][cols];
    }
    sol.kernel = nullspace(a, cols);
    return sol;
}

Flat::Flat(RVector anchor, RMatrix directions) : empty_(false), ambient_(anchor.size()) {
    std::vector<std::size_t> piv;
    basis_ = rref(std::move(directions), &piv);
    // Move the anchor to the flat point that vanishes on the pivot columns.
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rational c = anchor[piv[i]];
        if (!c.is_zero()) anchor = axpy(anchor, -c, basis_[i]);
    }
    anchor_ = std::move(anchor);
}

Flat Flat::whole(std::size_t d) {
    RMatrix id;
    for (std::size_t i = 0; i < d; ++i) id.push_back(unit(d, i));
    return Flat(zeros(d), std::move(id));
}

Flat Flat::point(RVector p) { return Flat(std::move(p), {}); }

bool Flat::contains(const RVector& p) const {
    if (empty_ || p.size() != ambient_) return false;
    RMatrix rows = basis_;
    rows.push_back(sub(p, anchor_));
    return rank(rows) == basis_.size();
}

bool Flat::contains(const Flat& other) const {
    if (other.empty_) return true;
    if (empty_ || other.ambient_ != ambient_) return false;
    if (!contains(other.anchor_)) return false;
    RMatrix rows = basis_;
    for (const auto& b : other.basis_) rows.push_back(b);
    return rank(rows) == basis_.size();
}

std::pair<RMatrix, RVector> Flat::equations() const {
    RMatrix normals = nullspace(basis_, ambient_);
    RVector offsets;
    for (const auto& n : normals) offsets.push_back(dot(n, anchor_));
    return {std::move(normals), std::move(offsets)};
}

std::vector<RVector> Flat::sample_points() const {
    std::vector<RVector> pts;
    if (empty_) return pts;
    pts.push_back(anchor_);
    for (const auto& b : basis_) pts.push_back(add(anchor_, b));
    return pts;
}

std::string Flat::describe() const {
    if (empty_) return "empty";
    std::ostringstream os;
    os << dim() << "-flat through " << to_string(anchor_);
    if (!basis_.empty()) {
        os << " spanned by";
        for (const auto& b : basis_) os << ' ' << to_string(b);
    }
    return os.str();
}

bool operator<(const Flat& a, const Flat& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
    return a.anchor_ < b.anchor_;
}

Flat affine_hull(std::span<const RVector> points) {
    if (points.empty()) return Flat();
    const RVector& base = points.front();
    RMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].size() != base.size())
            throw std::invalid_argument("affine_hull: mixed dimensions");
        dirs.push_back(sub(points[i], base));
    }
    return Flat(base, std::move(dirs));
}

}  // namespace encap
