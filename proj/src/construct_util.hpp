#pragma once

#include <string>
#include <vector>

#include "encap/errors.hpp"
#include "encap/geom.hpp"
#include "encap/lp.hpp"

namespace encap::detail {

using Constraints = std::vector<LinConstraint>;

/// x -> g . x + f
struct Affine {
    RVector g;
    Rational f;

    Rational at(const RVector& x) const { return dot(g, x) + f; }
};

/// Appends {a(x) s 0} for s = +1 (>), -1 (<) or 0 (=). Returns false when a
/// is constant and the relation fails; constant true relations are dropped.
inline bool push_sign(Constraints& cs, const Affine& a, int s) {
    if (is_zero(a.g)) {
        const int v = a.f.sign();
        return s == 0 ? v == 0 : v == s;
    }
    if (s > 0) cs.push_back(gt(a.g, -a.f));
    else if (s < 0) cs.push_back(lt(a.g, -a.f));
    else cs.push_back(eq(a.g, -a.f));
    return true;
}

/// Adds the piece when it is nonempty.
inline bool try_add_piece(ConvexBody& body, Constraints cs, std::size_t d) {
    if (cs.empty()) throw InvariantError("unbounded piece without constraints");
    try {
        body.pieces.emplace_back(std::move(cs), d);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

inline RVector pad(const RVector& v, std::size_t total, std::size_t at = 0) {
    RVector r = zeros(total);
    for (std::size_t i = 0; i < v.size(); ++i) r[at + i] = v[i];
    return r;
}

inline RVector ivec(std::initializer_list<long> xs) {
    RVector r;
    for (long x : xs) r.emplace_back(x);
    return r;
}

inline std::string body_name(std::size_t i) { return "K" + std::to_string(i + 1); }

}  // namespace encap::detail
