#pragma once

#include <span>
#include <string>
#include <vector>

#include "encap/linalg.hpp"

namespace encap {

enum class Relation { Lt, Le, Eq };

std::string_view relation_token(Relation r);  // "lt" / "le" / "eq"
bool relation_holds(Relation r, const Rational& lhs, const Rational& rhs);

/// normal . x <relation> offset
struct LinConstraint {
    RVector normal;
    Rational offset;
    Relation rel = Relation::Le;

    bool satisfied_by(const RVector& x) const { return relation_holds(rel, dot(normal, x), offset); }
    /// normal . x - offset
    Rational residual(const RVector& x) const { return dot(normal, x) - offset; }

    friend bool operator==(const LinConstraint&, const LinConstraint&) = default;
};

LinConstraint lt(RVector normal, Rational offset);
LinConstraint le(RVector normal, Rational offset);
LinConstraint eq(RVector normal, Rational offset);
/// normal . x > offset, stored as (-normal) . x < -offset
LinConstraint gt(RVector normal, Rational offset);
/// normal . x >= offset, stored as (-normal) . x <= -offset
LinConstraint ge(RVector normal, Rational offset);

struct LpResult {
    bool feasible = false;
    RVector witness;  // valid only when feasible
    explicit operator bool() const { return feasible; }
};

/// Decides whether the constraint system has a solution in R^d and returns an
/// exact rational witness satisfying every constraint, strict ones included.
/// Throws InputError on a zero normal or a dimension mismatch.
LpResult lp_feasible(std::span<const LinConstraint> constraints, std::size_t d);

/// Number of lp_feasible calls made by this thread (diagnostics only).
std::size_t lp_call_count();

}  // namespace encap
