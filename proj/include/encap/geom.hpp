#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "encap/lp.hpp"

namespace encap {

/// A subset of the real line given by its endpoints; nullopt endpoints are
/// infinite. `empty` overrides everything else.
struct Interval {
    bool empty = true;
    std::optional<Rational> lo, hi;
    bool lo_closed = false, hi_closed = false;

    static Interval everything();
    bool contains(const Rational& t) const;
    Interval intersect(const Interval& o) const;
    bool bounded() const { return lo && hi; }
};

/// Smallest point of [a, b] not covered by the union of `parts`, or nullopt
/// when the union covers [a, b] entirely.
std::optional<Rational> first_uncovered(const std::vector<Interval>& parts, const Rational& a, const Rational& b);

/// Relatively open or closed convex polyhedron {x : c_i holds for all i}.
/// Construction validates nonemptiness and caches a witness and dimension.
class Piece {
public:
    Piece(std::vector<LinConstraint> constraints, std::size_t d);

    std::size_t ambient() const { return d_; }
    int dim() const { return dim_; }
    const RVector& witness() const { return witness_; }
    const std::vector<LinConstraint>& constraints() const { return constraints_; }

    bool contains(const RVector& p) const;
    bool closure_contains(const RVector& p) const;
    /// Constraints of the closure (strict rows relaxed).
    std::vector<LinConstraint> closure_constraints() const;
    /// {t : p + t u in piece}.
    Interval restrict_to_line(const RVector& p, const RVector& u) const;
    /// Random point of the piece: witness moved along random directions
    /// within the piece.
    RVector sample(std::mt19937_64& rng) const;

    friend bool operator==(const Piece& a, const Piece& b) { return a.constraints_ == b.constraints_; }

private:
    std::vector<LinConstraint> constraints_;
    std::size_t d_;
    RVector witness_;
    RMatrix hull_;  // direction space of the affine hull
    int dim_ = -1;
};

struct ConvexBody {
    std::string name;
    std::vector<Piece> pieces;

    bool contains(const RVector& p) const;
    bool closure_contains(const RVector& p) const;
};

struct Scene {
    std::size_t d = 0;
    std::vector<ConvexBody> bodies;

    /// Throws InputError on dimension mismatch, duplicate names or d == 0.
    void validate() const;
    /// Index of the first body containing p.
    std::optional<std::size_t> body_containing(const RVector& p) const;
    bool in_complement(const RVector& p) const { return !body_containing(p); }
    std::size_t piece_count() const;
};

/// Semi-open polyhedral cone of directions; the zero vector is never a member.
struct DirectionCone {
    bool empty = false;
    std::vector<LinConstraint> constraints;  // homogeneous; none means all directions

    bool contains(const RVector& v) const;
};

bool piece_contains(const Piece& piece, const RVector& p);
bool body_touches(const ConvexBody& body, const RVector& p);
DirectionCone entry_cone(const Piece& piece, const RVector& p);

struct DisjointnessResult {
    bool disjoint = true;
    std::size_t first = 0, second = 0;  // violating body indices
    RVector witness;
};
DisjointnessResult bodies_pairwise_disjoint(const Scene& scene);

struct ConvexityResult {
    bool pass = true;
    RVector a, b, counterexample;  // segment endpoints in the body and the point between them outside it
};
/// Exact segment test between piece witnesses and `budget` random point pairs.
ConvexityResult verify_convex_union(const ConvexBody& body, std::size_t budget, std::uint64_t seed);

}  // namespace encap
