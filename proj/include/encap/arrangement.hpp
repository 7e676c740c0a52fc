#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "encap/geom.hpp"

namespace encap {

/// normal . x = offset with an integral primitive normal whose first nonzero
/// coordinate is positive.
struct Hyperplane {
    RVector normal;
    Rational offset;

    /// sign(normal . p - offset)
    int side(const RVector& p) const { return (dot(normal, p) - offset).sign(); }
    friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// Canonical hyperplane of {normal . x = offset}; `orientation` receives +1
/// or -1, the sign of the factor mapping the input normal to the canonical one.
Hyperplane canonical_hyperplane(const RVector& normal, const Rational& offset, int* orientation = nullptr);

using SignVector = std::vector<std::int8_t>;

inline constexpr std::uint8_t kNeg = 1, kZero = 2, kPos = 4, kAnySign = 7;
inline std::uint8_t sign_bit(int s) { return s < 0 ? kNeg : s == 0 ? kZero : kPos; }

/// A piece constraint expressed against the hyperplane list.
struct CompiledRow {
    std::size_t plane;
    int orientation;  // constraint normal = orientation * positive multiple of plane normal
    Relation rel;

    /// Signs of the plane for which the constraint holds.
    std::uint8_t mask() const;
    std::uint8_t closure_mask() const;
};

struct CompiledPiece {
    std::size_t body;
    const Piece* piece;
    std::vector<CompiledRow> rows;

    bool holds(const SignVector& s) const;
    bool closure_holds(const SignVector& s) const;
};

/// Distinct hyperplanes of a scene plus every piece rewritten against them.
class HyperplaneIndex {
public:
    static constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

    /// Throws ResourceError when the scene has more than `budget` distinct hyperplanes.
    explicit HyperplaneIndex(const Scene& scene, std::size_t budget = kUnlimited);

    std::size_t d() const { return d_; }
    std::size_t size() const { return planes_.size(); }
    const std::vector<Hyperplane>& planes() const { return planes_; }
    const std::vector<CompiledPiece>& pieces() const { return pieces_; }
    std::size_t body_count() const { return bodies_; }

    SignVector sign_of(const RVector& p) const;
    bool in_body(const SignVector& s, std::size_t body) const;
    bool in_S(const SignVector& s) const;
    std::vector<bool> membership(const SignVector& s) const;

private:
    std::size_t d_ = 0, bodies_ = 0;
    std::vector<Hyperplane> planes_;
    std::vector<CompiledPiece> pieces_;
};

/// Prefix pruning rule: a partial sign vector is discarded once every term's
/// plane has been assigned a sign inside the term's mask.
struct PruneGroup {
    std::vector<std::pair<std::size_t, std::uint8_t>> terms;
};

/// Depth-first enumeration of the nonempty sign vectors of a hyperplane
/// arrangement, with per-plane sign restrictions and prefix pruning.
class SignSearch {
public:
    /// Return false to stop the search.
    using Visitor = std::function<bool(const SignVector& sign, int dim, const RVector& witness)>;

    SignSearch(const std::vector<Hyperplane>& planes, std::size_t d);

    void set_order(std::vector<std::size_t> order);
    void restrict_sign(std::size_t plane, std::uint8_t mask) { allowed_.at(plane) &= mask; }
    void add_prune_group(PruneGroup g);

    /// Returns false when the visitor stopped the search.
    bool run(const Visitor& visit);

private:
    struct Line {
        RVector u;
        std::optional<Rational> lo, hi;  // open interval of t around the witness (t = 0)
    };
    bool descend(std::size_t depth, const RVector& w, int dim, const std::optional<Line>& line);
    bool assign(std::size_t depth, int s, const RVector& w, int dim, const std::optional<Line>& line);
    LinConstraint prefix_row(std::size_t plane, int s) const;
    Line line_through(const RVector& w, const RVector& u) const;
    RMatrix zero_space() const;

    const std::vector<Hyperplane>& planes_;
    std::size_t d_;
    std::vector<std::size_t> order_;
    std::vector<std::uint8_t> allowed_;
    std::vector<PruneGroup> groups_;
    std::vector<std::vector<std::size_t>> groups_of_plane_;
    std::vector<std::size_t> group_hits_;
    SignVector sign_;
    std::vector<std::size_t> assigned_;  // planes assigned so far, in order
    RMatrix zero_rows_;
    const Visitor* visit_ = nullptr;
};

struct Cell {
    SignVector sign;
    int dim = 0;
    RVector witness;
    bool in_S = false;
    std::vector<bool> body_membership;
};

struct ArrangementIndex {
    std::size_t d = 0;
    std::vector<Hyperplane> hyperplanes;
    std::vector<Cell> cells;  // sorted by sign vector

    /// Index of the cell containing p.
    std::size_t locate(const RVector& p) const;
};

inline constexpr std::size_t kDefaultHyperplaneBudget = 25;

ArrangementIndex enumerate_cells(const Scene& scene, std::size_t budget = kDefaultHyperplaneBudget);
bool cell_in_S(const Cell& cell, const Scene& scene);
/// C is contained in the closure of D.
bool closure_adjacent(const Cell& c, const Cell& d);

std::string sign_string(const SignVector& s);

}  // namespace encap
