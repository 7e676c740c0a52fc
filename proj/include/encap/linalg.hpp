#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "encap/rational.hpp"

namespace encap {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row-major, rows share one length

RVector zeros(std::size_t d);
RVector unit(std::size_t d, std::size_t i);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RVector add(const RVector& a, const RVector& b);
RVector sub(const RVector& a, const RVector& b);
RVector scale(const RVector& a, const Rational& s);
/// a + s * b
RVector axpy(const RVector& a, const Rational& s, const RVector& b);
bool is_zero(std::span<const Rational> v);
std::string to_string(const RVector& v);

/// Reduced row echelon form; drops zero rows. `pivots` receives the pivot
/// column of each returned row.
RMatrix rref(RMatrix rows, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RMatrix& rows);
/// Basis of {x : rows * x = 0} for vectors of length `cols`.
RMatrix nullspace(const RMatrix& rows, std::size_t cols);

/// Solution set of A x = b: particular solution plus nullspace basis, or
/// nullopt when inconsistent.
struct AffineSolution {
    RVector particular;
    RMatrix kernel;
};
std::optional<AffineSolution> solve_affine(const RMatrix& a, const RVector& b, std::size_t cols);

/// An affine subspace in canonical form: `basis` is the reduced row echelon
/// basis of the direction space and `anchor` is the unique flat point whose
/// coordinates at the basis pivot columns are zero. dim() == -1 marks the
/// empty flat.
class Flat {
public:
    Flat() = default;  // empty flat
    Flat(RVector anchor, RMatrix directions);

    static Flat whole(std::size_t d);
    static Flat point(RVector p);

    int dim() const { return empty_ ? -1 : static_cast<int>(basis_.size()); }
    bool empty() const { return empty_; }
    std::size_t ambient() const { return ambient_; }
    const RVector& anchor() const { return anchor_; }
    const RMatrix& basis() const { return basis_; }

    bool contains(const RVector& p) const;
    bool contains(const Flat& other) const;
    /// Normals n_i and offsets c_i with flat = {x : n_i . x = c_i}.
    std::pair<RMatrix, RVector> equations() const;
    /// Deterministic sample points spanning the flat (anchor + anchor+b_i).
    std::vector<RVector> sample_points() const;

    std::string describe() const;

    friend bool operator==(const Flat& a, const Flat& b) = default;
    friend bool operator<(const Flat& a, const Flat& b);

private:
    bool empty_ = true;
    std::size_t ambient_ = 0;
    RVector anchor_;
    RMatrix basis_;
};

/// Smallest flat containing all points; the empty flat for no points.
Flat affine_hull(std::span<const RVector> points);

}  // namespace encap
