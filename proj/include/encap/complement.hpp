#pragma once

#include <optional>
#include <vector>

#include "encap/arrangement.hpp"

namespace encap {

/// Bodies touched by a complement point (0-based body indices).
struct TouchSet {
    RVector point;
    std::vector<std::size_t> indices;
};

/// One cell of the central arrangement of the hyperplanes through a point,
/// i.e. one class of directions leaving it.
struct DirectionCell {
    SignVector sign;  // over LocalStructure::active
    int dim = 0;
    RVector witness;  // a direction in the cell (zero only for the trivial cell {0})
    bool in_S = false;
    RMatrix span;     // basis of the linear hull of the cell
};

struct LocalStructure {
    RVector point;
    std::vector<std::size_t> active;  // scene hyperplanes through the point
    std::vector<DirectionCell> cells;
    int local_dim = -1;
    std::optional<Flat> ordinary_flat;
};

struct EncapsulationResult {
    bool encapsulated = false;
    std::optional<std::size_t> inside_body;         // set when the point is in a body
    std::optional<RVector> uncovered_direction;     // set when some direction stays in S
};

/// S-cells in the closures of the pieces, plus whether S has interior points.
/// Every S-cell outside all piece closures is interior to S.
struct ComplementSurvey {
    std::vector<Cell> cells;  // sorted by sign vector
    bool has_interior = false;
    std::optional<RVector> interior_point;  // an interior point of S when has_interior
};

struct StrongCover {
    std::vector<Flat> flats;      // sorted by dimension, then canonical form
    std::vector<RVector> anchors; // per flat, an ordinary point whose flat it is
    std::vector<std::size_t> nu;  // nu[k] = number of k-flats, k = 0..d
};

inline constexpr std::size_t kDefaultAnalysisBudget = 400;

class ComplementAnalyzer {
public:
    explicit ComplementAnalyzer(const Scene& scene, std::size_t budget = HyperplaneIndex::kUnlimited);

    const Scene& scene() const { return scene_; }
    const HyperplaneIndex& index() const { return index_; }

    /// Throws PreconditionError when p lies in a body.
    LocalStructure local(const RVector& p) const;
    ComplementSurvey survey() const;
    /// Random point of the cell with the given sign vector and witness.
    RVector sample_cell(const SignVector& sign, const RVector& witness, std::mt19937_64& rng) const;

private:
    const Scene& scene_;
    HyperplaneIndex index_;
};

TouchSet touch_set(const Scene& scene, const RVector& p);
EncapsulationResult is_encapsulated(const Scene& scene, const RVector& p);
std::vector<RVector> enumerate_encapsulated(const Scene& scene, std::size_t budget = kDefaultAnalysisBudget);
int local_dimension(const Scene& scene, const RVector& p);
std::optional<Flat> ordinary_flat_at(const Scene& scene, const RVector& p);
/// Throws InvariantError if the collected ordinary flats fail the cover or
/// minimality property, or if ordinariness varies inside a cell.
StrongCover strong_cover(const Scene& scene, std::size_t budget = kDefaultAnalysisBudget, std::uint64_t seed = 1);

}  // namespace encap
