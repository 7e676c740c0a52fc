#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "encap/geom.hpp"

namespace encap {

enum class SampleVerdict { AgreeTrue, False, Inconclusive };

struct SampleCheck {
    SampleVerdict verdict = SampleVerdict::Inconclusive;
    std::optional<RVector> certificate;  // a direction whose initial ray segment stays in S
    std::size_t directions_tested = 0;
};

/// Exact per-direction test: does some piece contain p + t u for all small t > 0?
bool direction_covered(const Scene& scene, const RVector& p, const RVector& u);

/// Tests the 2d axis directions, then `trials` random rational directions on
/// the unit-box boundary. Falsification is exact; agreement is sampled.
SampleCheck sample_check_encapsulated(const Scene& scene, const RVector& p, std::size_t trials, std::uint64_t seed);

/// Estimate of the strong-cover profile from exact membership probes on a
/// grid and at arrangement vertices and lines (d <= 2, resolution >= 16).
std::vector<std::size_t> grid_cover_check(const Scene& scene, std::size_t resolution);

struct AuditEdge {
    std::size_t a = 0, b = 0;  // body indices
    enum class Kind { Segment, Ray, Line } kind = Kind::Segment;
    RVector p0, u;             // edge = {p0 + t u : lo <= t <= hi}, missing bounds unbounded
    std::optional<Rational> lo, hi;
};

struct AuditReport {
    std::size_t v = 0, e = 0, f = 0, e_r = 0, e_l = 0, X = 0;
    std::size_t s_count = 0;
    long bound_value = 0;  // 5f - 11
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<RVector> vertices;
    std::vector<AuditEdge> edges;

    bool pass() const;
};

/// Exact engine against the sampling oracle (every S-cell witness) and,
/// for d <= 2, against grid_cover_check.
struct Concordance {
    std::size_t points = 0;           // S-cell witnesses examined
    std::size_t agree_encapsulated = 0;
    std::size_t certified = 0;        // not encapsulated, exact certificate found
    std::size_t non_isolated = 0;     // not encapsulated, no certificate sampled, local dimension > 0
    std::vector<std::string> contradictions;
    bool grid_checked = false;
    std::vector<std::size_t> grid_nu, exact_nu;

    bool ok() const { return contradictions.empty(); }
};

Concordance oracle_concordance(const Scene& scene, std::size_t trials, std::uint64_t seed, std::size_t resolution = 256,
                               std::size_t budget = 400);

/// Planar graph audit for pairwise disjoint full-dimensional bodies in R^2
/// with finite complement. Throws PreconditionError naming the failed
/// assumption.
AuditReport euler_audit(const Scene& scene, std::size_t budget = 400);

}  // namespace encap
