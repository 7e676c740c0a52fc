#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "encap/geom.hpp"

namespace encap {

/// A generated scene with the outcome it is built to have.
struct ConstructionReport {
    std::string name;
    std::string description;
    Scene scene;
    std::optional<std::size_t> expected_encapsulated;
    std::map<int, std::size_t> expected_nu;  // k -> number of ordinary k-flats; empty when unspecified
    bool expected_disjoint = false;
};

inline constexpr std::size_t kMaxThreeSetsDim = 5;

ConstructionReport gen_interval_chain(std::size_t n);
ConstructionReport gen_grid(std::size_t d, std::size_t n);
/// 1 <= d <= kMaxThreeSetsDim; larger d throws ResourceError.
ConstructionReport gen_three_sets(std::size_t d);
/// profile[k] in {0,1} for k = 0..d, d >= 1.
ConstructionReport gen_two_sets_profile(const std::vector<int>& profile);
ConstructionReport gen_turan_planar(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t n4);
ConstructionReport gen_disjoint_planar(std::size_t n);
ConstructionReport gen_neighborly_tiling(std::size_t d, std::size_t n);
ConstructionReport gen_carved_tiling(std::size_t d, std::size_t n);

/// Facets of the cyclic polytope with n vertices in R^dim, as sorted
/// 0-based vertex index sets (Gale evenness).
std::vector<std::vector<std::size_t>> cyclic_polytope_facets(std::size_t n, std::size_t dim);

}  // namespace encap
