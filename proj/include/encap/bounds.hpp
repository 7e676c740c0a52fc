#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "encap/rational.hpp"

namespace encap {

Integer binomial(long n, long k);

/// floor(3d/2) + 1; d = 0 is rejected (the zero-dimensional convention is inconsistent).
Integer f_three(long d);
/// Recursive ceiling on the number of points encapsulated by n sets in R^d.
Integer f_upper(long d, long n);
/// 2 d^(n-2) n!
Integer f_closed(long d, long n);
/// Edges of the balanced complete 4-partite graph on n vertices.
Integer turan_t(long n);
/// (C(n-1, d), (n-1) C(n, floor(n/2))^(d-1))
std::pair<Integer, Integer> lm_bounds(long n, long d);
/// 5n - 11
Integer disjoint_planar_bound(long n);

struct BoundRow {
    long d = 0, n = 0;
    std::optional<Integer> f_three, f_upper, f_closed, lm_open, lm_general, turan4, disjoint_planar;
};

std::vector<BoundRow> bound_table(long d_lo, long d_hi, long n_lo, long n_hi);

}  // namespace encap
