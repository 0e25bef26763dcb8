#pragma once

#include <optional>
#include <vector>

#include "toric/mosaic.hpp"

namespace toric {

/// Throws DomainError unless gcd(p, q) = 1 and 2 <= p < q.
void validate_torus_params(int p, int q);

/// Parameters of a one-braid construction for the (p, q)-torus knot.
struct BraidPlan {
    int p = 0;
    int q = 0;
    int h = 0;  // rows carrying a horizontal run of crossings
    int v = 0;  // columns carrying a vertical run of crossings

    int n() const { return q - (h + v); }
    int r() const { return p + v - h; }
    int rows_left() const { return q - 2 * (h + v + p) + 4; }  // R
    bool feasible() const;

    friend bool operator==(const BraidPlan&, const BraidPlan&) = default;
};

/// Maximises h + v subject to the one-braid feasibility system; ties go to
/// the lexicographically smallest (h, v). Empty when the system has no solution.
std::optional<BraidPlan> solve_hv(int p, int q);

Mosaic one_braid(const BraidPlan& plan);

struct FullBraid {
    Mosaic mosaic;
    int q_prime = 0;
};

/// 2n x 2n mosaic of the (2, 2n^2 - 2n - 1)-torus knot; n >= 3.
FullBraid full_braid(int n);

/// Order in which remove_crossings consumes the crossing tiles of a
/// full-braid mosaic, as (row, col) pairs.
std::vector<std::pair<int, int>> braid_chain(const Mosaic& full);

/// Replaces q' - q crossing tiles of a full-braid mosaic by their
/// non-crossing counterparts (T9 -> T8, T10 -> T7).
Mosaic remove_crossings(const Mosaic& full, int q_prime, int q);

/// q x q mosaic: p rows of T7 over q - p rows of T6.
Mosaic naive_mosaic(int p, int q);

/// For each top connection point t_i (0-based), the index of the top point
/// reached by following the strand down to the bottom edge.
std::vector<int> boundary_permutation(const Mosaic& m);

}  // namespace toric
