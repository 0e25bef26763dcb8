#include "toric/braid.hpp"

#include <numeric>

#include "toric/error.hpp"

namespace toric {

void validate_torus_params(int p, int q) {
    if (p < 2) throw DomainError("torus knot parameters require p >= 2");
    if (p >= q) throw DomainError("torus knot parameters require p < q");
    if (std::gcd(p, q) != 1) throw DomainError("torus knot parameters must be coprime");
}

bool BraidPlan::feasible() const {
    return h >= 0 && v >= 0 && q - 2 * (h + v + p) + 4 >= 0 && h + 3 * v <= q - 3 * p + 4 &&
           -3 * h - v - p + q + 4 >= 0 && h >= v && n() >= 1;
}

std::optional<BraidPlan> solve_hv(int p, int q) {
    validate_torus_params(p, q);
    std::optional<BraidPlan> best;
    for (int h = 0; h <= q; ++h) {
        for (int v = 0; v <= h; ++v) {
            const BraidPlan plan{p, q, h, v};
            if (!plan.feasible()) continue;
            if (!best || h + v > best->h + best->v) best = plan;
        }
    }
    return best;
}

Mosaic one_braid(const BraidPlan& plan) {
    validate_torus_params(plan.p, plan.q);
    if (!plan.feasible()) throw DomainError("braid plan violates the feasibility system");
    const int p = plan.p, h = plan.h, v = plan.v, n = plan.n();
    Mosaic m(n);
    // 1-based (row, col) as in the construction; Mosaic is 0-based.
    auto put = [&](int row, int col, int kind) {
        if (row < 1 || row > n || col < 1 || col > n) throw DomainError("braid plan does not fit its mosaic");
        m.set(row - 1, col - 1, Tile{kind});
    };
    auto fill_row = [&](int row, int kind) {
        for (int c = 1; c <= n; ++c) put(row, c, kind);
    };
    // With T9 vertical-over, horizontal runs take T9 and vertical runs T10;
    // the other way round closes up into a different knot. The r filler rows
    // shift strands right, so the total column drift comes to p.
    int row = 1;
    for (; row <= p - 2; ++row) fill_row(row, 7);
    for (; row <= p - 2 + h; ++row) fill_row(row, 7);
    for (int i = 0; i < h; ++i)
        for (int j = 1; j <= p - 1; ++j) put(p - 1 + i, i + j, 9);
    for (; row <= 2 * p - 4 + h + v; ++row) fill_row(row, 8);
    for (int i = 0; i < v; ++i)
        for (int j = 1; j <= p - 1; ++j) put(p - 2 + h + i + j, h - i, 10);
    const int r = plan.r();
    for (int k = 0; k < std::abs(r); ++k, ++row) fill_row(row, r >= 0 ? 7 : 8);
    for (; row <= n; ++row) fill_row(row, 6);
    return m;
}

FullBraid full_braid(int n) {
    if (n < 3) throw DomainError("full-braid construction requires n >= 3");
    const int size = 2 * n;
    Mosaic m(size);
    auto put = [&](int row, int col, int kind) { m.set(row - 1, col - 1, Tile{kind}); };
    for (int row = size - 1; row <= size; ++row)
        for (int c = 1; c <= size; ++c) put(row, c, 6);
    for (int i = 1; i <= n; ++i)
        for (int c = 1; c <= size; ++c) put(i, c, (c % 2) == (i % 2) ? 7 : 10);
    const int braid_row = 2 * (n - 1);
    // Odd tiles are T8 here, so the chevrons above run on through the even
    // ones; the rightmost crossing is dropped to leave q' in total.
    for (int c = 1; c <= size; ++c) put(braid_row, c, c % 2 == 1 ? 8 : 9);
    put(braid_row, size, 8);
    for (int i = n + 1; i <= braid_row - 1; ++i)
        for (int c = 1; c <= size; ++c) put(i, c, (c % 2) == (i % 2) ? 9 : 8);
    return FullBraid{std::move(m), 2 * n * n - 2 * n - 1};
}

std::vector<std::pair<int, int>> braid_chain(const Mosaic& full) {
    // Serpentine over crossing tiles: left to right on even rows (0-based),
    // right to left on odd rows.
    std::vector<std::pair<int, int>> chain;
    const int n = full.size();
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const int c = (r % 2 == 0) ? k : n - 1 - k;
            if (full.at(r, c).is_crossing()) chain.emplace_back(r, c);
        }
    }
    return chain;
}

Mosaic remove_crossings(const Mosaic& full, int q_prime, int q) {
    if (q % 2 == 0) throw DomainError("target q must be odd");
    if (q < 3 || q > q_prime) throw DomainError("target q must satisfy 3 <= q <= q'");
    const auto chain = braid_chain(full);
    if (int(chain.size()) != q_prime) throw DomainError("mosaic does not carry q' crossing tiles");
    Mosaic out = full;
    for (int k = 0; k < q_prime - q; ++k) {
        const auto [r, c] = chain[std::size_t(k)];
        out.set(r, c, Tile{out.at(r, c).kind() == 9 ? 8 : 7});
    }
    return out;
}

Mosaic naive_mosaic(int p, int q) {
    validate_torus_params(p, q);
    Mosaic m(q, Tile{6});
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < q; ++c) m.set(r, c, Tile{7});
    return m;
}

std::vector<int> boundary_permutation(const Mosaic& m) {
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    const int n = m.size();
    for (int c = 0; c < n; ++c)
        if (!m.at(0, c).profile().top) throw DomainError("boundary permutation needs every top connection point");
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int start = 0; start < n; ++start) {
        int r = 0, c = start;
        Side entered = Side::top;
        for (int steps = 0;; ++steps) {
            if (steps > 4 * n * n) throw DomainError("strand does not reach the bottom edge");
            const Side out = m.at(r, c).profile().partner(entered);
            if (out == Side::bottom) {
                if (r == n - 1) break;
                ++r;
                entered = Side::top;
            } else if (out == Side::right) {
                c = (c + 1) % n;
                entered = Side::left;
            } else if (out == Side::left) {
                c = (c + n - 1) % n;
                entered = Side::right;
            } else {
                throw DomainError("strand turns back to the top edge");
            }
        }
        perm[std::size_t(start)] = c;
    }
    return perm;
}

}  // namespace toric
