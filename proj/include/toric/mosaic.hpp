#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "toric/tile.hpp"

namespace toric {

/// Square n x n grid of tiles, row-major, row 0 at the top.
class Mosaic {
public:
    Mosaic() = default;
    explicit Mosaic(int n, Tile fill = Tile{0});
    Mosaic(int n, std::vector<Tile> cells);

    int size() const { return n_; }
    Tile at(int row, int col) const { return cells_[index(row, col)]; }
    void set(int row, int col, Tile t) { cells_[index(row, col)] = t; }
    const std::vector<Tile>& cells() const { return cells_; }

    /// Tile at (row, col) with both coordinates reduced modulo n.
    Tile wrapped(int row, int col) const;

    int count_kind(int kind) const;
    int crossing_tiles() const { return count_kind(9) + count_kind(10); }

    friend bool operator==(const Mosaic&, const Mosaic&) = default;

private:
    std::size_t index(int row, int col) const { return std::size_t(row) * std::size_t(n_) + std::size_t(col); }

    int n_ = 0;
    std::vector<Tile> cells_;
};

Mosaic decode(std::string_view code);
std::string encode(const Mosaic& m);

enum class Topology { toric, classical };

bool is_suitably_connected(const Mosaic& m, Topology topology = Topology::toric);

/// Connection points on the left/right edges (a) and on the top/bottom edges (b).
struct BoundaryCounts {
    int a = 0;
    int b = 0;
    friend bool operator==(const BoundaryCounts&, const BoundaryCounts&) = default;
};

BoundaryCounts boundary_counts(const Mosaic& m);
int hidden_crossing_count(const Mosaic& m);

/// Cyclic shift: the result has old cell (r, c) at ((r + dr) mod n, (c + dc) mod n).
Mosaic translate(const Mosaic& m, int dr, int dc);

/// Lexicographically least code over all n^2 torus translations.
std::string canonical_code(const Mosaic& m);

/// Reads newline-delimited codes, skipping blank lines.
std::vector<Mosaic> read_mosaic_list(std::string_view text);

}  // namespace toric
