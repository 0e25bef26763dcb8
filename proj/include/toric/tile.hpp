#pragma once

#include <array>
#include <cstdint>

namespace toric {

enum class Side : std::uint8_t { left = 0, top = 1, right = 2, bottom = 3 };

constexpr Side opposite(Side s) { return static_cast<Side>((static_cast<int>(s) + 2) % 4); }

enum class OverStrand : std::uint8_t { none, vertical, horizontal };

/// Edge-midpoint connections of one tile kind and how its strands pair them up.
struct ConnectionProfile {
    bool left = false;
    bool top = false;
    bool right = false;
    bool bottom = false;
    // strands[k] joins two sides; only the first strand_count entries are meaningful.
    std::array<std::array<Side, 2>, 2> strands{};
    int strand_count = 0;
    OverStrand over = OverStrand::none;

    constexpr bool has(Side s) const {
        switch (s) {
            case Side::left: return left;
            case Side::top: return top;
            case Side::right: return right;
            case Side::bottom: return bottom;
        }
        return false;
    }

    /// Side joined to `s` by a strand of this tile. Crossings pass straight through.
    constexpr Side partner(Side s) const {
        for (int k = 0; k < strand_count; ++k) {
            if (strands[k][0] == s) return strands[k][1];
            if (strands[k][1] == s) return strands[k][0];
        }
        return s;
    }

    constexpr int connection_count() const { return int(left) + int(top) + int(right) + int(bottom); }
};

inline constexpr int tile_kinds = 11;

/// One of the eleven mosaic tiles T0..T10.
class Tile {
public:
    constexpr Tile() = default;
    constexpr explicit Tile(int kind) : kind_(static_cast<std::uint8_t>(kind)) {}

    constexpr int kind() const { return kind_; }
    constexpr bool is_crossing() const { return kind_ == 9 || kind_ == 10; }
    const ConnectionProfile& profile() const;

    friend constexpr bool operator==(Tile, Tile) = default;
    friend constexpr auto operator<=>(Tile, Tile) = default;

private:
    std::uint8_t kind_ = 0;
};

/// Table of all eleven profiles indexed by kind.
const std::array<ConnectionProfile, tile_kinds>& tile_profiles();

/// Base-11 digit for a tile ('0'..'9', 'a').
char tile_digit(Tile t);

}  // namespace toric
