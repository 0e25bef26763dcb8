#include "toric/tile.hpp"

namespace toric {

namespace {

constexpr ConnectionProfile arc(Side a, Side b) {
    ConnectionProfile p;
    for (Side s : {a, b}) {
        switch (s) {
            case Side::left: p.left = true; break;
            case Side::top: p.top = true; break;
            case Side::right: p.right = true; break;
            case Side::bottom: p.bottom = true; break;
        }
    }
    p.strands[0] = {a, b};
    p.strand_count = 1;
    return p;
}

constexpr ConnectionProfile four(std::array<Side, 2> s0, std::array<Side, 2> s1, OverStrand over) {
    ConnectionProfile p;
    p.left = p.top = p.right = p.bottom = true;
    p.strands = {s0, s1};
    p.strand_count = 2;
    p.over = over;
    return p;
}

constexpr std::array<ConnectionProfile, tile_kinds> profiles = {
    ConnectionProfile{},
    arc(Side::left, Side::bottom),
    arc(Side::bottom, Side::right),
    arc(Side::top, Side::right),
    arc(Side::top, Side::left),
    arc(Side::left, Side::right),
    arc(Side::top, Side::bottom),
    four({Side::top, Side::right}, {Side::left, Side::bottom}, OverStrand::none),
    four({Side::top, Side::left}, {Side::bottom, Side::right}, OverStrand::none),
    four({Side::top, Side::bottom}, {Side::left, Side::right}, OverStrand::vertical),
    four({Side::top, Side::bottom}, {Side::left, Side::right}, OverStrand::horizontal),
};

}  // namespace

const ConnectionProfile& Tile::profile() const { return profiles[kind_]; }

const std::array<ConnectionProfile, tile_kinds>& tile_profiles() { return profiles; }

char tile_digit(Tile t) { return t.kind() < 10 ? char('0' + t.kind()) : 'a'; }

}  // namespace toric
