#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// One crossing in planar-diagram form.
///
/// `arcs` lists the four incident edge labels counterclockwise, starting with
/// the incoming under-strand, so arcs[0] -> arcs[2] is the under-strand.
/// `sign` is +1 when the over-strand enters at slot 3 (a positive crossing)
/// and -1 when it enters at slot 1.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 1;

    bool incoming(int slot) const {
        switch (slot & 3) {
            case 0: return true;
            case 2: return false;
            case 1: return sign < 0;
            default: return sign > 0;
        }
    }

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Port {
    int crossing = -1;
    int slot = -1;
    friend bool operator==(const Port&, const Port&) = default;
};

/// Oriented link diagram on the sphere: 4-valent crossings joined by edges,
/// plus a count of crossingless unknotted components.
///
/// Edge labels are 0..2c-1; each appears in exactly one incoming and one
/// outgoing slot. Following a strand from an incoming slot s continues out of
/// slot s+2 of the same crossing.
class LinkDiagram {
public:
    LinkDiagram() = default;
    LinkDiagram(std::vector<Crossing> crossings, int free_loops);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    int crossing_count() const { return int(crossings_.size()); }
    int edge_count() const { return 2 * crossing_count(); }
    int free_loops() const { return free_loops_; }

    Port head(int edge) const { return heads_[std::size_t(edge)]; }
    Port tail(int edge) const { return tails_[std::size_t(edge)]; }
    /// Edge following `edge` along the orientation.
    int next_edge(int edge) const;

    /// Component index per edge; components with crossings are numbered
    /// 0..k-1 in order of their lowest edge label.
    std::vector<int> edge_components() const;
    int component_count() const;

    /// Relabels edges along the orientation: components in order of their
    /// lowest current label, each starting from that label.
    LinkDiagram normalized() const;

    friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;

private:
    void index();

    std::vector<Crossing> crossings_;
    int free_loops_ = 0;
    std::vector<Port> heads_;
    std::vector<Port> tails_;
};

int component_count(const LinkDiagram& d);

/// Over/under swapped at every crossing.
LinkDiagram mirror(const LinkDiagram& d);
/// Over/under swapped at one crossing; crossing indices are preserved.
LinkDiagram switch_crossing(const LinkDiagram& d, int crossing);
/// Orientation-respecting resolution of one crossing.
LinkDiagram smooth_crossing(const LinkDiagram& d, int crossing);

/// Reidemeister I and II reductions to a fixed point.
LinkDiagram simplify(const LinkDiagram& d);

/// Lowest crossing carrying a kink, or -1.
int find_kink(const LinkDiagram& d);
/// A removable bigon (both crossings over the same strand), or {-1, -1}.
std::array<int, 2> find_removable_bigon(const LinkDiagram& d);

/// Connected pieces of the crossing graph (free loops excluded).
std::vector<LinkDiagram> split_pieces(const LinkDiagram& d);

/// Relabelling-invariant code for a connected diagram; equal codes imply
/// isomorphic oriented diagrams.
std::vector<int> canonical_key(const LinkDiagram& d);

/// "PD[X(a,b,c,d),...]" with 1-based labels along the orientation.
/// Crossingless diagrams give "unknot" or "unlink k"; free loops next to
/// crossings are appended as " + unknot" / " + unlink k".
std::string pd_code(const LinkDiagram& d);
LinkDiagram parse_pd(std::string_view text);

/// Closure of a braid word on `strands` strands; generator +i (-i) is the
/// positive (negative) crossing of strands i and i+1, 1-based.
LinkDiagram braid_closure(int strands, std::span<const int> word);

/// Closure of (s1 s2 ... s_{p-1})^q.
LinkDiagram torus_knot_diagram(int p, int q);

}  // namespace toric
