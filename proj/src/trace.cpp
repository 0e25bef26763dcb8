#include "toric/trace.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

// Geometric port directions, counterclockwise.
enum Dir : int { east = 0, north = 1, west = 2, south = 3 };

int dir_of(Side s) {
    switch (s) {
        case Side::right: return east;
        case Side::top: return north;
        case Side::left: return west;
        case Side::bottom: return south;
    }
    return east;
}

Side side_of(int dir) {
    switch (dir) {
        case east: return Side::right;
        case north: return Side::top;
        case west: return Side::left;
        default: return Side::bottom;
    }
}

struct Arrival {
    int crossing = -1;
    int port = -1;
};

class Tracer {
public:
    explicit Tracer(const Mosaic& m) : m_(m), n_(m.size()) {
        visible_id_.assign(std::size_t(n_ * n_), -1);
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c)
                if (m.at(r, c).is_crossing()) {
                    visible_id_[cell(r, c)] = int(vertical_over_.size());
                    visible_pos_.push_back(r * n_ + c);
                    vertical_over_.push_back(m.at(r, c).profile().over == OverStrand::vertical);
                }
        visible_ = int(vertical_over_.size());
        row_slot_.assign(std::size_t(n_), -1);
        col_slot_.assign(std::size_t(n_), -1);
        for (int i = 0; i < n_; ++i) {
            if (m.at(i, 0).profile().left) {
                row_slot_[std::size_t(i)] = int(rows_.size());
                rows_.push_back(i);
            }
            if (m.at(0, i).profile().top) {
                col_slot_[std::size_t(i)] = int(cols_.size());
                cols_.push_back(i);
            }
        }
        // Hidden crossings: the row closure arc passes over the column arc.
        vertical_over_.resize(std::size_t(visible_) + rows_.size() * cols_.size(), false);
        strand_seen_.assign(std::size_t(n_ * n_) * 2, 0);
    }

    LinkDiagram run() {
        const int total = int(vertical_over_.size());
        std::vector<std::array<Arrival, 4>> link(static_cast<std::size_t>(total));
        for (auto& l : link) l.fill(Arrival{});
        for (int x = 0; x < total; ++x) {
            for (int d = 0; d < 4; ++d) {
                if (link[std::size_t(x)][std::size_t(d)].crossing >= 0) continue;
                const Arrival a = leave_port(x, d);
                link[std::size_t(x)][std::size_t(d)] = a;
                link[std::size_t(a.crossing)][std::size_t(a.port)] = Arrival{x, d};
            }
        }
        const int loops = count_free_loops();

        // Orient components and number edges in traversal order.
        std::vector<std::array<int, 4>> edge(static_cast<std::size_t>(total));
        std::vector<std::array<char, 4>> incoming(static_cast<std::size_t>(total));
        for (auto& e : edge) e.fill(-1);
        int label = 0;
        for (int x = 0; x < total; ++x) {
            for (int d = 0; d < 4; ++d) {
                if (edge[std::size_t(x)][std::size_t(d)] >= 0) continue;
                int cx = x, cd = d;
                while (edge[std::size_t(cx)][std::size_t(cd)] < 0) {
                    const Arrival a = link[std::size_t(cx)][std::size_t(cd)];
                    edge[std::size_t(cx)][std::size_t(cd)] = label;
                    incoming[std::size_t(cx)][std::size_t(cd)] = 0;
                    edge[std::size_t(a.crossing)][std::size_t(a.port)] = label;
                    incoming[std::size_t(a.crossing)][std::size_t(a.port)] = 1;
                    ++label;
                    cx = a.crossing;
                    cd = (a.port + 2) & 3;
                }
            }
        }

        std::vector<Crossing> crossings;
        crossings.reserve(std::size_t(total));
        for (int x = 0; x < total; ++x) {
            const bool vertical_over = vertical_over_[std::size_t(x)];
            // Under-strand runs east-west when the vertical strand is over.
            const int a = vertical_over ? east : north;
            const int b = vertical_over ? west : south;
            const int under_in = incoming[std::size_t(x)][std::size_t(a)] ? a : b;
            Crossing cr;
            for (int k = 0; k < 4; ++k) cr.arcs[std::size_t(k)] = edge[std::size_t(x)][std::size_t((under_in + k) & 3)];
            cr.sign = incoming[std::size_t(x)][std::size_t((under_in + 3) & 3)] ? 1 : -1;
            crossings.push_back(cr);
        }
        return LinkDiagram(std::move(crossings), loops);
    }

private:
    std::size_t cell(int r, int c) const { return std::size_t(r) * std::size_t(n_) + std::size_t(c); }

    int hidden(int row_slot, int col_slot) const {
        return visible_ + row_slot * int(cols_.size()) + col_slot;
    }

    int strand_index(int r, int c, Side s) const {
        const auto& p = m_.at(r, c).profile();
        for (int k = 0; k < p.strand_count; ++k)
            if (p.strands[std::size_t(k)][0] == s || p.strands[std::size_t(k)][1] == s) return k;
        throw DomainError("mosaic is not suitably connected");
    }

    // Moving out of tile (r, c) through side s; returns the next crossing port reached.
    Arrival leave_tile(int r, int c, Side s) {
        for (;;) {
            int nr = r, nc = c;
            Side entered;
            switch (s) {
                case Side::right:
                    if (c + 1 < n_) {
                        nc = c + 1;
                    } else {
                        if (!cols_.empty()) return {hidden(row_slot_[std::size_t(r)], int(cols_.size()) - 1), east};
                        nc = 0;
                    }
                    entered = Side::left;
                    break;
                case Side::left:
                    if (c > 0) {
                        nc = c - 1;
                    } else {
                        if (!cols_.empty()) return {hidden(row_slot_[std::size_t(r)], 0), west};
                        nc = n_ - 1;
                    }
                    entered = Side::right;
                    break;
                case Side::bottom:
                    if (r + 1 < n_) {
                        nr = r + 1;
                    } else {
                        if (!rows_.empty()) return {hidden(int(rows_.size()) - 1, col_slot_[std::size_t(c)]), north};
                        nr = 0;
                    }
                    entered = Side::top;
                    break;
                default:
                    if (r > 0) {
                        nr = r - 1;
                    } else {
                        if (!rows_.empty()) return {hidden(0, col_slot_[std::size_t(c)]), south};
                        nr = n_ - 1;
                    }
                    entered = Side::bottom;
                    break;
            }
            const auto next = enter_tile(nr, nc, entered);
            if (next.crossing != -1) return next;
            r = nr;
            c = nc;
            s = m_.at(r, c).profile().partner(entered);
        }
    }

    // Returns the arrival if (r, c) is a crossing tile; otherwise marks the strand used.
    Arrival enter_tile(int r, int c, Side s) {
        if (const int id = visible_id_[cell(r, c)]; id >= 0) return {id, dir_of(s)};
        if (!m_.at(r, c).profile().has(s)) throw DomainError("mosaic is not suitably connected");
        auto& seen = strand_seen_[cell(r, c) * 2 + std::size_t(strand_index(r, c, s))];
        if (seen) return {closed, 0};  // only reachable while walking a crossingless loop
        seen = 1;
        return {};
    }

    Arrival leave_port(int x, int d) {
        if (x < visible_) {
            const int pos = visible_pos_[std::size_t(x)];
            return leave_tile(pos / n_, pos % n_, side_of(d));
        }
        const int k = x - visible_;
        const int rs = k / int(cols_.size()), cs = k % int(cols_.size());
        const int row = rows_[std::size_t(rs)], col = cols_[std::size_t(cs)];
        switch (d) {
            case south:  // down the column arc: rows met bottom-up first, so next is the row above
                if (rs > 0) return {hidden(rs - 1, cs), north};
                return enter_or_leave(0, col, Side::top);
            case north:
                if (rs + 1 < int(rows_.size())) return {hidden(rs + 1, cs), south};
                return enter_or_leave(n_ - 1, col, Side::bottom);
            case west:
                if (cs > 0) return {hidden(rs, cs - 1), east};
                return enter_or_leave(row, 0, Side::left);
            default:
                if (cs + 1 < int(cols_.size())) return {hidden(rs, cs + 1), west};
                return enter_or_leave(row, n_ - 1, Side::right);
        }
    }

    Arrival enter_or_leave(int r, int c, Side s) {
        const auto a = enter_tile(r, c, s);
        if (a.crossing != -1) return a;
        return leave_tile(r, c, m_.at(r, c).profile().partner(s));
    }

    int count_free_loops() {
        int loops = 0;
        for (int r = 0; r < n_; ++r) {
            for (int c = 0; c < n_; ++c) {
                const auto& p = m_.at(r, c).profile();
                if (m_.at(r, c).is_crossing()) continue;
                for (int k = 0; k < p.strand_count; ++k) {
                    if (strand_seen_[cell(r, c) * 2 + std::size_t(k)]) continue;
                    ++loops;
                    // A crossingless loop; walking it from here marks every tile strand on it.
                    strand_seen_[cell(r, c) * 2 + std::size_t(k)] = 1;
                    const Arrival a = leave_tile(r, c, p.strands[std::size_t(k)][1]);
                    if (a.crossing != closed) throw DomainError("internal error: free loop meets a crossing");
                }
            }
        }
        return loops;
    }

    const Mosaic& m_;
    int n_;
    int visible_ = 0;
    static constexpr int closed = -2;
    std::vector<int> visible_id_;
    std::vector<int> visible_pos_;
    std::vector<bool> vertical_over_;
    std::vector<int> rows_, cols_;
    std::vector<int> row_slot_, col_slot_;
    std::vector<char> strand_seen_;
};

}  // namespace

LinkDiagram trace(const Mosaic& m) {
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    return Tracer(m).run();
}

}  // namespace toric
