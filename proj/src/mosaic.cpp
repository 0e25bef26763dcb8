#include "toric/mosaic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int tile_from_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch == 'a') return 10;
    return -1;
}

}  // namespace

Mosaic::Mosaic(int n, Tile fill) : n_(n), cells_(std::size_t(n) * std::size_t(n), fill) {
    if (n < 1) throw DomainError("mosaic side length must be at least 1");
}

Mosaic::Mosaic(int n, std::vector<Tile> cells) : n_(n), cells_(std::move(cells)) {
    if (n < 1) throw DomainError("mosaic side length must be at least 1");
    if (cells_.size() != std::size_t(n) * std::size_t(n)) throw DomainError("cell count does not match n*n");
}

Tile Mosaic::wrapped(int row, int col) const { return at(mod(row, n_), mod(col, n_)); }

int Mosaic::count_kind(int kind) const {
    return int(std::count_if(cells_.begin(), cells_.end(), [kind](Tile t) { return t.kind() == kind; }));
}

Mosaic decode(std::string_view code) {
    const auto len = code.size();
    if (len == 0) throw ParseError("empty mosaic code");
    const auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(len))));
    if (n * n != len) throw ParseError("mosaic code length " + std::to_string(len) + " is not a perfect square");
    std::vector<Tile> cells;
    cells.reserve(len);
    for (char ch : code) {
        const int k = tile_from_digit(ch);
        if (k < 0) throw ParseError(std::string("invalid tile digit '") + ch + "'");
        cells.emplace_back(k);
    }
    return Mosaic(int(n), std::move(cells));
}

std::string encode(const Mosaic& m) {
    std::string s;
    s.reserve(m.cells().size());
    for (Tile t : m.cells()) s.push_back(tile_digit(t));
    return s;
}

bool is_suitably_connected(const Mosaic& m, Topology topology) {
    const int n = m.size();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const auto& p = m.at(r, c).profile();
            if (topology == Topology::toric) {
                if (p.right != m.wrapped(r, c + 1).profile().left) return false;
                if (p.bottom != m.wrapped(r + 1, c).profile().top) return false;
                continue;
            }
            if (c + 1 < n ? p.right != m.at(r, c + 1).profile().left : p.right) return false;
            if (r + 1 < n ? p.bottom != m.at(r + 1, c).profile().top : p.bottom) return false;
            if ((c == 0 && p.left) || (r == 0 && p.top)) return false;
        }
    }
    return true;
}

BoundaryCounts boundary_counts(const Mosaic& m) {
    if (!is_suitably_connected(m)) throw DomainError("mosaic is not suitably connected");
    BoundaryCounts counts;
    for (int i = 0; i < m.size(); ++i) {
        counts.a += m.at(i, 0).profile().left ? 1 : 0;
        counts.b += m.at(0, i).profile().top ? 1 : 0;
    }
    return counts;
}

int hidden_crossing_count(const Mosaic& m) {
    const auto [a, b] = boundary_counts(m);
    return a * b;
}

Mosaic translate(const Mosaic& m, int dr, int dc) {
    const int n = m.size();
    Mosaic out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.set(mod(r + dr, n), mod(c + dc, n), m.at(r, c));
    return out;
}

std::string canonical_code(const Mosaic& m) {
    const int n = m.size();
    const auto& cells = m.cells();
    // Compare shifted codes in place rather than materialising n^2 strings.
    int best_r = 0, best_c = 0;
    auto digit = [&](int sr, int sc, int k) {
        const int r = (sr + k / n) % n, c = (sc + k % n) % n;
        return cells[std::size_t(r) * std::size_t(n) + std::size_t(c)].kind();
    };
    for (int sr = 0; sr < n; ++sr) {
        for (int sc = 0; sc < n; ++sc) {
            for (int k = 0; k < n * n; ++k) {
                const int a = digit(sr, sc, k), b = digit(best_r, best_c, k);
                if (a != b) {
                    if (a < b) best_r = sr, best_c = sc;
                    break;
                }
            }
        }
    }
    return encode(translate(m, -best_r, -best_c));
}

std::vector<Mosaic> read_mosaic_list(std::string_view text) {
    std::vector<Mosaic> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(decode(line));
    }
    return out;
}

}  // namespace toric
