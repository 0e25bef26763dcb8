#include "toric/render.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <vector>

#include "toric/error.hpp"

namespace toric {
namespace {

using Glyph = std::array<const char*, 3>;

// The middle row and column carry the connections; a slash or backslash in
// the centre tells the two double-arc tiles apart.
constexpr std::array<Glyph, tile_kinds> glyphs{{
    {"   ", "   ", "   "},
    {"   ", "-. ", " | "},
    {"   ", " .-", " | "},
    {" | ", " '-", "   "},
    {" | ", "-' ", "   "},
    {"   ", "---", "   "},
    {" | ", " | ", " | "},
    {" | ", "-\\-", " | "},
    {" | ", "-/-", " | "},
    {" | ", "-|-", " | "},
    {" | ", "---", " | "},
}};

std::string render_ascii(const Mosaic& m) {
    std::string out;
    for (int r = 0; r < m.size(); ++r)
        for (int line = 0; line < 3; ++line) {
            for (int c = 0; c < m.size(); ++c) out += glyphs[std::size_t(m.at(r, c).kind())][std::size_t(line)];
            out += '\n';
        }
    return out;
}

struct Pt {
    double x, y;
};

class Svg {
public:
    explicit Svg(std::ostream& os) : os_(os) {}

    void line(Pt a, Pt b, const char* cls = "strand") {
        os_ << "<line class=\"" << cls << "\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x << "\" y2=\""
            << b.y << "\"/>\n";
    }

    // Quarter circle from a to b around corner c.
    void arc(Pt c, Pt a, Pt b) {
        const double r = std::abs(a.x - c.x) + std::abs(a.y - c.y);
        const double cross = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
        os_ << "<path class=\"strand\" d=\"M " << a.x << ' ' << a.y << " A " << r << ' ' << r << " 0 0 "
            << (cross > 0 ? 1 : 0) << ' ' << b.x << ' ' << b.y << "\"/>\n";
    }

    void polyline(const std::vector<Pt>& pts, const char* cls) {
        os_ << "<polyline class=\"" << cls << "\" points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) os_ << (i ? " " : "") << pts[i].x << ',' << pts[i].y;
        os_ << "\"/>\n";
    }

    // A short halo along the over-strand, cutting the under-strand beneath it.
    void gap(Pt centre, bool horizontal, double half, const char* cls) {
        const Pt a = horizontal ? Pt{centre.x - half, centre.y} : Pt{centre.x, centre.y - half};
        const Pt b = horizontal ? Pt{centre.x + half, centre.y} : Pt{centre.x, centre.y + half};
        line(a, b, cls);
    }

private:
    std::ostream& os_;
};

void draw_tile(Svg& svg, Tile t, double x, double y, double s) {
    const double h = s / 2;
    const Pt L{x, y + h}, T{x + h, y}, R{x + s, y + h}, B{x + h, y + s};
    const Pt tl{x, y}, tr{x + s, y}, br{x + s, y + s}, bl{x, y + s};
    switch (t.kind()) {
        case 1: svg.arc(bl, L, B); break;
        case 2: svg.arc(br, B, R); break;
        case 3: svg.arc(tr, T, R); break;
        case 4: svg.arc(tl, T, L); break;
        case 5: svg.line(L, R); break;
        case 6: svg.line(T, B); break;
        case 7: svg.arc(tr, T, R); svg.arc(bl, L, B); break;
        case 8: svg.arc(tl, T, L); svg.arc(br, B, R); break;
        case 9:
            svg.line(L, R);
            svg.gap({x + h, y + h}, false, s / 4, "gap");
            svg.line(T, B);
            break;
        case 10:
            svg.line(T, B);
            svg.gap({x + h, y + h}, true, s / 4, "gap");
            svg.line(L, R);
            break;
        default: break;
    }
}

std::string render_svg(const Mosaic& m, const RenderOptions& opts) {
    const int n = m.size();
    const double s = opts.cell_size;
    const double step = s / 4;  // spacing between nested closure arcs
    const double margin = opts.highlight_hidden ? step * (2 * n + 2) : s / 4;
    const double grid = n * s;
    const double size = grid + 2 * margin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "<style>.strand{stroke:black;stroke-width:" << s / 10
       << ";fill:none;stroke-linecap:round}.gap,.hidden-gap{stroke:white;stroke-width:" << s * 0.3
       << ";fill:none}.cell{stroke:#bbb;stroke-width:1;fill:none}</style>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    Svg svg(os);

    if (opts.highlight_hidden) {
        os << "<g id=\"closure\">\n";
        std::vector<int> cols, rows;
        for (int c = 0; c < n; ++c)
            if (m.at(0, c).profile().top) cols.push_back(c);
        for (int r = 0; r < n; ++r)
            if (m.at(r, 0).profile().left) rows.push_back(r);
        // Column arcs run around the left, nested with column 1 innermost.
        for (int c : cols) {
            const double d = step * (c + 1);
            const double x = margin + (c + 0.5) * s;
            svg.polyline({{x, margin}, {x, margin - d}, {margin - d, margin - d}, {margin - d, margin + grid + d},
                          {x, margin + grid + d}, {x, margin + grid}},
                         "strand");
        }
        // Row arcs run around the bottom, outside every column arc, and pass over them.
        for (int r : rows) {
            const double g = step * (n + 1 + (n - r));
            const double y = margin + (r + 0.5) * s;
            for (int c : cols) svg.gap({margin - step * (c + 1), y}, true, step / 2, "hidden-gap");
            svg.polyline({{margin, y}, {margin - g, y}, {margin - g, margin + grid + g}, {margin + grid + g, margin + grid + g},
                          {margin + grid + g, y}, {margin + grid, y}},
                         "strand");
        }
        os << "</g>\n";
    }

    os << "<g id=\"grid\">\n";
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const double x = margin + c * s, y = margin + r * s;
            if (opts.show_grid)
                os << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << s << "\" height=\"" << s
                   << "\"/>\n";
            draw_tile(svg, m.at(r, c), x, y, s);
        }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace

std::string render(const Mosaic& m, const RenderOptions& opts) {
    if (opts.cell_size <= 0) throw DomainError("cell size must be positive");
    if (opts.format == RenderFormat::ascii) return render_ascii(m);
    return render_svg(m, opts);
}

}  // namespace toric
