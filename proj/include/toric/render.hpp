#pragma once

#include <string>

#include "toric/mosaic.hpp"

namespace toric {

enum class RenderFormat { ascii, svg };

struct RenderOptions {
    RenderFormat format = RenderFormat::ascii;
    int cell_size = 40;  // pixels, svg only
    bool show_grid = true;
    // Draw the closure arcs outside the grid, with their hidden crossings.
    bool highlight_hidden = false;
};

/// ascii: one 3x3 glyph block per tile. svg: a standalone document; every
/// crossing carries one element of class "gap" (visible) or "hidden-gap".
std::string render(const Mosaic& m, const RenderOptions& opts = {});

}  // namespace toric
