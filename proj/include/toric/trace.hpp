#pragma once

#include "toric/diagram.hpp"
#include "toric/mosaic.hpp"

namespace toric {

/// Flattens a suitably connected toric mosaic into a planar link diagram.
///
/// The grid's strands are closed up outside the square: each top/bottom
/// column pair by an arc around the left side, each left/right row pair by an
/// arc around the bottom. The two families meet in A*B hidden crossings, with
/// the row arcs passing over. Crossings are numbered with the visible ones
/// first (row-major), then hidden ones (row-major by row arc, column arc).
LinkDiagram trace(const Mosaic& m);

}  // namespace toric
