#pragma once

#include <string>

#include "arcline/region.hpp"

namespace arcline {

// Draws the arcs of r with both endpoints inside w over a labelled number
// line. Arcs are semicircular caps; a fountain whose rays leave the window is
// drawn as a dashed arc escaping through the edge and listed in a trailing
// annotation line. Output is deterministic byte for byte.
//
// ascii rejects windows spanning more than 200 integers (precondition_error).
std::string render_ascii(const ArcRegion& r, const Window& w);
std::string render_svg(const ArcRegion& r, const Window& w);

}  // namespace arcline
