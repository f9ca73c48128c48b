#pragma once

#include <string>

#include "domino3d/invariant.hpp"
#include "domino3d/socks.hpp"
#include "domino3d/tiling.hpp"

namespace domino3d {

// One group per floor, top floor leftmost: planar dimers as bars, z-dimers
// as circles (red on the top floor, white on the bottom floor). A third
// group shows the drawing: oriented cycles, jewels and ghost curves.
std::string render_tiling_svg(const Tiling& t, const TwoStoryRegion& r, const GhostConnection& g = {});

// Grid with the sock's oriented cycles; jewels with nonzero winding are
// marked by color.
std::string render_sock_svg(const Sock& s);

}  // namespace domino3d
