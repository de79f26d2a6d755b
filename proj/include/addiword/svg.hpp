#pragma once

#include <ostream>
#include <vector>

#include "addiword/collinear.hpp"

namespace addiword {

// Lattice path as a polyline in a fixed 800x600 viewBox, chosen points
// circled.
void write_path_svg(std::ostream& out, const std::vector<LatticePoint>& points,
                    const std::vector<std::size_t>& chosen);

}  // namespace addiword
