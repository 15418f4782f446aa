#pragma once

#include <vector>

#include "z2tri/cohomology.hpp"
#include "z2tri/triangulation.hpp"

namespace z2tri {

// The k-tetrahedron twisted layered loop. Tetrahedron h-1 is the h-th layer,
// with local edges {0,1} = e_h, {2,3} = e_{h+2}, {0,3} and {1,2} = e_{h+1},
// {0,2} = t and {1,3} = b (t and b are one class after closing up). Throws
// BadParameter for k < 1.
Triangulation twisted_layered_loop(int k);

// The dual classes (phi1, phi2, phi3) of a twisted layered loop with even k:
// phi1 is 1 on every e_i and 0 on t; phi2 is 1 on e_i for odd i and on t.
// Throws BadParameter for odd k.
Subgroup explicit_duals(const Triangulation& loop, int k);

struct GeneratedLst {
  Triangulation tri;
  // Degrees predicted by layering bookkeeping, independent of the skeleton.
  std::vector<int> boundary_degrees; // ascending, three entries
  std::vector<int> interior_degrees; // ascending
};

// One-tetrahedron core followed by one layering per entry of `sequence`. Each
// entry 0, 1 or 2 picks a boundary edge by rank in ascending degree order.
// Throws BadParameter for any other entry.
GeneratedLst layered_solid_torus(const std::vector<int>& sequence);

} // namespace z2tri
