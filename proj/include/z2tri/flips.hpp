#pragma once

#include <array>
#include <vector>

#include "z2tri/cohomology.hpp"
#include "z2tri/colouring.hpp"
#include "z2tri/skeleton.hpp"

namespace z2tri {

// A degree-4 edge with four distinct tetrahedra around it. Tetrahedron tets[i]
// is embedded by embed[i]: embed[i][0] and embed[i][1] are the ends N, S of
// the edge; embed[i][2], embed[i][3] are the equator vertices w_i, w_{i+1}.
// Axis a replaces the edge by the diagonal w_a w_{a+2} of the octahedron.
struct FlipSite {
  int edge = -1;
  std::array<int, 4> tets{};
  std::array<Perm4, 4> embed{};
};

// Walks around `edge`; throws InvalidSite unless it has degree 4 with four
// distinct tetrahedra and no boundary.
FlipSite flip_site(const Skeleton& s, int edge);

// All flippable edges of a closed triangulation, by edge class.
std::vector<FlipSite> flippable_edges(const Skeleton& s);

// Replaces the four tetrahedra of `site` in place (same indices) with four
// around the chosen axis. Outside gluings are preserved. Throws InvalidSite
// for a bad axis or a site that does not match `t`.
Triangulation edge_flip(const Triangulation& t, const FlipSite& site, int axis);

// Change in degree of each edge class of the input under the flip, ignoring
// the removed edge (whose entry is -4). Edge classes may receive contributions
// from several octahedron edges.
std::vector<int> flip_degree_change(const Skeleton& s, const FlipSite& site, int axis);

// Transports a Z/2 cocycle across a flip. `after` must be the skeleton of
// edge_flip(before.triangulation(), site, axis).
Cochain transport_cocycle(const Skeleton& before, const Skeleton& after, const FlipSite& site, int axis,
                          const Cochain& phi);

struct PromotionStep {
  int edge = -1; // flipped edge class, numbered in the triangulation before the flip
  int axis = 0;
  int ii4_count = 0;     // (II,4) layered solid tori after the flip
  int type_iv_count = 0; // type IV tetrahedra after the flip
};

struct PromotionResult {
  Triangulation tri;
  Subgroup subgroup; // transported to the output triangulation
  std::vector<PromotionStep> trace;
};

inline int default_max_steps(int tets) { return 10 * tets * tets; }

// Flips (II,4) layered solid tori away until none remains, flipping only their
// H-even boundary edges and backing out of dead ends. Throws
// StepLimitExceeded once max_steps flips have been tried and PromotionBlocked
// when every sequence dead-ends.
PromotionResult promote_to_ii4_free(const Triangulation& t, const Subgroup& h, int max_steps);

// Number of (II,4) maximal layered solid tori under the colouring.
int count_ii4(const Triangulation& t, const Skeleton& s, const RankTwoColouring& c);

} // namespace z2tri
