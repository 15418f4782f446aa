#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "z2tri/colouring.hpp"
#include "z2tri/skeleton.hpp"

namespace z2tri {

// Self-gluings (face f, perm with perm[f] > f) that turn one tetrahedron into
// a solid torus bounded by a one-vertex two-triangle torus.
const std::vector<std::pair<int, Perm4>>& lst_core_table();

struct LstEdge {
  int edge = -1;       // edge class of the ambient triangulation
  int lst_degree = 0;  // degree inside the layered solid torus
  int degree = 0;      // degree in the ambient triangulation
};

struct LstDescriptor {
  // Ambient tetrahedra in layering order; the first is the core.
  std::vector<int> tets;
  // Ambient edge class each layer was attached along.
  std::vector<int> layering_edges;
  // Boundary edges by ascending LST degree.
  std::array<LstEdge, 3> boundary;
  std::vector<LstEdge> interior;
  int univalent_edge = -1;

  // Filled in by classify_lst.
  std::optional<TetType> colour_type;
  int h_even_boundary_edge = -1; // the unique 0-even boundary edge of a type II LST
  // Type II with H-even boundary edge of degree 4, at least two tetrahedra.
  bool is_ii4 = false;
  // The same condition on a one-tetrahedron torus.
  bool is_core_ii4 = false;
};

// Tetrahedra whose self-gluing matches the core table and which have no other
// self-gluing.
std::vector<int> find_lst_cores(const Triangulation& t);

// Greedy layering from a core until no neighbour layers on without a twist.
LstDescriptor grow_to_maximal(const Triangulation& t, int core);

// Maximal layered solid tori, one per tetrahedron set, ordered by smallest
// tetrahedron index. Throws InvalidEdge for an invalid triangulation.
std::vector<LstDescriptor> find_maximal_lsts(const Triangulation& t);

// Reads the common colour type (II or IV) and sets the (II,4) flags. Throws
// MixedTypes if the tetrahedra disagree or the type is neither II nor IV.
TetType classify_lst(const RankTwoColouring& c, const Skeleton& s, LstDescriptor& d);

struct Degree3Base {
  int edge = -1;
  int lst = -1; // index into the list of maximal layered solid tori
};

// Degree-3 edge classes lying in a maximal layered solid torus.
std::vector<Degree3Base> find_degree3_bases(const Triangulation& t);
std::vector<Degree3Base> find_degree3_bases(const Skeleton& s, const std::vector<LstDescriptor>& lsts);

} // namespace z2tri
