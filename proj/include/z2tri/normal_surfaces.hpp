#pragma once

#include <array>
#include <optional>
#include <vector>

#include "z2tri/cohomology.hpp"
#include "z2tri/colouring.hpp"
#include "z2tri/skeleton.hpp"

namespace z2tri {

// Disc types 0..3 are the triangles cutting off vertex 0..3. Type 4+p is the
// quad separating {0, p+1} from the other two vertices; it misses the opposite
// edge pair (p, 5-p).
inline constexpr int kDiscTypes = 7;
inline constexpr int quad_type(int pair) { return 4 + pair; }

// Opposite-pair index p of the quad that separates local vertices a and b
// from the other two.
int quad_separating(int a, int b);

struct NormalCoordinates {
  std::vector<std::array<int, kDiscTypes>> discs;

  explicit NormalCoordinates(std::size_t tets = 0) : discs(tets, std::array<int, kDiscTypes>{}) {}
  bool empty() const;
  bool operator==(const NormalCoordinates&) const = default;
};

struct ComponentClass {
  bool orientable = true;
  int genus = 0;     // orientable components
  int crosscaps = 0; // non-orientable components
  bool is_sphere = false;
};

ComponentClass classify_component(int euler, bool orientable);

struct SurfaceComponent {
  std::vector<int> discs; // indices into SurfaceComplex::discs
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int boundary_arcs = 0;
  bool orientable = true;

  int euler() const { return vertices - edges + faces; }
  ComponentClass classification() const { return classify_component(euler(), orientable); }
};

// Abstract cell complex of a normal surface: one face per disc, arcs glued
// across face classes by arc type, vertices the resulting corner classes.
struct SurfaceComplex {
  struct Disc {
    int tet = -1;
    int type = -1;
  };
  std::vector<Disc> discs;
  std::vector<int> disc_component;
  // Edge class of the triangulation carrying each surface vertex.
  std::vector<int> vertex_edge;
  std::vector<SurfaceComponent> components;

  int num_vertices() const;
  int num_edges() const;
  int num_faces() const { return static_cast<int>(discs.size()); }
  int euler() const { return num_vertices() - num_edges() + num_faces(); }
};

// Requires every count to be 0 or 1 and no two discs of a tetrahedron to share
// an arc type on a face; throws UnsupportedSurface otherwise.
SurfaceComplex build_surface_complex(const Skeleton& s, const NormalCoordinates& nc);

struct DualSurface {
  Rank1Colouring colouring;
  NormalCoordinates coords;
  SurfaceComplex complex;
  // #odd edges - #face classes with two odd edges + #discs.
  int euler_formula = 0;
};

// Throws NotOneVertex, ZeroClass or NotACocycle.
DualSurface canonical_dual_surface(const Skeleton& s, const Cochain& phi);

struct QuadComponent {
  NormalCoordinates coords;
  int euler = 0;
  bool orientable = true;
  // At most one quad of the component in each tetrahedron.
  bool embedded = false;
  // Edge intersection parity; only meaningful when embedded.
  Cochain dual;
  ComponentClass classification;
};

struct QuadSurfaceAnalysis {
  SurfaceComplex complex;
  std::vector<QuadComponent> components;
  // T + sum of component Euler characteristics == 2; set when there are three
  // components and one vertex.
  std::optional<bool> euler_sum_holds;

  bool three_embedded() const;
  int euler_sum() const;
};

// Throws NotClosed for a bounded triangulation.
QuadSurfaceAnalysis canonical_quad_surface(const Skeleton& s);

struct ArcMatchingReport {
  bool holds = true;
  int face = -1;   // first face class where the two sides disagree
  int vertex = -1; // cut-off vertex on its representative side
  int lhs = 0, rhs = 0;
};

ArcMatchingReport check_arc_matching(const Skeleton& s, const NormalCoordinates& nc);

} // namespace z2tri
