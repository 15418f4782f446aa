#pragma once

#include <map>
#include <vector>

#include "z2tri/triangulation.hpp"

namespace z2tri {

struct EdgeSlot {
  int tet = -1;
  int edge = -1; // local edge index 0..5

  bool operator==(const EdgeSlot&) const = default;
  auto operator<=>(const EdgeSlot&) const = default;
};

struct VertexSlot {
  int tet = -1;
  int vertex = -1;

  bool operator==(const VertexSlot&) const = default;
};

// Vertex, edge and face classes of a triangulation. Classes are numbered in
// order of their lowest (tetrahedron, local index) representative; an edge
// class is oriented like its representative slot (low local vertex to high).
class Skeleton {
public:
  explicit Skeleton(Triangulation t);

  const Triangulation& triangulation() const { return tri_; }

  int num_tets() const { return static_cast<int>(tri_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_slots_.size()); }
  int num_edges() const { return static_cast<int>(edge_slots_.size()); }
  int num_faces() const { return static_cast<int>(face_slots_.size()); }
  int euler_characteristic() const { return num_vertices() - num_edges() + num_faces() - num_tets(); }

  int vertex_of(int tet, int v) const { return tet_vertex_[tet][v]; }
  int edge_of(int tet, int e) const { return tet_edge_[tet][e]; }
  // +1 if the slot's low-to-high direction agrees with the class orientation.
  int edge_sign(int tet, int e) const { return tet_edge_sign_[tet][e]; }
  int face_of(int tet, int f) const { return tet_face_[tet][f]; }

  int degree(int edge) const { return static_cast<int>(edge_slots_[edge].size()); }
  const std::vector<EdgeSlot>& edge_slots(int edge) const { return edge_slots_[edge]; }
  const std::vector<VertexSlot>& vertex_slots(int vertex) const { return vertex_slots_[vertex]; }
  // One or two slots; two for an interior face (first is the representative).
  const std::vector<FaceSlot>& face_slots(int face) const { return face_slots_[face]; }

  bool is_boundary_face(int face) const { return face_slots_[face].size() == 1; }
  bool is_boundary_edge(int edge) const { return boundary_edge_[edge]; }

  // Endpoints (vertex classes) of an edge class, following its orientation.
  std::array<int, 2> edge_endpoints(int edge) const;

  // The three edge classes of a face class, from its representative slot.
  std::array<int, 3> face_edges(int face) const;

  int min_degree() const;
  bool all_degrees_even() const;
  std::map<int, int> degree_histogram() const;

private:
  Triangulation tri_;
  std::vector<std::array<int, 4>> tet_vertex_;
  std::vector<std::array<int, 6>> tet_edge_;
  std::vector<std::array<int, 6>> tet_edge_sign_;
  std::vector<std::array<int, 4>> tet_face_;
  std::vector<std::vector<VertexSlot>> vertex_slots_;
  std::vector<std::vector<EdgeSlot>> edge_slots_;
  std::vector<std::vector<FaceSlot>> face_slots_;
  std::vector<char> boundary_edge_;
};

// Throws InvalidEdge if some edge is identified with itself in reverse.
Skeleton compute_skeleton(const Triangulation& t);

// Local vertices of face f, in increasing order.
std::array<int, 3> face_vertices(int f);

} // namespace z2tri
