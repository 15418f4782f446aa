#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2tri/error.hpp"
#include "z2tri/perm.hpp"

namespace z2tri {

// Face `f` of a tetrahedron is the face opposite vertex `f`. A gluing of face
// `f` of tetrahedron `i` records the target tetrahedron and the permutation
// sending the vertices of `i` to those of the target; the target face is
// perm[f].
struct Gluing {
  int tet = -1;
  Perm4 perm;

  bool operator==(const Gluing&) const = default;
};

struct FaceSlot {
  int tet = -1;
  int face = -1;

  bool operator==(const FaceSlot&) const = default;
  auto operator<=>(const FaceSlot&) const = default;
};

class Triangulation;
Triangulation parse_triangulation(std::string_view text);

class Triangulation {
public:
  Triangulation() = default;
  explicit Triangulation(std::size_t tet_count) : gluings_(tet_count) {}

  std::size_t size() const { return gluings_.size(); }
  bool empty() const { return gluings_.empty(); }

  int add_tetrahedron();

  const std::optional<Gluing>& gluing(int tet, int face) const { return gluings_.at(tet).at(face); }
  bool is_boundary(int tet, int face) const { return !gluing(tet, face).has_value(); }

  // Glues face `face` of `tet` to face perm[face] of `other` and records the
  // inverse gluing on the other side. Both faces must currently be free.
  void join(int tet, int face, int other, Perm4 perm);
  void unjoin(int tet, int face);

  bool is_closed() const;
  std::size_t boundary_face_count() const;

  // Checks the involution and no-self-face invariants; throws Error.
  void validate() const;

  bool operator==(const Triangulation&) const = default;

private:
  friend Triangulation parse_triangulation(std::string_view text);

  std::vector<std::array<std::optional<Gluing>, 4>> gluings_;
};

// TRI-v1 text format.
Triangulation parse_triangulation(std::string_view text);
std::string serialize(const Triangulation& t);

// Local edge numbering: edge i joins kEdgeVertex[i][0] < kEdgeVertex[i][1];
// edge 5-i is opposite edge i.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertex{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b) {
  if (a > b) {
    int tmp = a;
    a = b;
    b = tmp;
  }
  constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[a][b];
}

constexpr int opposite_edge(int e) { return 5 - e; }

// A per-tetrahedron sign making every gluing orientation-reversing between
// coherently oriented faces: sign[i] * sign[j] * perm.sign() == -1.
struct OrientationAssignment {
  std::vector<int> sign;
};

struct OrientationResult {
  bool orientable = true;
  OrientationAssignment assignment;
  // For a non-orientable input: a closed walk of gluings (each entry is the
  // face slot crossed) whose accumulated sign is inconsistent.
  std::vector<FaceSlot> witness;
};

OrientationResult orient(const Triangulation& t);

class NonOrientableError : public Error {
public:
  NonOrientableError(const std::string& message, std::vector<FaceSlot> witness)
      : Error(ErrorKind::NonOrientable, message), witness_(std::move(witness)) {}
  const std::vector<FaceSlot>& witness() const { return witness_; }

private:
  std::vector<FaceSlot> witness_;
};

// Orientability is checked before closedness, so a non-orientable bounded
// input reports NonOrientable.
OrientationAssignment check_closed_orientable(const Triangulation& t);

// Vertex v of tetrahedron i in the first triangulation corresponds to vertex
// vertex_map[i][v] of tetrahedron tet_map[i] in the second.
struct Isomorphism {
  std::vector<int> tet_map;
  std::vector<Perm4> vertex_map;
};

std::optional<Isomorphism> are_isomorphic(const Triangulation& a, const Triangulation& b);
bool is_isomorphism(const Triangulation& a, const Triangulation& b, const Isomorphism& iso);

// Subcomplex on the listed tetrahedra (renumbered in the given order); faces
// glued outside the list become boundary.
Triangulation restrict_to(const Triangulation& t, const std::vector<int>& tets);

} // namespace z2tri
