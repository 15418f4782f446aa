#include "z2tri/generators.hpp"

#include <algorithm>
#include <string>

#include "z2tri/skeleton.hpp"

namespace z2tri {

Triangulation twisted_layered_loop(int k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "twisted layered loop needs k >= 1, got " + std::to_string(k));
  Triangulation t(static_cast<std::size_t>(k));
  // Each layer meets the next along e_{h+1} and e_{h+2}: face 1 lands on
  // face 3 and face 0 on face 2.
  for (int i = 0; i + 1 < k; ++i) {
    t.join(i, 1, i + 1, Perm4(0, 3, 2, 1));
    t.join(i, 0, i + 1, Perm4(2, 1, 0, 3));
  }
  // Closing twist: e_{k+1} -> e_1, e_{k+2} -> e_2, t <-> b.
  t.join(k - 1, 1, 0, Perm4(1, 2, 3, 0));
  t.join(k - 1, 0, 0, Perm4(3, 0, 1, 2));
  return t;
}

Subgroup explicit_duals(const Triangulation& loop, int k) {
  if (k < 1 || k % 2 != 0)
    throw Error(ErrorKind::BadParameter, "explicit duals need an even k, got " + std::to_string(k));
  if (static_cast<int>(loop.size()) != k)
    throw Error(ErrorKind::BadParameter, "triangulation does not have k tetrahedra");
  const Skeleton s(loop);
  const auto n = static_cast<std::size_t>(s.num_edges());
  Cochain phi1(n), phi2(n);
  std::vector<char> seen(n, 0);
  for (int h = 1; h <= k; ++h) {
    const auto e = static_cast<std::size_t>(s.edge_of(h - 1, edge_index(0, 1)));
    phi1.set(e);
    phi2.set(e, h % 2 == 1);
    seen[e] = 1;
  }
  const auto t_edge = static_cast<std::size_t>(s.edge_of(0, edge_index(0, 2)));
  phi2.set(t_edge);
  seen[t_edge] = 1;
  if (std::count(seen.begin(), seen.end(), 1) != static_cast<long>(n))
    throw Error(ErrorKind::BadParameter, "triangulation is not a twisted layered loop");
  if (!is_cocycle(s, phi1) || !is_cocycle(s, phi2))
    throw Error(ErrorKind::NotACocycle, "explicit duals violate a face relation");
  return make_subgroup(phi1, phi2);
}

namespace {

// Face 0 glued to face 1 of the same tetrahedron.
constexpr Perm4 kCoreGluing{1, 2, 3, 0};

std::vector<FaceSlot> boundary_faces(const Triangulation& t) {
  std::vector<FaceSlot> out;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    for (int f = 0; f < 4; ++f)
      if (t.is_boundary(i, f)) out.push_back({i, f});
  return out;
}

// Local vertices (u, w) of the edge of face `slot` lying in class `edge`,
// oriented along the class.
std::pair<int, int> oriented_edge_in_face(const Skeleton& s, FaceSlot slot, int edge) {
  const auto fv = face_vertices(slot.face);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const int le = edge_index(fv[a], fv[b]);
      if (s.edge_of(slot.tet, le) != edge) continue;
      if (s.edge_sign(slot.tet, le) > 0) return {fv[a], fv[b]};
      return {fv[b], fv[a]};
    }
  throw Error(ErrorKind::BadParameter, "boundary face does not contain the layering edge");
}

// Gluing of boundary face `slot` onto face `target` of a new tetrahedron, with
// the oriented edge (u, w) landing on 0 -> 1 and the apex on `apex_image`.
Perm4 layering_perm(FaceSlot slot, std::pair<int, int> uw, int target, int apex_image) {
  int apex = -1;
  for (int v : face_vertices(slot.face))
    if (v != uw.first && v != uw.second) apex = v;
  std::array<int, 4> img{};
  img[static_cast<std::size_t>(slot.face)] = target;
  img[static_cast<std::size_t>(uw.first)] = 0;
  img[static_cast<std::size_t>(uw.second)] = 1;
  img[static_cast<std::size_t>(apex)] = apex_image;
  return Perm4(img[0], img[1], img[2], img[3]);
}

} // namespace

GeneratedLst layered_solid_torus(const std::vector<int>& sequence) {
  for (int x : sequence)
    if (x < 0 || x > 2) throw Error(ErrorKind::BadParameter, "layering choice must be 0, 1 or 2");

  GeneratedLst out;
  out.tri = Triangulation(1);
  out.tri.join(0, 0, 0, kCoreGluing);
  out.boundary_degrees = {1, 2, 3};

  for (int choice : sequence) {
    const Skeleton s(out.tri);
    std::vector<int> edges;
    for (int e = 0; e < s.num_edges(); ++e)
      if (s.is_boundary_edge(e)) edges.push_back(e);
    std::stable_sort(edges.begin(), edges.end(), [&](int a, int b) { return s.degree(a) < s.degree(b); });
    const int x = edges.at(static_cast<std::size_t>(choice));

    const auto faces = boundary_faces(out.tri);
    const int sigma = out.tri.add_tetrahedron();
    // The new tetrahedron meets the old boundary along faces 2 and 3, which
    // share its edge {0,1}; its edge {2,3} is the new boundary edge.
    out.tri.join(faces[0].tet, faces[0].face, sigma,
                 layering_perm(faces[0], oriented_edge_in_face(s, faces[0], x), 2, 3));
    out.tri.join(faces[1].tet, faces[1].face, sigma,
                 layering_perm(faces[1], oriented_edge_in_face(s, faces[1], x), 3, 2));

    auto& b = out.boundary_degrees;
    const int d = b[static_cast<std::size_t>(choice)];
    out.interior_degrees.push_back(d + 1);
    b.erase(b.begin() + choice);
    for (int& y : b) y += 2;
    b.push_back(1);
    std::sort(b.begin(), b.end());
  }
  std::sort(out.interior_degrees.begin(), out.interior_degrees.end());
  return out;
}

} // namespace z2tri
