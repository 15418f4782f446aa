#include "z2tri/lst.hpp"

#include <algorithm>
#include <set>

namespace z2tri {

const std::vector<std::pair<int, Perm4>>& lst_core_table() {
  // Found by exhaustive search over the 36 two-face self-gluings of one
  // tetrahedron; see the unit tests for the criteria.
  static const std::vector<std::pair<int, Perm4>> table{
      {0, Perm4(1, 2, 3, 0)}, {0, Perm4(1, 3, 0, 2)}, {0, Perm4(2, 0, 3, 1)}, {0, Perm4(2, 3, 1, 0)},
      {0, Perm4(3, 0, 1, 2)}, {0, Perm4(3, 2, 0, 1)}, {1, Perm4(1, 2, 3, 0)}, {1, Perm4(1, 3, 0, 2)},
      {1, Perm4(2, 3, 1, 0)}, {1, Perm4(3, 2, 0, 1)}, {2, Perm4(1, 2, 3, 0)}, {2, Perm4(2, 0, 3, 1)},
  };
  return table;
}

namespace {

std::optional<std::pair<int, Perm4>> core_gluing(const Triangulation& t, int tet) {
  std::optional<std::pair<int, Perm4>> found;
  int self_faces = 0;
  for (int f = 0; f < 4; ++f) {
    const auto& g = t.gluing(tet, f);
    if (!g || g->tet != tet) continue;
    ++self_faces;
    if (g->perm[f] > f) found = std::make_pair(f, g->perm);
  }
  if (self_faces != 2 || !found) return std::nullopt;
  const auto& table = lst_core_table();
  if (std::find(table.begin(), table.end(), *found) == table.end()) return std::nullopt;
  return found;
}

} // namespace

std::vector<int> find_lst_cores(const Triangulation& t) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(t.size()); ++i)
    if (core_gluing(t, i)) out.push_back(i);
  return out;
}

namespace {

struct Growth {
  std::vector<int> tets;
  std::vector<int> layering_edges;
  Triangulation local; // local tetrahedron j is ambient tets[j], same vertex labels
};

// Vertices u < w of face `f` whose images under `p` are the vertices of `edge`
// in the target.
std::pair<int, int> preimage_in_face(int f, const Perm4& p, int target_edge) {
  const auto fv = face_vertices(f);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (edge_index(p[fv[a]], p[fv[b]]) == target_edge) return {fv[a], fv[b]};
  return {-1, -1};
}

// Attempts one layering onto the current boundary; returns false when none
// fits.
bool layer_once(const Triangulation& t, const Skeleton& ambient, Growth& g) {
  const Skeleton local(g.local);
  std::vector<FaceSlot> boundary;
  for (int j = 0; j < static_cast<int>(g.local.size()); ++j)
    for (int f = 0; f < 4; ++f)
      if (g.local.is_boundary(j, f)) boundary.push_back({j, f});
  if (boundary.size() != 2) return false;

  const auto& g1 = t.gluing(g.tets[boundary[0].tet], boundary[0].face);
  const auto& g2 = t.gluing(g.tets[boundary[1].tet], boundary[1].face);
  if (!g1 || !g2 || g1->tet != g2->tet) return false;
  const int sigma = g1->tet;
  if (std::find(g.tets.begin(), g.tets.end(), sigma) != g.tets.end()) return false;
  const int f1 = g1->perm[boundary[0].face], f2 = g2->perm[boundary[1].face];
  if (f1 == f2) return false;

  // The two glued faces of sigma share the edge opposite {f1, f2}.
  const int shared = opposite_edge(edge_index(f1, f2));
  const auto [u1, w1] = preimage_in_face(boundary[0].face, g1->perm, shared);
  const auto [u2, w2] = preimage_in_face(boundary[1].face, g2->perm, shared);
  const int le1 = edge_index(u1, w1), le2 = edge_index(u2, w2);
  if (local.edge_of(boundary[0].tet, le1) != local.edge_of(boundary[1].tet, le2)) return false;
  // Both sides must carry the boundary edge onto sigma in the same direction.
  const int from1 = local.edge_sign(boundary[0].tet, le1) > 0 ? g1->perm[u1] : g1->perm[w1];
  const int from2 = local.edge_sign(boundary[1].tet, le2) > 0 ? g2->perm[u2] : g2->perm[w2];
  if (from1 != from2) return false;

  // The other two faces of sigma must lead outside.
  for (int f = 0; f < 4; ++f) {
    if (f == f1 || f == f2) continue;
    const auto& h = t.gluing(sigma, f);
    if (h && (h->tet == sigma || std::find(g.tets.begin(), g.tets.end(), h->tet) != g.tets.end())) return false;
  }

  const int j = g.local.add_tetrahedron();
  g.local.join(boundary[0].tet, boundary[0].face, j, g1->perm);
  g.local.join(boundary[1].tet, boundary[1].face, j, g2->perm);
  g.tets.push_back(sigma);
  g.layering_edges.push_back(ambient.edge_of(g.tets[static_cast<std::size_t>(boundary[0].tet)], le1));
  return true;
}

LstDescriptor describe(const Skeleton& ambient, const Growth& g) {
  LstDescriptor d;
  d.tets = g.tets;
  d.layering_edges = g.layering_edges;
  const Skeleton local(g.local);
  std::vector<LstEdge> boundary;
  for (int e = 0; e < local.num_edges(); ++e) {
    const auto slot = local.edge_slots(e).front();
    const int amb = ambient.edge_of(g.tets[static_cast<std::size_t>(slot.tet)], slot.edge);
    const LstEdge le{amb, local.degree(e), ambient.degree(amb)};
    (local.is_boundary_edge(e) ? boundary : d.interior).push_back(le);
  }
  auto by_degree = [](const LstEdge& a, const LstEdge& b) {
    return std::tie(a.lst_degree, a.edge) < std::tie(b.lst_degree, b.edge);
  };
  std::sort(boundary.begin(), boundary.end(), by_degree);
  std::sort(d.interior.begin(), d.interior.end(), by_degree);
  for (std::size_t i = 0; i < 3 && i < boundary.size(); ++i) d.boundary[i] = boundary[i];
  if (!boundary.empty() && boundary.front().lst_degree == 1) d.univalent_edge = boundary.front().edge;
  return d;
}

LstDescriptor grow(const Triangulation& t, const Skeleton& ambient, int core) {
  const auto gluing = core_gluing(t, core);
  if (!gluing) throw Error(ErrorKind::BadParameter, "tetrahedron " + std::to_string(core) + " is not a core");
  Growth g;
  g.tets = {core};
  g.local = Triangulation(1);
  g.local.join(0, gluing->first, 0, gluing->second);
  while (layer_once(t, ambient, g)) {
  }
  return describe(ambient, g);
}

} // namespace

LstDescriptor grow_to_maximal(const Triangulation& t, int core) { return grow(t, Skeleton(t), core); }

std::vector<LstDescriptor> find_maximal_lsts(const Triangulation& t) {
  const Skeleton ambient(t);
  std::vector<LstDescriptor> all;
  std::set<std::vector<int>> seen;
  for (int core : find_lst_cores(t)) {
    auto d = grow(t, ambient, core);
    std::vector<int> key = d.tets;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) all.push_back(std::move(d));
  }
  auto sorted_tets = [](const LstDescriptor& d) {
    std::vector<int> k = d.tets;
    std::sort(k.begin(), k.end());
    return k;
  };
  std::vector<LstDescriptor> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    const auto ka = sorted_tets(all[a]);
    bool strict_subset = false;
    for (std::size_t b = 0; b < all.size() && !strict_subset; ++b) {
      if (a == b) continue;
      const auto kb = sorted_tets(all[b]);
      strict_subset = kb.size() > ka.size() && std::includes(kb.begin(), kb.end(), ka.begin(), ka.end());
    }
    if (!strict_subset) out.push_back(all[a]);
  }
  std::sort(out.begin(), out.end(), [&](const LstDescriptor& x, const LstDescriptor& y) {
    return sorted_tets(x).front() < sorted_tets(y).front();
  });
  return out;
}

TetType classify_lst(const RankTwoColouring& c, const Skeleton& s, LstDescriptor& d) {
  const TetType type = c.tet_type.at(static_cast<std::size_t>(d.tets.front()));
  for (int tet : d.tets)
    if (c.tet_type.at(static_cast<std::size_t>(tet)) != type)
      throw Error(ErrorKind::MixedTypes, "layered solid torus on tetrahedron " + std::to_string(d.tets.front()) +
                                             " has tetrahedra of different types");
  if (type != TetType::II && type != TetType::IV)
    throw Error(ErrorKind::MixedTypes, "layered solid torus on tetrahedron " + std::to_string(d.tets.front()) +
                                           " has type " + to_string(type));
  d.colour_type = type;
  d.h_even_boundary_edge = -1;
  d.is_ii4 = false;
  d.is_core_ii4 = false;
  if (type == TetType::II) {
    std::vector<int> even;
    for (const auto& b : d.boundary)
      if (c.edge_colour.at(static_cast<std::size_t>(b.edge)) == 0) even.push_back(b.edge);
    if (even.size() == 1) {
      d.h_even_boundary_edge = even.front();
      // A single core meets its H-even edge twice, so that edge is never a
      // flip site; it is reported separately.
      const bool degree4 = s.degree(even.front()) == 4;
      d.is_ii4 = degree4 && d.tets.size() >= 2;
      d.is_core_ii4 = degree4 && d.tets.size() == 1;
    }
  }
  return type;
}

std::vector<Degree3Base> find_degree3_bases(const Skeleton& s, const std::vector<LstDescriptor>& lsts) {
  std::vector<Degree3Base> out;
  for (int e = 0; e < s.num_edges(); ++e) {
    if (s.degree(e) != 3) continue;
    for (std::size_t i = 0; i < lsts.size(); ++i) {
      const auto& d = lsts[i];
      bool inside = std::any_of(d.boundary.begin(), d.boundary.end(), [&](const LstEdge& x) { return x.edge == e; }) ||
                    std::any_of(d.interior.begin(), d.interior.end(), [&](const LstEdge& x) { return x.edge == e; });
      if (inside) {
        out.push_back({e, static_cast<int>(i)});
        break;
      }
    }
  }
  return out;
}

std::vector<Degree3Base> find_degree3_bases(const Triangulation& t) {
  return find_degree3_bases(Skeleton(t), find_maximal_lsts(t));
}

} // namespace z2tri
