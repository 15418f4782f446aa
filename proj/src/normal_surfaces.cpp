#include "z2tri/normal_surfaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "union_find.hpp"

namespace z2tri {

int quad_separating(int a, int b) {
  const int e = edge_index(a, b);
  return std::min(e, opposite_edge(e));
}

bool NormalCoordinates::empty() const {
  for (const auto& d : discs)
    for (int x : d)
      if (x) return false;
  return true;
}

ComponentClass classify_component(int euler, bool orientable) {
  ComponentClass c;
  c.orientable = orientable;
  if (orientable)
    c.genus = (2 - euler) / 2;
  else
    c.crosscaps = 2 - euler;
  c.is_sphere = orientable && euler == 2;
  return c;
}

int SurfaceComplex::num_vertices() const {
  int n = 0;
  for (const auto& c : components) n += c.vertices;
  return n;
}

int SurfaceComplex::num_edges() const {
  int n = 0;
  for (const auto& c : components) n += c.edges;
  return n;
}

namespace {

// Local edges met by a disc, in boundary order.
std::vector<int> disc_corners(int type) {
  if (type < 4) {
    std::vector<int> out;
    for (int w = 0; w < 4; ++w)
      if (w != type) out.push_back(edge_index(type, w));
    return out;
  }
  const int i = type - 3;
  std::array<int, 2> jk{};
  int n = 0;
  for (int w = 1; w < 4; ++w)
    if (w != i) jk[n++] = w;
  return {edge_index(0, jk[0]), edge_index(0, jk[1]), edge_index(i, jk[1]), edge_index(i, jk[0])};
}

int shared_vertex(int e1, int e2) {
  for (int a : kEdgeVertex[e1])
    for (int b : kEdgeVertex[e2])
      if (a == b) return a;
  return -1;
}

// The face containing both edges: opposite the vertex in neither.
int face_of_edges(int e1, int e2) {
  for (int v = 0; v < 4; ++v) {
    const bool in1 = kEdgeVertex[e1][0] == v || kEdgeVertex[e1][1] == v;
    const bool in2 = kEdgeVertex[e2][0] == v || kEdgeVertex[e2][1] == v;
    if (!in1 && !in2) return v;
  }
  return -1;
}

int image_edge(const Perm4& p, int e) { return edge_index(p[kEdgeVertex[e][0]], p[kEdgeVertex[e][1]]); }

struct ArcKey {
  int tet, face, cut;
  auto operator<=>(const ArcKey&) const = default;
};

} // namespace

SurfaceComplex build_surface_complex(const Skeleton& s, const NormalCoordinates& nc) {
  const auto& t = s.triangulation();
  if (nc.discs.size() != static_cast<std::size_t>(s.num_tets()))
    throw Error(ErrorKind::BadParameter, "normal coordinates do not match the tetrahedron count");

  SurfaceComplex out;
  std::vector<std::vector<int>> corners; // local edges per disc
  std::vector<int> corner_base;
  int num_corners = 0;
  for (int i = 0; i < s.num_tets(); ++i)
    for (int d = 0; d < kDiscTypes; ++d) {
      const int count = nc.discs[static_cast<std::size_t>(i)][static_cast<std::size_t>(d)];
      if (count < 0) throw Error(ErrorKind::BadParameter, "negative disc count");
      if (count > 1) throw Error(ErrorKind::UnsupportedSurface, "disc counts above one are not supported");
      if (count == 0) continue;
      out.discs.push_back({i, d});
      corners.push_back(disc_corners(d));
      corner_base.push_back(num_corners);
      num_corners += static_cast<int>(corners.back().size());
    }

  std::map<ArcKey, std::pair<int, int>> arcs; // -> (disc, corner index)
  for (int d = 0; d < static_cast<int>(out.discs.size()); ++d) {
    const auto& c = corners[static_cast<std::size_t>(d)];
    for (std::size_t m = 0; m < c.size(); ++m) {
      const int e1 = c[m], e2 = c[(m + 1) % c.size()];
      const ArcKey key{out.discs[static_cast<std::size_t>(d)].tet, face_of_edges(e1, e2), shared_vertex(e1, e2)};
      if (!arcs.emplace(key, std::make_pair(d, static_cast<int>(m))).second)
        throw Error(ErrorKind::UnsupportedSurface, "two discs share an arc type in tetrahedron " +
                                                       std::to_string(key.tet));
    }
  }

  const int num_discs = static_cast<int>(out.discs.size());
  detail::ParityUnionFind corner_uf(static_cast<std::size_t>(num_corners));
  detail::ParityUnionFind disc_uf(static_cast<std::size_t>(num_discs));
  std::vector<int> twisted; // discs where orientation propagation failed
  std::vector<int> glued_arcs(static_cast<std::size_t>(num_discs), 0);
  std::vector<int> boundary_arcs(static_cast<std::size_t>(num_discs), 0);

  for (const auto& [key, where] : arcs) {
    const auto [d, m] = where;
    const auto& g = t.gluing(key.tet, key.face);
    std::optional<std::pair<int, int>> partner;
    if (g) {
      auto it = arcs.find({g->tet, g->perm[key.face], g->perm[key.cut]});
      if (it != arcs.end()) partner = it->second;
    }
    if (!partner) {
      ++boundary_arcs[static_cast<std::size_t>(d)];
      continue;
    }
    const auto [d2, m2] = *partner;
    // Each glued pair is visited from both sides; handle it once.
    if (std::make_pair(d2, m2) < std::make_pair(d, m)) continue;
    ++glued_arcs[static_cast<std::size_t>(d)];

    const auto& c1 = corners[static_cast<std::size_t>(d)];
    const auto& c2 = corners[static_cast<std::size_t>(d2)];
    const int n1 = static_cast<int>(c1.size()), n2 = static_cast<int>(c2.size());
    const int start = corner_base[d] + m, end = corner_base[d] + (m + 1) % n1;
    const int start2 = corner_base[d2] + m2, end2 = corner_base[d2] + (m2 + 1) % n2;
    const bool same_direction = image_edge(g->perm, c1[static_cast<std::size_t>(m)]) == c2[static_cast<std::size_t>(m2)];
    if (same_direction) {
      corner_uf.unite(start, start2);
      corner_uf.unite(end, end2);
    } else {
      corner_uf.unite(start, end2);
      corner_uf.unite(end, start2);
    }
    // Coherent orientations traverse a shared arc in opposite directions.
    if (!disc_uf.unite(d, d2, same_direction ? 1 : 0)) twisted.push_back(d);
  }

  std::map<int, int> component_of_root;
  out.disc_component.resize(static_cast<std::size_t>(num_discs));
  for (int d = 0; d < num_discs; ++d) {
    const int root = disc_uf.find(d).first;
    auto [it, fresh] = component_of_root.emplace(root, static_cast<int>(out.components.size()));
    if (fresh) out.components.emplace_back();
    auto& comp = out.components[static_cast<std::size_t>(it->second)];
    comp.discs.push_back(d);
    ++comp.faces;
    comp.edges += glued_arcs[static_cast<std::size_t>(d)] + boundary_arcs[static_cast<std::size_t>(d)];
    comp.boundary_arcs += boundary_arcs[static_cast<std::size_t>(d)];
    out.disc_component[static_cast<std::size_t>(d)] = it->second;
  }
  for (int d : twisted) out.components[static_cast<std::size_t>(out.disc_component[static_cast<std::size_t>(d)])].orientable = false;

  std::map<int, int> vertex_of_root;
  for (int d = 0; d < num_discs; ++d) {
    const auto& c = corners[static_cast<std::size_t>(d)];
    for (std::size_t m = 0; m < c.size(); ++m) {
      const int root = corner_uf.find(corner_base[d] + static_cast<int>(m)).first;
      if (vertex_of_root.emplace(root, static_cast<int>(out.vertex_edge.size())).second) {
        out.vertex_edge.push_back(s.edge_of(out.discs[static_cast<std::size_t>(d)].tet, c[m]));
        ++out.components[static_cast<std::size_t>(out.disc_component[static_cast<std::size_t>(d)])].vertices;
      }
    }
  }
  return out;
}

DualSurface canonical_dual_surface(const Skeleton& s, const Cochain& phi) {
  DualSurface out{colour_rank1(s, phi), NormalCoordinates(static_cast<std::size_t>(s.num_tets())), {}, 0};
  int discs = 0;
  for (int i = 0; i < s.num_tets(); ++i) {
    const int type = out.colouring.tet_type[static_cast<std::size_t>(i)];
    const int locus = out.colouring.tet_locus[static_cast<std::size_t>(i)];
    auto& d = out.coords.discs[static_cast<std::size_t>(i)];
    if (type == 1) d[static_cast<std::size_t>(quad_type(locus))] = 1;
    if (type == 2) d[static_cast<std::size_t>(locus)] = 1;
    discs += type != 3;
  }
  out.complex = build_surface_complex(s, out.coords);

  int odd_edges = static_cast<int>(phi.count());
  int odd_faces = 0;
  for (int f = 0; f < s.num_faces(); ++f) {
    int n = 0;
    for (int e : s.face_edges(f)) n += phi.get(static_cast<std::size_t>(e));
    if (n == 2) ++odd_faces;
  }
  out.euler_formula = odd_edges - odd_faces + discs;
  return out;
}

bool QuadSurfaceAnalysis::three_embedded() const {
  return components.size() == 3 &&
         std::all_of(components.begin(), components.end(), [](const QuadComponent& c) { return c.embedded; });
}

int QuadSurfaceAnalysis::euler_sum() const {
  int sum = 0;
  for (const auto& c : components) sum += c.euler;
  return sum;
}

QuadSurfaceAnalysis canonical_quad_surface(const Skeleton& s) {
  if (!s.triangulation().is_closed()) throw Error(ErrorKind::NotClosed, "quad surface needs a closed triangulation");
  const auto n = static_cast<std::size_t>(s.num_tets());
  NormalCoordinates all(n);
  for (auto& d : all.discs) d[4] = d[5] = d[6] = 1;

  QuadSurfaceAnalysis out;
  out.complex = build_surface_complex(s, all);
  for (const auto& sc : out.complex.components) {
    QuadComponent qc;
    qc.coords = NormalCoordinates(n);
    for (int d : sc.discs) {
      const auto& disc = out.complex.discs[static_cast<std::size_t>(d)];
      ++qc.coords.discs[static_cast<std::size_t>(disc.tet)][static_cast<std::size_t>(disc.type)];
    }
    qc.euler = sc.euler();
    qc.orientable = sc.orientable;
    qc.classification = sc.classification();
    qc.embedded = std::all_of(qc.coords.discs.begin(), qc.coords.discs.end(),
                              [](const auto& d) { return d[4] + d[5] + d[6] <= 1; });
    qc.dual = Cochain(static_cast<std::size_t>(s.num_edges()));
    if (qc.embedded) {
      for (int e = 0; e < s.num_edges(); ++e) {
        const auto rep = s.edge_slots(e).front();
        const auto& d = qc.coords.discs[static_cast<std::size_t>(rep.tet)];
        // A quad meets every edge outside the pair it misses.
        int hits = 0;
        for (int p = 0; p < 3; ++p)
          if (d[static_cast<std::size_t>(quad_type(p))] && rep.edge != p && rep.edge != opposite_edge(p)) ++hits;
        qc.dual.set(static_cast<std::size_t>(e), hits % 2);
      }
    }
    out.components.push_back(std::move(qc));
  }
  if (out.components.size() == 3 && s.num_vertices() == 1)
    out.euler_sum_holds = s.num_tets() + out.euler_sum() == 2;
  return out;
}

ArcMatchingReport check_arc_matching(const Skeleton& s, const NormalCoordinates& nc) {
  const auto& t = s.triangulation();
  auto arc_count = [&](int tet, int face, int cut) {
    const auto& d = nc.discs.at(static_cast<std::size_t>(tet));
    return d[static_cast<std::size_t>(cut)] + d[static_cast<std::size_t>(quad_type(quad_separating(face, cut)))];
  };
  ArcMatchingReport r;
  for (int f = 0; f < s.num_faces(); ++f) {
    if (s.is_boundary_face(f)) continue;
    const auto slot = s.face_slots(f).front();
    const auto& g = t.gluing(slot.tet, slot.face);
    for (int u : face_vertices(slot.face)) {
      const int lhs = arc_count(slot.tet, slot.face, u);
      const int rhs = arc_count(g->tet, g->perm[slot.face], g->perm[u]);
      if (lhs != rhs) return {false, f, u, lhs, rhs};
    }
  }
  return r;
}

} // namespace z2tri
