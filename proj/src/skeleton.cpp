#include "z2tri/skeleton.hpp"

#include <algorithm>

#include "union_find.hpp"

namespace z2tri {

std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != f) out[k++] = v;
  return out;
}

Skeleton::Skeleton(Triangulation t) : tri_(std::move(t)) {
  const int n = static_cast<int>(tri_.size());
  detail::ParityUnionFind vertices(4 * n);
  detail::ParityUnionFind edges(6 * n);

  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      const auto& g = tri_.gluing(i, f);
      if (!g) continue;
      const auto fv = face_vertices(f);
      for (int v : fv) vertices.unite(4 * i + v, 4 * g->tet + g->perm[v]);
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          const int u = fv[a], w = fv[b];
          const int pu = g->perm[u], pw = g->perm[w];
          // u < w locally; the image keeps that direction iff pu < pw.
          const int rel = pu < pw ? 0 : 1;
          if (!edges.unite(6 * i + edge_index(u, w), 6 * g->tet + edge_index(pu, pw), rel))
            throw Error(ErrorKind::InvalidEdge, "edge " + std::to_string(edge_index(u, w)) + " of tetrahedron " +
                                                    std::to_string(i) + " is identified with its reverse");
        }
      }
    }
  }

  tet_vertex_.assign(n, {});
  tet_edge_.assign(n, {});
  tet_edge_sign_.assign(n, {});
  tet_face_.assign(n, {});

  std::vector<int> root_class(4 * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < 4; ++v) {
      const int root = vertices.find(4 * i + v).first;
      if (root_class[root] < 0) {
        root_class[root] = static_cast<int>(vertex_slots_.size());
        vertex_slots_.emplace_back();
      }
      tet_vertex_[i][v] = root_class[root];
      vertex_slots_[root_class[root]].push_back({i, v});
    }
  }

  std::vector<int> edge_class(6 * n, -1);
  std::vector<int> edge_rep_parity(6 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int e = 0; e < 6; ++e) {
      const auto [root, parity] = edges.find(6 * i + e);
      if (edge_class[root] < 0) {
        edge_class[root] = static_cast<int>(edge_slots_.size());
        edge_rep_parity[root] = parity;
        edge_slots_.emplace_back();
      }
      tet_edge_[i][e] = edge_class[root];
      tet_edge_sign_[i][e] = (parity == edge_rep_parity[root]) ? 1 : -1;
      edge_slots_[edge_class[root]].push_back({i, e});
    }
  }

  for (int i = 0; i < n; ++i) tet_face_[i].fill(-1);
  for (int i = 0; i < n; ++i) {
    for (int f = 0; f < 4; ++f) {
      if (tet_face_[i][f] >= 0) continue;
      const int id = static_cast<int>(face_slots_.size());
      face_slots_.push_back({FaceSlot{i, f}});
      tet_face_[i][f] = id;
      if (const auto& g = tri_.gluing(i, f)) {
        face_slots_.back().push_back(FaceSlot{g->tet, g->perm[f]});
        tet_face_[g->tet][g->perm[f]] = id;
      }
    }
  }

  boundary_edge_.assign(edge_slots_.size(), 0);
  for (const auto& slots : face_slots_) {
    if (slots.size() != 1) continue;
    const auto fv = face_vertices(slots[0].face);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) boundary_edge_[tet_edge_[slots[0].tet][edge_index(fv[a], fv[b])]] = 1;
  }
}

std::array<int, 2> Skeleton::edge_endpoints(int edge) const {
  const auto& rep = edge_slots_[edge].front();
  const auto& ev = kEdgeVertex[rep.edge];
  return {tet_vertex_[rep.tet][ev[0]], tet_vertex_[rep.tet][ev[1]]};
}

std::array<int, 3> Skeleton::face_edges(int face) const {
  const auto& rep = face_slots_[face].front();
  const auto fv = face_vertices(rep.face);
  return {tet_edge_[rep.tet][edge_index(fv[0], fv[1])], tet_edge_[rep.tet][edge_index(fv[0], fv[2])],
          tet_edge_[rep.tet][edge_index(fv[1], fv[2])]};
}

int Skeleton::min_degree() const {
  int best = 0;
  for (std::size_t e = 0; e < edge_slots_.size(); ++e) {
    const int d = static_cast<int>(edge_slots_[e].size());
    if (e == 0 || d < best) best = d;
  }
  return best;
}

bool Skeleton::all_degrees_even() const {
  return std::all_of(edge_slots_.begin(), edge_slots_.end(), [](const auto& s) { return s.size() % 2 == 0; });
}

std::map<int, int> Skeleton::degree_histogram() const {
  std::map<int, int> hist;
  for (const auto& slots : edge_slots_) ++hist[static_cast<int>(slots.size())];
  return hist;
}

Skeleton compute_skeleton(const Triangulation& t) { return Skeleton(t); }

} // namespace z2tri
