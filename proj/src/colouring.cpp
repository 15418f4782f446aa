#include "z2tri/colouring.hpp"

#include <algorithm>

namespace z2tri {

namespace {

void require_one_vertex(const Skeleton& s) {
  if (s.num_vertices() != 1)
    throw Error(ErrorKind::NotOneVertex, "triangulation has " + std::to_string(s.num_vertices()) + " vertices");
}

void require_cocycle(const Skeleton& s, const Cochain& phi) {
  if (!is_cocycle(s, phi)) throw Error(ErrorKind::NotACocycle, "labelling violates a face relation");
}

// Sign of the permutation p -> colours[p] - 1 of {0,1,2}.
int colour_parity(int c0, int c1, int c2) {
  int inversions = (c0 > c1) + (c0 > c2) + (c1 > c2);
  return inversions % 2 == 0 ? 1 : -1;
}

int vertex_with_edges(const std::array<int, 6>& mark) {
  for (int v = 0; v < 4; ++v) {
    bool ok = true;
    for (int e = 0; e < 6; ++e) {
      const bool at_v = kEdgeVertex[e][0] == v || kEdgeVertex[e][1] == v;
      if (at_v != static_cast<bool>(mark[e])) ok = false;
    }
    if (ok) return v;
  }
  return -1;
}

} // namespace

Rank1Colouring colour_rank1(const Skeleton& s, const Cochain& phi) {
  require_one_vertex(s);
  if (phi.size() != static_cast<std::size_t>(s.num_edges())) throw Error(ErrorKind::BadParameter, "cochain size");
  if (phi.none()) throw Error(ErrorKind::ZeroClass, "phi is zero");
  require_cocycle(s, phi);

  Rank1Colouring out;
  out.phi = phi;
  for (int i = 0; i < s.num_tets(); ++i) {
    std::array<int, 6> odd{};
    int n_odd = 0;
    for (int e = 0; e < 6; ++e) {
      odd[e] = phi.get(static_cast<std::size_t>(s.edge_of(i, e)));
      n_odd += odd[e];
    }
    int type = 0, locus = -1;
    if (n_odd == 0) {
      type = 3;
    } else if (n_odd == 3 && (locus = vertex_with_edges(odd)) >= 0) {
      type = 2;
    } else if (n_odd == 4) {
      for (int p = 0; p < 3; ++p)
        if (!odd[p] && !odd[5 - p]) locus = p;
      if (locus >= 0) type = 1;
    }
    if (type == 0)
      throw Error(ErrorKind::NotACocycle, "tetrahedron " + std::to_string(i) + " has no rank-1 type");
    out.tet_type.push_back(type);
    out.tet_locus.push_back(locus);
  }
  return out;
}

std::string to_string(TetType t) {
  switch (t) {
  case TetType::I: return "I";
  case TetType::II: return "II";
  case TetType::III: return "III";
  case TetType::IV: return "IV";
  case TetType::V: return "V";
  }
  return "?";
}

std::array<int, 6> RankTwoColouring::local_colours(const Skeleton& s, int tet) const {
  std::array<int, 6> c{};
  for (int e = 0; e < 6; ++e) c[e] = edge_colour[static_cast<std::size_t>(s.edge_of(tet, e))];
  return c;
}

RankTwoColouring colour_rank2(const Skeleton& s, const Subgroup& h,
                              const std::optional<OrientationAssignment>& orientation) {
  require_one_vertex(s);
  const auto n = static_cast<std::size_t>(s.num_edges());
  for (const auto& phi : h.phi)
    if (phi.size() != n) throw Error(ErrorKind::BadParameter, "cochain size does not match the edge count");
  if ((h.phi[0] ^ h.phi[1]) != h.phi[2]) throw Error(ErrorKind::BadParameter, "phi3 is not phi1 + phi2");
  if (h.phi[0].none() || h.phi[1].none() || h.phi[2].none())
    throw Error(ErrorKind::RankTooLow, "subgroup classes are not independent");
  require_cocycle(s, h.phi[0]);
  require_cocycle(s, h.phi[1]);

  RankTwoColouring out;
  out.subgroup = h;
  out.edge_colour.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    const bool a = h.phi[0].get(e), b = h.phi[1].get(e);
    out.edge_colour[e] = (!a && !b) ? 0 : !a ? 1 : !b ? 2 : 3;
  }

  for (int i = 0; i < s.num_tets(); ++i) {
    const auto c = out.local_colours(s, i);
    const int zeros = static_cast<int>(std::count(c.begin(), c.end(), 0));
    std::optional<TetType> type;
    SubType sub;
    if (zeros == 6) {
      type = TetType::IV;
    } else if (zeros == 0) {
      if (c[0] == c[5] && c[1] == c[4] && c[2] == c[3] && c[0] != c[1] && c[0] != c[2] && c[1] != c[2]) {
        type = TetType::V;
        if (orientation) sub.chirality = colour_parity(c[0], c[1], c[2]) * orientation->sign.at(i);
      }
    } else if (zeros == 2) {
      for (int p = 0; p < 3; ++p) {
        if (c[p] != 0 || c[5 - p] != 0) continue;
        const int q = (p + 1) % 3, r = (p + 2) % 3;
        const int i_col = c[q];
        if (c[5 - q] == i_col && c[r] == i_col && c[5 - r] == i_col) {
          type = TetType::II;
          sub.colour = i_col;
          sub.locus = p;
        }
      }
    } else if (zeros == 3) {
      std::array<int, 6> nonzero{};
      for (int e = 0; e < 6; ++e) nonzero[e] = c[e] != 0;
      const int v = vertex_with_edges(nonzero);
      if (v >= 0) {
        int i_col = -1;
        bool same = true;
        for (int e = 0; e < 6; ++e)
          if (nonzero[e]) {
            if (i_col < 0) i_col = c[e];
            same = same && c[e] == i_col;
          }
        if (same) {
          type = TetType::III;
          sub.colour = i_col;
          sub.locus = v;
        }
      }
    } else if (zeros == 1) {
      const int e0 = static_cast<int>(std::find(c.begin(), c.end(), 0) - c.begin());
      const int a = kEdgeVertex[e0][0], b = kEdgeVertex[e0][1];
      const int cd = opposite_edge(e0);
      const int cv = kEdgeVertex[cd][0], dv = kEdgeVertex[cd][1];
      const int j = c[edge_index(cv, a)], k = c[edge_index(dv, a)];
      if (c[edge_index(cv, b)] == j && c[edge_index(dv, b)] == k && j != k && j != c[cd] && k != c[cd]) {
        type = TetType::I;
        sub.colour = c[cd];
        sub.locus = e0;
      }
    }
    if (!type) throw Error(ErrorKind::NotACocycle, "tetrahedron " + std::to_string(i) + " matches no colour type");
    out.tet_type.push_back(*type);
    out.sub_type.push_back(sub);
  }
  return out;
}

std::vector<char> quad_tets_from_rank2(const RankTwoColouring& c, int i) {
  std::vector<char> out(c.tet_type.size(), 0);
  for (std::size_t t = 0; t < c.tet_type.size(); ++t) {
    switch (c.tet_type[t]) {
    case TetType::I: out[t] = c.sub_type[t].colour == i; break;
    case TetType::II: out[t] = c.sub_type[t].colour != i; break;
    case TetType::V: out[t] = 1; break;
    default: break;
    }
  }
  return out;
}

TetTypeCounts counts(const RankTwoColouring& c, const Skeleton& s) {
  TetTypeCounts tc;
  tc.T = s.num_tets();
  for (auto t : c.tet_type) {
    switch (t) {
    case TetType::I: ++tc.A; break;
    case TetType::II: ++tc.B; break;
    case TetType::III: ++tc.C; break;
    case TetType::IV: ++tc.D; break;
    case TetType::V: ++tc.E; break;
    }
  }
  for (int e = 0; e < s.num_edges(); ++e) {
    if (c.edge_colour[static_cast<std::size_t>(e)] != 0) continue;
    ++tc.even_edges;
    tc.even_degree_sum += s.degree(e);
    ++tc.even_degree_histogram[s.degree(e)];
  }
  tc.min_degree = s.min_degree();
  return tc;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

IdentityCheck compare(long lhs, long rhs) { return {lhs == rhs ? Verdict::Holds : Verdict::Fails, lhs, rhs}; }

} // namespace

bool IdentityReport::all_hold() const {
  for (const auto* c : {&edge_count, &degree_sum, &degree_sum_chi, &degree_three, &c_even, &e_even})
    if (c->verdict == Verdict::Fails) return false;
  return true;
}

IdentityReport verify_identities(const TetTypeCounts& tc, const std::array<int, 3>& chi) {
  const long sum_chi = static_cast<long>(chi[0]) + chi[1] + chi[2];
  IdentityReport r;
  r.edge_count = compare(tc.C + 2L * tc.D - tc.E, 2L * tc.even_edges - 2 + sum_chi);
  r.degree_sum = compare(tc.even_degree_sum, tc.A + 2L * tc.B + 3L * tc.C + 6L * tc.D);
  r.degree_sum_chi = compare(tc.even_degree_sum, 2L * tc.T - tc.A - tc.C + 4L * tc.even_edges - 4 + 2 * sum_chi);
  if (tc.min_degree >= 3) {
    long tail = 0;
    for (auto [d, n] : tc.even_degree_histogram)
      if (d >= 5) tail += static_cast<long>(d - 4) * n;
    const auto it = tc.even_degree_histogram.find(3);
    const long e3 = it == tc.even_degree_histogram.end() ? 0 : it->second;
    r.degree_three = compare(e3, 4L + tc.A + tc.C - 2 * (tc.T + sum_chi) + tail);
  }
  r.c_even = compare(tc.C % 2, 0);
  r.e_even = compare(tc.E % 2, 0);
  return r;
}

} // namespace z2tri
