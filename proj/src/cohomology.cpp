#include "z2tri/cohomology.hpp"

#include <string>

namespace z2tri {

namespace {

Gf2Matrix face_relations(const Skeleton& s) {
  Gf2Matrix m(static_cast<std::size_t>(s.num_edges()));
  for (int f = 0; f < s.num_faces(); ++f) {
    BitVector row(static_cast<std::size_t>(s.num_edges()));
    for (int e : s.face_edges(f)) row.flip(static_cast<std::size_t>(e));
    m.add_row(std::move(row));
  }
  return m;
}

} // namespace

bool is_cocycle(const Skeleton& s, const Cochain& phi) {
  if (phi.size() != static_cast<std::size_t>(s.num_edges())) return false;
  for (int f = 0; f < s.num_faces(); ++f) {
    int sum = 0;
    for (int e : s.face_edges(f)) sum ^= phi.get(static_cast<std::size_t>(e));
    if (sum) return false;
  }
  return true;
}

std::vector<Cochain> cocycle_space(const Skeleton& s) { return face_relations(s).nullspace(); }

Cochain vertex_coboundary(const Skeleton& s, int vertex) {
  Cochain out(static_cast<std::size_t>(s.num_edges()));
  for (int e = 0; e < s.num_edges(); ++e) {
    const auto ends = s.edge_endpoints(e);
    const int hits = (ends[0] == vertex) + (ends[1] == vertex);
    if (hits % 2) out.set(static_cast<std::size_t>(e));
  }
  return out;
}

std::vector<Cochain> coboundary_space(const Skeleton& s) {
  Gf2Span span(static_cast<std::size_t>(s.num_edges()));
  std::vector<Cochain> basis;
  for (int v = 0; v < s.num_vertices(); ++v) {
    Cochain d = vertex_coboundary(s, v);
    if (span.insert(d)) basis.push_back(std::move(d));
  }
  return basis;
}

Cochain CohomologyBasis::combination(unsigned long mask) const {
  Cochain out(static_cast<std::size_t>(num_edges));
  for (std::size_t i = 0; i < classes.size(); ++i)
    if ((mask >> i) & 1ul) out ^= classes[i];
  return out;
}

CohomologyBasis h1_z2(const Skeleton& s) {
  CohomologyBasis out;
  out.num_edges = s.num_edges();
  Gf2Span span(static_cast<std::size_t>(s.num_edges()));
  for (const auto& b : coboundary_space(s)) span.insert(b);
  for (auto& z : cocycle_space(s))
    if (span.insert(z)) out.classes.push_back(std::move(z));
  return out;
}

Subgroup make_subgroup(const Cochain& phi1, const Cochain& phi2) { return Subgroup{{phi1, phi2, phi1 ^ phi2}}; }

std::vector<Subgroup> enumerate_rank2_subgroups(const CohomologyBasis& b) {
  const int r = b.rank();
  if (r < 2) throw Error(ErrorKind::RankTooLow, "H^1 has rank " + std::to_string(r));
  if (r >= 24) throw Error(ErrorKind::BadParameter, "rank " + std::to_string(r) + " is too large to enumerate");
  const unsigned long top = 1ul << r;
  std::vector<Subgroup> out;
  for (unsigned long a = 1; a < top; ++a)
    for (unsigned long c = a + 1; c < top; ++c)
      if ((a ^ c) > c) out.push_back(make_subgroup(b.combination(a), b.combination(c)));
  return out;
}

} // namespace z2tri
