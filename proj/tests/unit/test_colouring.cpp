#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "z2tri/colouring.hpp"
#include "z2tri/generators.hpp"
#include "z2tri/normal_surfaces.hpp"

using namespace z2tri;

namespace {

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::BadParameter;
}

// Reference type of a tetrahedron from its six local edge colours, by matching
// one canonical pattern per type under every vertex relabelling and every
// injective renaming of the symbolic colours X, Y, Z.
TetType reference_type(const std::array<int, 6>& colour) {
  // Symbolic colours: 0 stays 0, 1..3 are X, Y, Z. Indexed by local edge.
  const std::pair<TetType, std::array<int, 6>> patterns[] = {
      {TetType::IV, {0, 0, 0, 0, 0, 0}}, {TetType::II, {0, 1, 1, 1, 1, 0}},
      {TetType::III, {1, 1, 1, 0, 0, 0}}, {TetType::I, {0, 2, 3, 2, 3, 1}},
      {TetType::V, {1, 2, 3, 3, 2, 1}},
  };
  for (const auto& [type, pat] : patterns)
    for (const auto& sigma : all_perms())
      for (const auto& rename : all_perms()) {
        if (rename[0] != 0) continue;
        bool ok = true;
        for (int e = 0; e < 6 && ok; ++e) {
          const int img = edge_index(sigma[kEdgeVertex[e][0]], sigma[kEdgeVertex[e][1]]);
          ok = colour[img] == rename[pat[e]];
        }
        if (ok) return type;
      }
  FAIL("no reference type");
  return TetType::IV;
}

std::vector<corpus::Entry> rank2_inputs() {
  std::vector<corpus::Entry> out;
  for (auto& e : corpus::all()) {
    const Skeleton s(e.tri);
    if (s.num_vertices() == 1 && h1_z2(s).rank() >= 2) out.push_back(std::move(e));
  }
  return out;
}

} // namespace

TEST_CASE("rank-1 colouring of the four-layer loop") {
  const auto t = twisted_layered_loop(4);
  const Skeleton s(t);
  const auto h = explicit_duals(t, 4);
  const auto c = colour_rank1(s, h.phi[0]);
  for (int type : c.tet_type) CHECK(type == 1);
  // The quad in each layer is dual to t: the even pair contains local edge {0,2}.
  for (int i = 0; i < 4; ++i) CHECK(c.tet_locus[i] == 1);
}

TEST_CASE("rank-1 colouring classifies every tetrahedron of every cocycle") {
  std::mt19937 rng(3);
  int tets = 0;
  for (const auto& e : corpus::all()) {
    const Skeleton s(e.tri);
    if (s.num_vertices() != 1) continue;
    const auto b = h1_z2(s);
    for (unsigned long mask = 1; mask < (1ul << b.rank()); ++mask) {
      const auto phi = b.combination(mask);
      const auto c = colour_rank1(s, phi);
      for (int i = 0; i < s.num_tets(); ++i, ++tets) {
        int odd = 0;
        for (int le = 0; le < 6; ++le) odd += phi.get(s.edge_of(i, le));
        const int type = c.tet_type[i];
        if (type == 3) CHECK(odd == 0);
        if (type == 2) {
          CHECK(odd == 3);
          for (int le = 0; le < 6; ++le) {
            const bool at = kEdgeVertex[le][0] == c.tet_locus[i] || kEdgeVertex[le][1] == c.tet_locus[i];
            CHECK(phi.get(s.edge_of(i, le)) == at);
          }
        }
        if (type == 1) {
          CHECK(odd == 4);
          CHECK_FALSE(phi.get(s.edge_of(i, c.tet_locus[i])));
          CHECK_FALSE(phi.get(s.edge_of(i, 5 - c.tet_locus[i])));
        }
      }
    }
  }
  CHECK(tets > 0);
}

TEST_CASE("rank-1 preconditions") {
  const Skeleton loop(twisted_layered_loop(4));
  CHECK(error_of([&] { colour_rank1(loop, Cochain(loop.num_edges())); }) == ErrorKind::ZeroClass);
  Cochain bad(loop.num_edges());
  bad.set(0);
  CHECK(error_of([&] { colour_rank1(loop, bad); }) == ErrorKind::NotACocycle);
  for (const auto& e : corpus::census()) {
    const Skeleton s(e.tri);
    if (s.num_vertices() == 1) continue;
    Cochain phi(s.num_edges());
    phi.set(0);
    CHECK(error_of([&] { colour_rank1(s, phi); }) == ErrorKind::NotOneVertex);
  }
}

TEST_CASE("twisted loops are entirely type V") {
  for (int k = 2; k <= 20; k += 2) {
    const auto t = twisted_layered_loop(k);
    const Skeleton s(t);
    const auto c = colour_rank2(s, explicit_duals(t, k), check_closed_orientable(t));
    int plus = 0, minus = 0;
    for (int i = 0; i < k; ++i) {
      CHECK(c.tet_type[i] == TetType::V);
      plus += c.sub_type[i].chirality == 1;
      minus += c.sub_type[i].chirality == -1;
    }
    CHECK(plus == k / 2);
    CHECK(minus == k / 2);
    // Chirality alternates with the layer parity.
    for (int i = 0; i + 1 < k; ++i) CHECK(c.sub_type[i].chirality == -c.sub_type[i + 1].chirality);
    // Without an orientation the two sub-types are not told apart.
    for (const auto& sub : colour_rank2(s, explicit_duals(t, k)).sub_type) CHECK(sub.chirality == 0);

    const auto tc = counts(c, s);
    CHECK(tc.A == 0);
    CHECK(tc.B == 0);
    CHECK(tc.C == 0);
    CHECK(tc.D == 0);
    CHECK(tc.E == k);
    CHECK(tc.even_edges == 0);
    CHECK(tc.even_degree_sum == 0);
  }
}

TEST_CASE("rank-2 preconditions") {
  const auto t = twisted_layered_loop(4);
  const Skeleton s(t);
  const auto h = explicit_duals(t, 4);
  CHECK(error_of([&] { colour_rank2(s, make_subgroup(h.phi[0], h.phi[0])); }) == ErrorKind::RankTooLow);
  CHECK(error_of([&] { colour_rank2(s, make_subgroup(h.phi[0], Cochain(s.num_edges()))); }) == ErrorKind::RankTooLow);
  Cochain bad(s.num_edges());
  bad.set(0);
  CHECK(error_of([&] { colour_rank2(s, make_subgroup(h.phi[0], bad)); }) == ErrorKind::NotACocycle);
}

TEST_CASE("rank-2 types agree with the pattern oracle") {
  std::map<TetType, int> tally;
  for (const auto& e : rank2_inputs()) {
    const Skeleton s(e.tri);
    const auto orientation = check_closed_orientable(e.tri);
    for (const auto& h : enumerate_rank2_subgroups(h1_z2(s))) {
      const auto c = colour_rank2(s, h, orientation);
      for (int i = 0; i < s.num_tets(); ++i) {
        const auto colours = c.local_colours(s, i);
        CHECK(c.tet_type[i] == reference_type(colours));
        ++tally[c.tet_type[i]];
        const auto& sub = c.sub_type[i];
        switch (c.tet_type[i]) {
        case TetType::II:
          CHECK(colours[sub.locus] == 0);
          CHECK(colours[5 - sub.locus] == 0);
          break;
        case TetType::III:
          for (int le = 0; le < 6; ++le) {
            const bool at = kEdgeVertex[le][0] == sub.locus || kEdgeVertex[le][1] == sub.locus;
            CHECK(colours[le] == (at ? sub.colour : 0));
          }
          break;
        case TetType::I:
          CHECK(colours[sub.locus] == 0);
          CHECK(colours[5 - sub.locus] == sub.colour);
          break;
        case TetType::V: CHECK(sub.chirality != 0); break;
        case TetType::IV: break;
        }
      }
      const auto tc = counts(c, s);
      CHECK(tc.A + tc.B + tc.C + tc.D + tc.E == tc.T);
      int hist_sum = 0, hist_weighted = 0;
      for (auto [d, n] : tc.even_degree_histogram) {
        hist_sum += n;
        hist_weighted += d * n;
      }
      CHECK(hist_sum == tc.even_edges);
      CHECK(hist_weighted == tc.even_degree_sum);
    }
  }
  MESSAGE("type tally I..V: " << tally[TetType::I] << " " << tally[TetType::II] << " " << tally[TetType::III] << " "
                              << tally[TetType::IV] << " " << tally[TetType::V]);
  CHECK(tally.size() >= 4);
}

TEST_CASE("counting identities hold on every coloured input") {
  int checked = 0, degree_three_checked = 0;
  for (const auto& e : rank2_inputs()) {
    const Skeleton s(e.tri);
    for (const auto& h : enumerate_rank2_subgroups(h1_z2(s))) {
      const auto c = colour_rank2(s, h);
      std::array<int, 3> chi{};
      for (int i = 0; i < 3; ++i) chi[i] = canonical_dual_surface(s, h.phi[i]).complex.euler();
      const auto r = verify_identities(counts(c, s), chi);
      INFO(e.name);
      CHECK(r.edge_count.verdict == Verdict::Holds);
      CHECK(r.degree_sum.verdict == Verdict::Holds);
      CHECK(r.degree_sum_chi.verdict == Verdict::Holds);
      CHECK(r.c_even.verdict == Verdict::Holds);
      CHECK(r.e_even.verdict == Verdict::Holds);
      if (s.min_degree() >= 3) {
        CHECK(r.degree_three.verdict == Verdict::Holds);
        ++degree_three_checked;
      } else {
        CHECK(r.degree_three.verdict == Verdict::NotApplicable);
      }
      CHECK(r.all_hold());
      CHECK((chi[0] + chi[1] + chi[2]) % 2 == 0);
      ++checked;
    }
  }
  CHECK(checked > 100);
  CHECK(degree_three_checked > 0);
}

TEST_CASE("identity arithmetic on the loop family") {
  for (int k = 2; k <= 40; k += 2) {
    TetTypeCounts tc;
    tc.T = tc.E = k;
    tc.min_degree = 4;
    const auto r = verify_identities(tc, {0, (2 - k) / 2, (2 - k) / 2});
    CHECK(r.edge_count.lhs == -k);
    CHECK(r.edge_count.rhs == -k);
    CHECK(r.all_hold());
  }
  // A mismatched Euler characteristic is reported, not thrown.
  TetTypeCounts tc;
  tc.T = tc.E = 4;
  tc.min_degree = 4;
  const auto r = verify_identities(tc, {0, 0, 0});
  CHECK(r.edge_count.verdict == Verdict::Fails);
  CHECK_FALSE(r.all_hold());
  // Odd C or E is flagged.
  TetTypeCounts odd;
  odd.T = odd.C = 1;
  CHECK(verify_identities(odd, {0, 0, 0}).c_even.verdict == Verdict::Fails);
}

TEST_CASE("rank-1 and rank-2 quad placements agree") {
  for (const auto& e : rank2_inputs()) {
    const Skeleton s(e.tri);
    for (const auto& h : enumerate_rank2_subgroups(h1_z2(s))) {
      const auto c = colour_rank2(s, h);
      for (int i = 0; i < 3; ++i) {
        const auto r1 = colour_rank1(s, h.phi[i]);
        const auto quads = quad_tets_from_rank2(c, i + 1);
        for (int t = 0; t < s.num_tets(); ++t) CHECK((r1.tet_type[t] == 1) == static_cast<bool>(quads[t]));
      }
    }
  }
}
