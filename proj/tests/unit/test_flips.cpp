#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "oracles.hpp"
#include "z2tri/flips.hpp"
#include "z2tri/generators.hpp"
#include "z2tri/lst.hpp"

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

// Four tetrahedra (N, S, W_i, W_{i+1}) around the edge NS, with boundary.
Triangulation octahedron() {
  Triangulation t(4);
  for (int i = 0; i < 4; ++i) t.join(i, 2, (i + 1) % 4, Perm4(0, 1, 3, 2));
  return t;
}

std::vector<corpus::Entry> one_vertex_inputs() {
  std::vector<corpus::Entry> out;
  for (auto& e : corpus::all())
    if (Skeleton(e.tri).num_vertices() == 1) out.push_back(std::move(e));
  return out;
}

std::vector<int> sorted_degrees(const Skeleton& s) {
  std::vector<int> d;
  for (int e = 0; e < s.num_edges(); ++e) d.push_back(s.degree(e));
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST_CASE("octahedron has one flip site") {
  const auto t = octahedron();
  const Skeleton s(t);
  const auto sites = flippable_edges(s);
  REQUIRE(sites.size() == 1);
  CHECK(s.degree(sites[0].edge) == 4);
  for (int axis : {0, 1}) {
    const auto flipped = edge_flip(t, sites[0], axis);
    CHECK(are_isomorphic(flipped, t).has_value());
    const Skeleton fs(flipped);
    CHECK(fs.num_vertices() == 6);
    CHECK(flippable_edges(fs).size() == 1);
  }
}

TEST_CASE("flip preconditions") {
  const auto loop = twisted_layered_loop(4);
  const Skeleton s(loop);
  // The long edge has degree 8.
  for (int e = 0; e < s.num_edges(); ++e)
    if (s.degree(e) != 4) CHECK(error_of([&] { flip_site(s, e); }) == ErrorKind::InvalidSite);
  CHECK(error_of([&] { flip_site(s, -1); }) == ErrorKind::InvalidSite);
  CHECK(error_of([&] { flip_site(s, s.num_edges()); }) == ErrorKind::InvalidSite);

  const auto oct = octahedron();
  const auto site = flippable_edges(Skeleton(oct)).front();
  CHECK(error_of([&] { edge_flip(oct, site, 2); }) == ErrorKind::InvalidSite);
  auto bad = site;
  std::swap(bad.tets[1], bad.tets[2]);
  CHECK(error_of([&] { edge_flip(oct, bad, 0); }) == ErrorKind::InvalidSite);
}

TEST_CASE("flips preserve the manifold data and invert") {
  int flips = 0;
  for (const auto& e : one_vertex_inputs()) {
    const Skeleton s(e.tri);
    const int rank = oracle::h1_z2_rank(e.tri);
    const auto basis = h1_z2(s);
    for (const auto& site : flippable_edges(s)) {
      for (int axis : {0, 1}) {
        INFO(e.name << " edge " << site.edge << " axis " << axis);
        const auto t = edge_flip(e.tri, site, axis);
        const Skeleton fs(t);
        CHECK(t.size() == e.tri.size());
        CHECK(fs.num_vertices() == 1);
        CHECK(orient(t).orientable);
        CHECK(t.is_closed());
        CHECK(oracle::h1_z2_rank(t) == rank);
        ++flips;

        // Degree bookkeeping: every old class moves by its delta, the old
        // axis disappears and a new degree-4 edge appears.
        const auto delta = flip_degree_change(s, site, axis);
        CHECK(delta[static_cast<std::size_t>(site.edge)] == -4);
        std::vector<int> predicted{4};
        for (int x = 0; x < s.num_edges(); ++x)
          if (x != site.edge) predicted.push_back(s.degree(x) + delta[static_cast<std::size_t>(x)]);
        std::sort(predicted.begin(), predicted.end());
        CHECK(predicted == sorted_degrees(fs));

        // The new axis sits on local edge {0,1} of the first site tetrahedron.
        const int new_axis = fs.edge_of(site.tets[0], 0);
        CHECK(fs.degree(new_axis) == 4);
        const auto back = flip_site(fs, new_axis);
        bool restored = false;
        for (int b : {0, 1}) restored |= are_isomorphic(edge_flip(t, back, b), e.tri).has_value();
        CHECK(restored);

        // Transported classes stay cocycles and stay independent.
        Gf2Span span(static_cast<std::size_t>(fs.num_edges()));
        for (const auto& phi : basis.classes) {
          const auto moved = transport_cocycle(s, fs, site, axis, phi);
          CHECK(is_cocycle(fs, moved));
          span.insert(moved);
        }
        CHECK(static_cast<int>(span.dimension()) == basis.rank());
      }
    }
  }
  MESSAGE(flips << " flips checked");
  CHECK(flips > 100);
}

TEST_CASE("transport is compatible with sums") {
  for (const auto& e : one_vertex_inputs()) {
    const Skeleton s(e.tri);
    const auto basis = h1_z2(s);
    if (basis.rank() < 2) continue;
    for (const auto& site : flippable_edges(s)) {
      const auto t = edge_flip(e.tri, site, 0);
      const Skeleton fs(t);
      const auto& a = basis.classes[0];
      const auto& b = basis.classes[1];
      auto sum = a;
      sum ^= b;
      auto moved_sum = transport_cocycle(s, fs, site, 0, a);
      moved_sum ^= transport_cocycle(s, fs, site, 0, b);
      CHECK(transport_cocycle(s, fs, site, 0, sum) == moved_sum);
    }
  }
}

TEST_CASE("promotion removes every (II,4) layered solid torus") {
  int runs = 0, flipped = 0, started_with_ii4 = 0;
  for (const auto& e : one_vertex_inputs()) {
    const Skeleton s(e.tri);
    const auto basis = h1_z2(s);
    if (basis.rank() < 2) continue;
    for (const auto& h : enumerate_rank2_subgroups(basis)) {
      INFO(e.name);
      const int before = count_ii4(e.tri, s, colour_rank2(s, h));
      started_with_ii4 += before > 0;
      const int limit = default_max_steps(static_cast<int>(e.tri.size()));
      PromotionResult r;
      REQUIRE_NOTHROW(r = promote_to_ii4_free(e.tri, h, limit));
      const Skeleton rs(r.tri);
      CHECK(r.tri.size() == e.tri.size());
      CHECK(rs.num_vertices() == 1);
      CHECK(orient(r.tri).orientable);
      CHECK(oracle::h1_z2_rank(r.tri) == basis.rank());
      CHECK(static_cast<int>(r.trace.size()) <= limit);
      if (before == 0) CHECK(r.trace.empty());
      for (const auto& phi : r.subgroup.phi) {
        CHECK(is_cocycle(rs, phi));
        CHECK(phi.any());
      }
      CHECK(r.subgroup.phi[0] != r.subgroup.phi[1]);
      const auto c = colour_rank2(rs, r.subgroup);
      CHECK(count_ii4(r.tri, rs, c) == 0);
      if (!r.trace.empty()) CHECK(r.trace.back().ii4_count == 0);
      flipped += static_cast<int>(r.trace.size());
      ++runs;
    }
  }
  MESSAGE(runs << " promotions, " << started_with_ii4 << " with (II,4) input, " << flipped << " flips");
  CHECK(runs > 50);
}

TEST_CASE("promotion respects the step limit") {
  for (const auto& e : one_vertex_inputs()) {
    const Skeleton s(e.tri);
    const auto basis = h1_z2(s);
    if (basis.rank() < 2) continue;
    for (const auto& h : enumerate_rank2_subgroups(basis)) {
      if (count_ii4(e.tri, s, colour_rank2(s, h)) == 0) continue;
      CHECK(error_of([&] { promote_to_ii4_free(e.tri, h, 0); }) == ErrorKind::StepLimitExceeded);
      return;
    }
  }
  MESSAGE("no (II,4) input in the corpus");
}
