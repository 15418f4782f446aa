#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "corpus.hpp"
#include "oracles.hpp"
#include "z2tri/generators.hpp"
#include "z2tri/lst.hpp"

using namespace z2tri;

namespace {

std::vector<std::vector<int>> sequences_up_to(int length) {
  std::vector<std::vector<int>> out{{}};
  for (std::size_t start = 0; start < out.size(); ++start) {
    if (static_cast<int>(out[start].size()) == length) continue;
    for (int x = 0; x < 3; ++x) {
      auto next = out[start];
      next.push_back(x);
      out.push_back(next);
    }
  }
  return out;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("core table matches an exhaustive search") {
  std::set<std::pair<int, std::string>> found;
  for (int f = 0; f < 4; ++f)
    for (const auto& p : all_perms()) {
      if (p[f] <= f) continue;
      Triangulation t(1);
      t.join(0, f, 0, p);
      oracle::Cells cells;
      try {
        cells = oracle::count_cells(t);
        Skeleton s(t);
      } catch (const std::exception&) {
        continue;
      }
      if (cells.vertices != 1 || cells.edges != 3 || !oracle::brute_force_orientable(t)) continue;
      // A solid torus: free first homology of rank one.
      if (oracle::h1_integer(t) != std::vector<long long>{0}) continue;
      found.insert({f, p.str()});
    }
  std::set<std::pair<int, std::string>> table;
  for (const auto& [f, p] : lst_core_table()) table.insert({f, p.str()});
  CHECK(found == table);
  CHECK(table.size() == 12);
}

TEST_CASE("one-tetrahedron cores") {
  const auto one = layered_solid_torus({});
  CHECK(find_lst_cores(one.tri) == std::vector<int>{0});
  const auto d = grow_to_maximal(one.tri, 0);
  CHECK(d.tets == std::vector<int>{0});
  CHECK(d.interior.empty());
  CHECK(d.boundary[0].lst_degree == 1);
  CHECK(d.boundary[1].lst_degree == 2);
  CHECK(d.boundary[2].lst_degree == 3);
  CHECK(d.univalent_edge == d.boundary[0].edge);
  for (int k = 2; k <= 20; ++k) CHECK(find_lst_cores(twisted_layered_loop(k)).empty());
  CHECK_THROWS_AS(grow_to_maximal(twisted_layered_loop(4), 0), Error);
}

TEST_CASE("generated layered solid tori recognise themselves") {
  int checked = 0;
  for (const auto& seq : sequences_up_to(7)) {
    const auto g = layered_solid_torus(seq);
    const auto lsts = find_maximal_lsts(g.tri);
    const int n = static_cast<int>(seq.size()) + 1;
    INFO("length " << seq.size());
    REQUIRE(lsts.size() == 1);
    const auto& d = lsts.front();
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    CHECK(sorted(d.tets) == all);
    CHECK(d.tets.front() == 0);
    CHECK(static_cast<int>(d.layering_edges.size()) == n - 1);
    CHECK(static_cast<int>(d.interior.size()) == n - 1);

    std::vector<int> boundary, interior;
    for (const auto& b : d.boundary) {
      boundary.push_back(b.lst_degree);
      CHECK(b.lst_degree == b.degree);
    }
    for (const auto& x : d.interior) interior.push_back(x.lst_degree);
    CHECK(boundary == g.boundary_degrees);
    CHECK(sorted(interior) == g.interior_degrees);
    CHECK(d.boundary[0].lst_degree == 1);
    CHECK(d.univalent_edge == d.boundary[0].edge);
    ++checked;
  }
  CHECK(checked == 3280);
}

TEST_CASE("embedded layered solid tori keep their tetrahedra") {
  // Glue the boundary of a generated torus to a free tetrahedron along two
  // faces that do not form a layering (the tetrahedron's faces go to itself).
  for (const auto& seq : sequences_up_to(4)) {
    const auto g = layered_solid_torus(seq);
    Triangulation t = g.tri;
    std::vector<FaceSlot> boundary;
    for (int i = 0; i < static_cast<int>(t.size()); ++i)
      for (int f = 0; f < 4; ++f)
        if (t.is_boundary(i, f)) boundary.push_back({i, f});
    REQUIRE(boundary.size() == 2);
    const int extra = t.add_tetrahedron();
    const int other = t.add_tetrahedron();
    t.join(extra, 1, other, Perm4());
    bool glued = false;
    for (const auto& p : all_perms()) {
      if (p[boundary[0].face] != 0) continue;
      for (const auto& q : all_perms()) {
        if (q[boundary[1].face] != 0) continue;
        Triangulation u = t;
        u.join(boundary[0].tet, boundary[0].face, extra, p);
        u.join(boundary[1].tet, boundary[1].face, other, q);
        try {
          Skeleton check(u);
        } catch (const Error&) {
          continue;
        }
        t = u;
        glued = true;
        break;
      }
      if (glued) break;
    }
    REQUIRE(glued);
    const int n = static_cast<int>(seq.size()) + 1;
    std::vector<int> expect(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) expect[static_cast<std::size_t>(i)] = i;
    const auto lsts = find_maximal_lsts(t);
    REQUIRE(lsts.size() == 1);
    CHECK(sorted(lsts.front().tets) == expect);
  }
}

TEST_CASE("degree-three bases") {
  // Layering on the degree-2 edge of the core makes it an interior degree-3
  // edge; the old degree-1 edge grows to degree 3 on the boundary.
  const auto g = layered_solid_torus({1});
  const auto bases = find_degree3_bases(g.tri);
  const auto threes = std::count(g.boundary_degrees.begin(), g.boundary_degrees.end(), 3) +
                      std::count(g.interior_degrees.begin(), g.interior_degrees.end(), 3);
  CHECK(threes == 2);
  CHECK(static_cast<long>(bases.size()) == threes);
  for (const auto& b : bases) {
    CHECK(b.lst == 0);
    CHECK(Skeleton(g.tri).degree(b.edge) == 3);
  }
  for (int k = 2; k <= 12; k += 2) CHECK(find_degree3_bases(twisted_layered_loop(k)).empty());

  for (const auto& e : corpus::census()) {
    const Skeleton s(e.tri);
    const auto lsts = find_maximal_lsts(e.tri);
    for (const auto& b : find_degree3_bases(s, lsts)) {
      CHECK(s.degree(b.edge) == 3);
      const auto& d = lsts.at(static_cast<std::size_t>(b.lst));
      bool inside = false;
      for (const auto& x : d.boundary) inside |= x.edge == b.edge;
      for (const auto& x : d.interior) inside |= x.edge == b.edge;
      CHECK(inside);
    }
  }
}

TEST_CASE("maximal layered solid tori over the census") {
  int total = 0;
  for (const auto& e : corpus::all()) {
    const Skeleton s(e.tri);
    const auto lsts = find_maximal_lsts(e.tri);
    for (std::size_t a = 0; a < lsts.size(); ++a) {
      const auto& d = lsts[a];
      ++total;
      CHECK(static_cast<int>(d.interior.size()) == static_cast<int>(d.tets.size()) - 1);
      int degree_sum = 0;
      for (const auto& b : d.boundary) degree_sum += b.lst_degree;
      for (const auto& x : d.interior) {
        degree_sum += x.lst_degree;
        // Interior edges are surrounded by the torus.
        CHECK(x.lst_degree == x.degree);
      }
      CHECK(degree_sum == 6 * static_cast<int>(d.tets.size()));
      for (std::size_t b = 0; b < lsts.size(); ++b) {
        if (a == b) continue;
        const auto ta = sorted(d.tets), tb = sorted(lsts[b].tets);
        CHECK_FALSE(std::includes(tb.begin(), tb.end(), ta.begin(), ta.end()));
      }
      if (a > 0) CHECK(*std::min_element(lsts[a - 1].tets.begin(), lsts[a - 1].tets.end()) <=
                       *std::min_element(d.tets.begin(), d.tets.end()));
    }
  }
  CHECK(total > 50);
}

TEST_CASE("layered solid tori are homogeneous under every rank-2 colouring") {
  int type_ii = 0, type_iv = 0;
  for (const auto& e : corpus::all()) {
    const Skeleton s(e.tri);
    if (s.num_vertices() != 1 || h1_z2(s).rank() < 2) continue;
    auto lsts = find_maximal_lsts(e.tri);
    for (const auto& h : enumerate_rank2_subgroups(h1_z2(s))) {
      const auto c = colour_rank2(s, h);
      for (auto& d : lsts) {
        INFO(e.name);
        TetType type{};
        REQUIRE_NOTHROW(type = classify_lst(c, s, d));
        std::vector<int> colours;
        for (const auto& b : d.boundary) colours.push_back(c.edge_colour[static_cast<std::size_t>(b.edge)]);
        const auto even = std::count(colours.begin(), colours.end(), 0);
        if (type == TetType::IV) {
          ++type_iv;
          CHECK(even == 3);
          for (const auto& x : d.interior) CHECK(c.edge_colour[static_cast<std::size_t>(x.edge)] == 0);
          CHECK_FALSE(d.is_ii4);
        } else {
          ++type_ii;
          CHECK(even == 1);
          REQUIRE(d.h_even_boundary_edge >= 0);
          CHECK(c.edge_colour[static_cast<std::size_t>(d.h_even_boundary_edge)] == 0);
          CHECK(d.is_ii4 == (s.degree(d.h_even_boundary_edge) == 4 && d.tets.size() >= 2));
          CHECK(d.is_core_ii4 == (s.degree(d.h_even_boundary_edge) == 4 && d.tets.size() == 1));
          // The H-even edge of a single core is its degree-2 edge.
          if (d.tets.size() == 1) CHECK(d.boundary[1].edge == d.h_even_boundary_edge);
          else if (d.is_ii4) CHECK(d.h_even_boundary_edge == d.univalent_edge);
        }
      }
    }
  }
  MESSAGE("type II " << type_ii << ", type IV " << type_iv);
  CHECK(type_ii > 0);
}
