#include "z2tri/flips.hpp"

#include <algorithm>
#include <set>
#include <optional>

#include "z2tri/lst.hpp"

namespace z2tri {

FlipSite flip_site(const Skeleton& s, int edge) {
  if (edge < 0 || edge >= s.num_edges())
    throw Error(ErrorKind::InvalidSite, "edge " + std::to_string(edge) + " does not exist");
  if (s.degree(edge) != 4)
    throw Error(ErrorKind::InvalidSite, "edge " + std::to_string(edge) + " has degree " + std::to_string(s.degree(edge)));
  const auto& t = s.triangulation();
  const auto start = s.edge_slots(edge).front();
  const int a = kEdgeVertex[start.edge][0], b = kEdgeVertex[start.edge][1];
  std::array<int, 2> cd{};
  int n = 0;
  for (int v = 0; v < 4; ++v)
    if (v != a && v != b) cd[n++] = v;

  FlipSite site;
  site.edge = edge;
  int tet = start.tet;
  Perm4 v(a, b, cd[0], cd[1]);
  constexpr Perm4 swap23(0, 1, 3, 2);
  for (int i = 0; i < 4; ++i) {
    site.tets[i] = tet;
    site.embed[i] = v;
    const auto& g = t.gluing(tet, v[2]);
    if (!g) throw Error(ErrorKind::InvalidSite, "edge " + std::to_string(edge) + " lies on the boundary");
    tet = g->tet;
    v = g->perm * v * swap23;
  }
  if (tet != site.tets[0] || v != site.embed[0])
    throw Error(ErrorKind::InvalidSite, "walk around edge " + std::to_string(edge) + " does not close up");
  std::set<int> distinct(site.tets.begin(), site.tets.end());
  if (distinct.size() != 4)
    throw Error(ErrorKind::InvalidSite, "edge " + std::to_string(edge) + " meets a tetrahedron more than once");
  return site;
}

std::vector<FlipSite> flippable_edges(const Skeleton& s) {
  std::vector<FlipSite> out;
  for (int e = 0; e < s.num_edges(); ++e) {
    if (s.degree(e) != 4) continue;
    try {
      out.push_back(flip_site(s, e));
    } catch (const Error&) {
    }
  }
  return out;
}

namespace {

// Octahedron vertex names: the edge ends N, S and the equator W0..W3.
constexpr int kN = 0, kS = 1;
constexpr int W(int i) { return 2 + ((i % 4) + 4) % 4; }

struct Octahedron {
  std::array<std::array<int, 4>, 4> old_names{}; // [tet][local vertex] -> name
  std::array<std::array<int, 4>, 4> new_names{};

  Octahedron(const FlipSite& site, int axis) {
    for (int i = 0; i < 4; ++i) {
      const auto& v = site.embed[i];
      old_names[i][v[0]] = kN;
      old_names[i][v[1]] = kS;
      old_names[i][v[2]] = W(i);
      old_names[i][v[3]] = W(i + 1);
    }
    const std::array<int, 4> cycle{kN, W(axis + 1), kS, W(axis + 3)};
    for (int m = 0; m < 4; ++m) new_names[m] = {W(axis), W(axis + 2), cycle[m], cycle[(m + 1) % 4]};
  }

  static int local_of(const std::array<int, 4>& names, int name) {
    for (int x = 0; x < 4; ++x)
      if (names[x] == name) return x;
    return -1;
  }

  // (tet, face) whose three vertices carry exactly `names`.
  static std::pair<int, int> find_face(const std::array<std::array<int, 4>, 4>& table, std::array<int, 3> names) {
    std::sort(names.begin(), names.end());
    for (int i = 0; i < 4; ++i)
      for (int f = 0; f < 4; ++f) {
        std::array<int, 3> got{};
        int n = 0;
        for (int x = 0; x < 4; ++x)
          if (x != f) got[n++] = table[i][x];
        std::sort(got.begin(), got.end());
        if (got == names) return {i, f};
      }
    return {-1, -1};
  }
};

int site_index(const FlipSite& site, int tet) {
  for (int i = 0; i < 4; ++i)
    if (site.tets[i] == tet) return i;
  return -1;
}

void check_site(const Triangulation& t, const FlipSite& site, int axis) {
  if (axis != 0 && axis != 1) throw Error(ErrorKind::InvalidSite, "axis must be 0 or 1");
  for (int i = 0; i < 4; ++i) {
    if (site.tets[i] < 0 || site.tets[i] >= static_cast<int>(t.size()))
      throw Error(ErrorKind::InvalidSite, "site tetrahedron out of range");
    const auto& g = t.gluing(site.tets[i], site.embed[i][2]);
    constexpr Perm4 swap23(0, 1, 3, 2);
    if (!g || g->tet != site.tets[(i + 1) % 4] || g->perm * site.embed[i] * swap23 != site.embed[(i + 1) % 4])
      throw Error(ErrorKind::InvalidSite, "site does not match the triangulation");
  }
}

} // namespace

Triangulation edge_flip(const Triangulation& t, const FlipSite& site, int axis) {
  check_site(t, site, axis);
  const Octahedron oct(site, axis);
  Triangulation out = t;
  for (int i = 0; i < 4; ++i)
    for (int f = 0; f < 4; ++f) out.unjoin(site.tets[i], f);

  for (int m = 0; m < 4; ++m) out.join(site.tets[m], 2, site.tets[(m + 1) % 4], Perm4(0, 1, 3, 2));

  for (int m = 0; m < 4; ++m) {
    for (int face = 0; face < 2; ++face) {
      if (out.gluing(site.tets[m], face)) continue; // attached from the other side already
      std::array<int, 3> names{};
      int n = 0;
      for (int x = 0; x < 4; ++x)
        if (x != face) names[n++] = oct.new_names[m][x];
      const auto [i, old_face] = Octahedron::find_face(oct.old_names, names);
      const auto& g = t.gluing(site.tets[i], old_face);
      if (!g) continue;

      const int k = site_index(site, g->tet);
      std::array<int, 4> img{};
      int target_tet = g->tet;
      int target_m = -1;
      if (k >= 0) {
        std::array<int, 3> far{};
        int c = 0;
        for (int y = 0; y < 4; ++y)
          if (y != old_face) far[c++] = oct.old_names[k][g->perm[y]];
        const auto found = Octahedron::find_face(oct.new_names, far);
        target_m = found.first;
        target_tet = site.tets[target_m];
        img[face] = found.second;
      } else {
        img[face] = g->perm[old_face];
      }
      for (int x = 0; x < 4; ++x) {
        if (x == face) continue;
        const int y = Octahedron::local_of(oct.old_names[i], oct.new_names[m][x]);
        const int z = g->perm[y];
        img[x] = k >= 0 ? Octahedron::local_of(oct.new_names[target_m], oct.old_names[k][z]) : z;
      }
      out.join(site.tets[m], face, target_tet, Perm4(img[0], img[1], img[2], img[3]));
    }
  }
  out.validate();
  return out;
}

namespace {

// Edge class of the input carrying the octahedron edge between two names.
int old_class(const Skeleton& s, const FlipSite& site, const Octahedron& oct, int x, int y) {
  for (int i = 0; i < 4; ++i) {
    const int u = Octahedron::local_of(oct.old_names[i], x);
    const int w = Octahedron::local_of(oct.old_names[i], y);
    if (u >= 0 && w >= 0) return s.edge_of(site.tets[i], edge_index(u, w));
  }
  return -1;
}

} // namespace

std::vector<int> flip_degree_change(const Skeleton& s, const FlipSite& site, int axis) {
  const Octahedron oct(site, axis);
  std::vector<int> delta(static_cast<std::size_t>(s.num_edges()), 0);
  delta[static_cast<std::size_t>(site.edge)] -= 4;
  for (int pole : {kN, kS}) {
    delta[static_cast<std::size_t>(old_class(s, site, oct, pole, W(axis + 1)))] -= 1;
    delta[static_cast<std::size_t>(old_class(s, site, oct, pole, W(axis + 3)))] -= 1;
  }
  for (int i = 0; i < 4; ++i) delta[static_cast<std::size_t>(old_class(s, site, oct, W(i), W(i + 1)))] += 1;
  return delta;
}

Cochain transport_cocycle(const Skeleton& before, const Skeleton& after, const FlipSite& site, int axis,
                          const Cochain& phi) {
  const Octahedron oct(site, axis);
  auto value = [&](int x, int y) { return phi.get(static_cast<std::size_t>(old_class(before, site, oct, x, y))); };
  Cochain out(static_cast<std::size_t>(after.num_edges()));
  for (int e = 0; e < after.num_edges(); ++e) {
    const auto rep = after.edge_slots(e).front();
    const int m = site_index(site, rep.tet);
    bool bit = false;
    if (m < 0) {
      bit = phi.get(static_cast<std::size_t>(before.edge_of(rep.tet, rep.edge)));
    } else {
      const int x = oct.new_names[m][kEdgeVertex[rep.edge][0]];
      const int y = oct.new_names[m][kEdgeVertex[rep.edge][1]];
      const bool is_axis = std::min(x, y) == std::min(W(axis), W(axis + 2)) &&
                           std::max(x, y) == std::max(W(axis), W(axis + 2));
      // The new axis is homotopic to the path through the pole N.
      bit = is_axis ? (value(x, kN) != value(kN, y)) : value(x, y);
    }
    out.set(static_cast<std::size_t>(e), bit);
  }
  return out;
}

int count_ii4(const Triangulation& t, const Skeleton& s, const RankTwoColouring& c) {
  int n = 0;
  for (auto& d : find_maximal_lsts(t)) {
    classify_lst(c, s, d);
    n += d.is_ii4;
  }
  return n;
}

namespace {

int choose_axis(const Skeleton& s, const RankTwoColouring& c, const FlipSite& site, const LstDescriptor& lst) {
  int start = 0;
  for (int i = 0; i < 4; ++i)
    if (std::find(lst.tets.begin(), lst.tets.end(), site.tets[i]) != lst.tets.end()) {
      start = i;
      break;
    }
  std::array<TetType, 4> r{};
  for (int i = 0; i < 4; ++i) r[i] = c.tet_type[static_cast<std::size_t>(site.tets[(start + i) % 4])];
  const bool pattern = r[0] == TetType::II && ((r[1] == TetType::III && r[2] == TetType::III) ||
                                               (r[2] == TetType::III && r[3] == TetType::III));
  if (!pattern) return 0;

  std::set<int> watched;
  for (int tet : site.tets) {
    if (c.tet_type[static_cast<std::size_t>(tet)] != TetType::II) continue;
    for (int le = 0; le < 6; ++le) {
      const int e = s.edge_of(tet, le);
      if (e != site.edge && c.edge_colour[static_cast<std::size_t>(e)] == 0) watched.insert(e);
    }
  }
  std::array<bool, 2> keeps{};
  for (int axis = 0; axis < 2; ++axis) {
    const auto delta = flip_degree_change(s, site, axis);
    keeps[axis] = std::all_of(watched.begin(), watched.end(), [&](int e) { return delta[static_cast<std::size_t>(e)] == 0; });
  }
  return (keeps[1] && !keeps[0]) ? 1 : 0;
}

} // namespace

namespace {

struct SearchState {
  Triangulation tri;
  Subgroup subgroup;
  std::vector<PromotionStep> trace;
};

struct Move {
  FlipSite site;
  int axis = 0;
};

class PromotionSearch {
public:
  explicit PromotionSearch(int max_steps) : max_steps_(max_steps) {}

  // Flips only at the H-even edges of (II,4) layered solid tori, case-table
  // axis first, backtracking out of dead ends.
  std::optional<SearchState> run(const SearchState& state) {
    const Skeleton s(state.tri);
    const auto c = colour_rank2(s, state.subgroup);
    auto lsts = find_maximal_lsts(state.tri);
    std::vector<const LstDescriptor*> ii4;
    for (auto& d : lsts) {
      classify_lst(c, s, d);
      if (d.is_ii4) ii4.push_back(&d);
    }
    if (ii4.empty()) return state;
    if (!seen_.insert(key(state)).second) return std::nullopt;
    for (const auto* d : ii4) {
      FlipSite site;
      try {
        site = flip_site(s, d->h_even_boundary_edge);
      } catch (const Error&) {
        continue;
      }
      const int preferred = choose_axis(s, c, site, *d);
      for (int axis : {preferred, 1 - preferred}) {
        if (budget_spent()) return std::nullopt;
        auto found = run(apply(state, s, {site, axis}));
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  bool exhausted() const { return flips_ >= max_steps_; }
  int flips() const { return flips_; }

private:
  bool budget_spent() {
    if (flips_ >= max_steps_) return true;
    ++flips_;
    return false;
  }

  static std::string key(const SearchState& st) {
    return serialize(st.tri) + st.subgroup.phi[0].str() + "/" + st.subgroup.phi[1].str();
  }

  static SearchState apply(const SearchState& state, const Skeleton& s, const Move& m) {
    SearchState next{edge_flip(state.tri, m.site, m.axis), {}, state.trace};
    const Skeleton s_next(next.tri);
    next.subgroup = make_subgroup(transport_cocycle(s, s_next, m.site, m.axis, state.subgroup.phi[0]),
                                  transport_cocycle(s, s_next, m.site, m.axis, state.subgroup.phi[1]));
    const auto c_next = colour_rank2(s_next, next.subgroup);
    PromotionStep step;
    step.edge = m.site.edge;
    step.axis = m.axis;
    step.ii4_count = count_ii4(next.tri, s_next, c_next);
    step.type_iv_count = static_cast<int>(std::count(c_next.tet_type.begin(), c_next.tet_type.end(), TetType::IV));
    next.trace.push_back(step);
    return next;
  }

  int max_steps_;
  int flips_ = 0;
  std::set<std::string> seen_;
};

} // namespace

PromotionResult promote_to_ii4_free(const Triangulation& t, const Subgroup& h, int max_steps) {
  PromotionSearch search(max_steps);
  const SearchState start{t, h, {}};
  const auto found = search.run(start);
  if (found) return {found->tri, found->subgroup, found->trace};
  if (search.exhausted())
    throw Error(ErrorKind::StepLimitExceeded,
                "no (II,4)-free triangulation within " + std::to_string(max_steps) + " flips");
  throw Error(ErrorKind::PromotionBlocked,
              "every (II,4) flip sequence dead-ends at a (II,4) layered solid torus without a flippable "
              "H-even edge (" + std::to_string(search.flips()) + " flips tried)");
}

} // namespace z2tri
