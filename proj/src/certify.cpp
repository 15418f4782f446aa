#include "z2tri/certify.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "z2tri/generators.hpp"

namespace z2tri {

using nlohmann::ordered_json;

TriangulationSummary summarize(const Skeleton& s) {
  TriangulationSummary out;
  out.tets = s.num_tets();
  out.vertices = s.num_vertices();
  out.edges = s.num_edges();
  out.faces = s.num_faces();
  out.orientable = orient(s.triangulation()).orientable;
  out.degree_histogram = s.degree_histogram();
  out.min_degree = s.min_degree();
  out.all_degrees_even = s.all_degrees_even();
  return out;
}

std::string to_string(TautnessStatus s) {
  return s == TautnessStatus::Certified ? "paper-certified" : "unverified";
}

std::string to_string(ColouringStatus s) {
  switch (s) {
  case ColouringStatus::Applicable: return "applicable";
  case ColouringStatus::MultipleVertices: return "not-applicable: more than one vertex";
  case ColouringStatus::RankBelowTwo: return "not-applicable: rank below 2";
  }
  return "?";
}

namespace {

EqualityCondition equality_condition(const Skeleton& s, const QuadSurfaceAnalysis& q, const TetTypeCounts* tc) {
  EqualityCondition c;
  c.one_vertex = s.num_vertices() == 1;
  c.three_embedded_components = q.three_embedded();
  c.no_sphere_component = std::none_of(q.components.begin(), q.components.end(),
                                       [](const QuadComponent& x) { return x.classification.is_sphere; });
  c.all_type_v = tc && tc->E == tc->T;
  c.all_edges_even = s.all_degrees_even();
  return c;
}

bool duals_match(const QuadSurfaceAnalysis& q, const Subgroup& h) {
  if (!q.three_embedded()) return false;
  std::set<Cochain> got, want(h.phi.begin(), h.phi.end());
  for (const auto& c : q.components) got.insert(c.dual);
  return got == want;
}

// Generated twisted loops are the only inputs whose dual surfaces are known
// to be taut.
bool is_twisted_loop(const Triangulation& t, const Skeleton& s) {
  const int k = s.num_tets();
  if (k < 2 || k % 2 != 0 || s.num_vertices() != 1 || !s.all_degrees_even()) return false;
  return are_isomorphic(t, twisted_layered_loop(k)).has_value();
}

} // namespace

EqualityCondition check_equality_condition(const Triangulation& t, const Subgroup& h) {
  check_closed_orientable(t);
  const Skeleton s(t);
  const auto q = canonical_quad_surface(s);
  if (s.num_vertices() != 1) return equality_condition(s, q, nullptr);
  const auto tc = counts(colour_rank2(s, h), s);
  return equality_condition(s, q, &tc);
}

AnalysisReport analyze(const Triangulation& t) {
  check_closed_orientable(t);
  const Skeleton s(t);
  AnalysisReport r;
  r.summary = summarize(s);
  const auto basis = h1_z2(s);
  r.h1_rank = basis.rank();
  r.quad = canonical_quad_surface(s);
  if (s.num_vertices() != 1) {
    r.colouring = ColouringStatus::MultipleVertices;
    return r;
  }
  r.lsts = find_maximal_lsts(t);
  if (basis.rank() < 2) {
    r.colouring = ColouringStatus::RankBelowTwo;
    return r;
  }

  const bool loop = is_twisted_loop(t, s);
  for (const auto& h : enumerate_rank2_subgroups(basis)) {
    SubgroupReport sr;
    sr.subgroup = h;
    const auto c = colour_rank2(s, h);
    sr.counts = counts(c, s);
    std::array<int, 3> chi{};
    sr.candidate_lower_bound = 2;
    for (int i = 0; i < 3; ++i) {
      sr.dual_surfaces[i] = canonical_dual_surface(s, h.phi[i]);
      chi[i] = sr.dual_surfaces[i].complex.euler();
      sr.candidate_lower_bound += std::max(0, -chi[i]);
    }
    sr.identities = verify_identities(sr.counts, chi);
    for (auto d : r.lsts) {
      LstTyping typing;
      typing.type = classify_lst(c, s, d);
      typing.h_even_boundary_edge = d.h_even_boundary_edge;
      typing.ii4 = d.is_ii4;
      typing.core_ii4 = d.is_core_ii4;
      sr.ii4_count += d.is_ii4;
      sr.lsts.push_back(typing);
    }
    sr.equality = equality_condition(s, r.quad, &sr.counts);
    sr.quad_duals_match = duals_match(r.quad, h);
    sr.tautness = loop ? TautnessStatus::Certified : TautnessStatus::Unverified;
    r.subgroups.push_back(std::move(sr));
  }
  return r;
}

namespace {

ordered_json histogram(const std::map<int, int>& h) {
  ordered_json out = ordered_json::array();
  for (auto [d, n] : h) out.push_back({{"degree", d}, {"count", n}});
  return out;
}

ordered_json classification(const ComponentClass& c) {
  ordered_json out;
  out["orientable"] = c.orientable;
  if (c.orientable)
    out["genus"] = c.genus;
  else
    out["crosscaps"] = c.crosscaps;
  out["sphere"] = c.is_sphere;
  return out;
}

ordered_json check(const IdentityCheck& c) {
  return {{"verdict", to_string(c.verdict)}, {"lhs", c.lhs}, {"rhs", c.rhs}};
}

ordered_json surface(const SurfaceComplex& c) {
  ordered_json comps = ordered_json::array();
  for (const auto& comp : c.components) {
    ordered_json j{{"euler", comp.euler()}};
    j.update(classification(comp.classification()));
    comps.push_back(j);
  }
  return comps;
}

ordered_json quad_json(const QuadSurfaceAnalysis& q) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : q.components) {
    ordered_json j{{"euler", c.euler}, {"embedded", c.embedded}};
    j.update(classification(c.classification));
    if (c.embedded) j["dual"] = c.dual.str();
    comps.push_back(j);
  }
  ordered_json out;
  out["components"] = comps;
  out["euler_sum"] = q.euler_sum();
  out["three_embedded"] = q.three_embedded();
  out["euler_sum_check"] =
      !q.euler_sum_holds ? "not-applicable" : (*q.euler_sum_holds ? "holds" : "fails");
  return out;
}

ordered_json lst_json(const LstDescriptor& d) {
  ordered_json boundary = ordered_json::array();
  for (const auto& b : d.boundary)
    boundary.push_back({{"edge", b.edge}, {"lst_degree", b.lst_degree}, {"degree", b.degree}});
  ordered_json interior = ordered_json::array();
  for (const auto& x : d.interior)
    interior.push_back({{"edge", x.edge}, {"lst_degree", x.lst_degree}, {"degree", x.degree}});
  return {{"tets", d.tets},         {"layering_edges", d.layering_edges}, {"boundary", boundary},
          {"interior", interior},   {"univalent_edge", d.univalent_edge}};
}

ordered_json subgroup_json(const SubgroupReport& sr, int index) {
  ordered_json j;
  j["index"] = index;
  j["classes"] = {sr.subgroup.phi[0].str(), sr.subgroup.phi[1].str(), sr.subgroup.phi[2].str()};
  const auto& tc = sr.counts;
  ordered_json counts{{"T", tc.T}, {"A", tc.A}, {"B", tc.B}, {"C", tc.C}, {"D", tc.D}, {"E", tc.E}};
  counts["even_edges"] = tc.even_edges;
  counts["even_degree_sum"] = tc.even_degree_sum;
  counts["even_degree_histogram"] = histogram(tc.even_degree_histogram);
  j["counts"] = counts;

  ordered_json duals = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& d = sr.dual_surfaces[i];
    duals.push_back({{"class", i + 1},
                     {"euler", d.complex.euler()},
                     {"euler_formula", d.euler_formula},
                     {"components", surface(d.complex)}});
  }
  j["dual_surfaces"] = duals;

  const auto& id = sr.identities;
  j["identities"] = {{"edge_count", check(id.edge_count)},       {"degree_sum", check(id.degree_sum)},
                     {"degree_sum_chi", check(id.degree_sum_chi)}, {"degree_three", check(id.degree_three)},
                     {"c_even", check(id.c_even)},                 {"e_even", check(id.e_even)},
                     {"all_hold", id.all_hold()}};

  ordered_json lsts = ordered_json::array();
  for (std::size_t i = 0; i < sr.lsts.size(); ++i) {
    const auto& x = sr.lsts[i];
    lsts.push_back({{"lst", i},
                    {"type", to_string(x.type)},
                    {"h_even_boundary_edge", x.h_even_boundary_edge},
                    {"ii4", x.ii4},
                    {"core_ii4", x.core_ii4}});
  }
  j["lst_types"] = lsts;
  j["ii4_count"] = sr.ii4_count;
  j["candidate_lower_bound"] = sr.candidate_lower_bound;
  j["bound_note"] = "lower bound on complexity only if the canonical dual surfaces are taut";
  const auto& t2 = sr.equality;
  j["theorem2_condition"] = {{"one_vertex", t2.one_vertex},
                             {"three_embedded_components", t2.three_embedded_components},
                             {"no_sphere_component", t2.no_sphere_component},
                             {"all_type_V", t2.all_type_v},
                             {"all_edges_even", t2.all_edges_even},
                             {"all_true", t2.all()},
                             {"consequence_holds", t2.consequence_holds()}};
  j["quad_duals_match"] = sr.quad_duals_match;
  j["tautness_status"] = to_string(sr.tautness);
  return j;
}

} // namespace

std::string render_report(const AnalysisReport& r) {
  ordered_json j;
  j["format"] = "z2tri-analysis-v1";
  const auto& s = r.summary;
  j["triangulation"] = {{"tetrahedra", s.tets},
                        {"vertices", s.vertices},
                        {"edges", s.edges},
                        {"faces", s.faces},
                        {"orientable", s.orientable},
                        {"degree_histogram", histogram(s.degree_histogram)},
                        {"min_degree", s.min_degree},
                        {"all_degrees_even", s.all_degrees_even}};
  j["h1_z2_rank"] = r.h1_rank;
  j["colouring"] = to_string(r.colouring);
  j["quad_surface"] = quad_json(r.quad);
  if (r.colouring != ColouringStatus::MultipleVertices) {
    ordered_json lsts = ordered_json::array();
    for (const auto& d : r.lsts) lsts.push_back(lst_json(d));
    j["lsts"] = lsts;
  }
  if (r.colouring == ColouringStatus::Applicable) {
    ordered_json subs = ordered_json::array();
    for (std::size_t i = 0; i < r.subgroups.size(); ++i) subs.push_back(subgroup_json(r.subgroups[i], static_cast<int>(i)));
    j["subgroups"] = subs;
  }
  return j.dump(2) + "\n";
}

} // namespace z2tri
