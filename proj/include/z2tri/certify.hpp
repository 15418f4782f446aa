#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2tri/colouring.hpp"
#include "z2tri/lst.hpp"
#include "z2tri/normal_surfaces.hpp"

namespace z2tri {

struct TriangulationSummary {
  int tets = 0, vertices = 0, edges = 0, faces = 0;
  bool orientable = true;
  std::map<int, int> degree_histogram;
  int min_degree = 0;
  bool all_degrees_even = false;
};

TriangulationSummary summarize(const Skeleton& s);

// Combinatorial side of the case where the tetrahedron count equals the
// norm bound; tautness of the three quad pieces is not checked here.
struct EqualityCondition {
  bool one_vertex = false;
  bool three_embedded_components = false;
  bool no_sphere_component = false;
  bool all_type_v = false;
  bool all_edges_even = false;

  bool all() const {
    return one_vertex && three_embedded_components && no_sphere_component && all_type_v && all_edges_even;
  }
  // Even degrees follow from the other flags; false flags a contradiction.
  bool consequence_holds() const {
    return !(one_vertex && three_embedded_components && no_sphere_component && all_type_v) || all_edges_even;
  }
};

// Requires a closed orientable input; colour-dependent flags are false for
// more than one vertex.
EqualityCondition check_equality_condition(const Triangulation& t, const Subgroup& h);

enum class TautnessStatus { Certified, Unverified };
std::string to_string(TautnessStatus s);

struct LstTyping {
  TetType type = TetType::II;
  int h_even_boundary_edge = -1;
  bool ii4 = false;
  bool core_ii4 = false;
};

struct SubgroupReport {
  Subgroup subgroup;
  TetTypeCounts counts;
  std::array<DualSurface, 3> dual_surfaces;
  IdentityReport identities;
  std::vector<LstTyping> lsts; // parallel to AnalysisReport::lsts
  int ii4_count = 0;
  // 2 + sum of max(0, -chi) over the three canonical dual surfaces; the
  // complexity bound it stands for holds only if those surfaces are taut.
  int candidate_lower_bound = 0;
  EqualityCondition equality;
  // The embedded quad components are dual to exactly the nonzero classes.
  bool quad_duals_match = false;
  TautnessStatus tautness = TautnessStatus::Unverified;
};

enum class ColouringStatus { Applicable, MultipleVertices, RankBelowTwo };
std::string to_string(ColouringStatus s);

struct AnalysisReport {
  TriangulationSummary summary;
  int h1_rank = 0;
  ColouringStatus colouring = ColouringStatus::Applicable;
  QuadSurfaceAnalysis quad;
  std::vector<LstDescriptor> lsts; // one vertex only
  std::vector<SubgroupReport> subgroups;
};

// Throws NonOrientable or NotClosed. Multi-vertex inputs get cohomology and
// the quad surface only.
AnalysisReport analyze(const Triangulation& t);

// Deterministic JSON with a fixed key order.
std::string render_report(const AnalysisReport& r);

} // namespace z2tri
