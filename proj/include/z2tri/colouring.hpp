#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "z2tri/cohomology.hpp"
#include "z2tri/skeleton.hpp"

namespace z2tri {

// Rank-1 tetrahedron types for a single class phi.
//   1: one opposite pair phi-even, the other four edges odd (a quad of S_phi)
//   2: the three edges at one vertex odd (a triangle of S_phi)
//   3: every edge even (no disc)
struct Rank1Colouring {
  Cochain phi;
  std::vector<int> tet_type;
  // Type 1: opposite-pair index p in {0,1,2} of the even pair (edges p, 5-p).
  // Type 2: the vertex whose edges are odd. Type 3: -1.
  std::vector<int> tet_locus;
};

// Throws NotOneVertex, ZeroClass or NotACocycle.
Rank1Colouring colour_rank1(const Skeleton& s, const Cochain& phi);

enum class TetType { I = 1, II = 2, III = 3, IV = 4, V = 5 };

std::string to_string(TetType t);

struct SubType {
  // I: colour of the edge opposite the 0-even edge. II, III: the distinguished
  // i. IV, V: 0.
  int colour = 0;
  // V only, and only when an orientation is supplied: +1 or -1. Otherwise 0.
  int chirality = 0;
  // Where the pattern sits in the tetrahedron. I: local index of the 0-even
  // edge. II: opposite-pair index of the 0-even pair. III: the vertex. IV, V: -1.
  int locus = -1;

  bool operator==(const SubType&) const = default;
};

struct RankTwoColouring {
  Subgroup subgroup;
  // Per edge class: 0 if every phi_i vanishes, otherwise the unique i in
  // {1,2,3} with phi_i = 0.
  std::vector<int> edge_colour;
  std::vector<TetType> tet_type;
  std::vector<SubType> sub_type;

  // Colours of the six local edges of a tetrahedron.
  std::array<int, 6> local_colours(const Skeleton& s, int tet) const;
};

// Throws NotOneVertex, RankTooLow (a zero or repeated class) or NotACocycle.
// With an orientation, type V tetrahedra get their chirality.
RankTwoColouring colour_rank2(const Skeleton& s, const Subgroup& h,
                              const std::optional<OrientationAssignment>& orientation = std::nullopt);

// Tetrahedra holding a quad of S_{phi_i} (i in {1,2,3}) as read off the rank-2
// types: type I with colour i, type II with colour other than i, and type V.
std::vector<char> quad_tets_from_rank2(const RankTwoColouring& c, int i);

struct TetTypeCounts {
  int T = 0;
  int A = 0, B = 0, C = 0, D = 0, E = 0; // types I..V
  int even_edges = 0;                    // 0-even edge classes
  int even_degree_sum = 0;               // sum of their degrees
  std::map<int, int> even_degree_histogram;
  int min_degree = 0; // over all edge classes
};

TetTypeCounts counts(const RankTwoColouring& c, const Skeleton& s);

enum class Verdict { Holds, Fails, NotApplicable };

std::string to_string(Verdict v);

struct IdentityCheck {
  Verdict verdict = Verdict::NotApplicable;
  long lhs = 0;
  long rhs = 0;
};

struct IdentityReport {
  // C + 2D - E = 2e - 2 + sum chi
  IdentityCheck edge_count;
  // sum of 0-even degrees = A + 2B + 3C + 6D
  IdentityCheck degree_sum;
  // sum of 0-even degrees = 2T - A - C + 4e - 4 + 2 sum chi
  IdentityCheck degree_sum_chi;
  // e_3 = 4 + A + C - 2(T + sum chi) + sum_{d>=5} (d-4) e_d, when every edge
  // has degree at least 3
  IdentityCheck degree_three;
  IdentityCheck c_even;
  IdentityCheck e_even;

  bool all_hold() const;
};

IdentityReport verify_identities(const TetTypeCounts& tc, const std::array<int, 3>& chi);

} // namespace z2tri
