#pragma once

#include <array>
#include <vector>

#include "z2tri/gf2.hpp"
#include "z2tri/skeleton.hpp"

namespace z2tri {

// A Z/2 labelling of the edge classes of a skeleton, one bit per class.
using Cochain = BitVector;

// True iff every face class sees an even number of odd edges (a face running
// over the same edge class twice contributes it twice).
bool is_cocycle(const Skeleton& s, const Cochain& phi);

// Basis of the Z/2 1-cocycles.
std::vector<Cochain> cocycle_space(const Skeleton& s);

// Basis of the coboundaries of vertex indicators; empty for one vertex.
std::vector<Cochain> coboundary_space(const Skeleton& s);

// Coboundary of a single vertex class.
Cochain vertex_coboundary(const Skeleton& s, int vertex);

struct CohomologyBasis {
  int num_edges = 0;
  // Cocycle representatives, independent modulo coboundaries.
  std::vector<Cochain> classes;

  int rank() const { return static_cast<int>(classes.size()); }
  // Sum of the basis classes selected by the bits of `mask`.
  Cochain combination(unsigned long mask) const;
};

CohomologyBasis h1_z2(const Skeleton& s);

// A rank-2 subgroup {phi[0], phi[1], phi[2] = phi[0] + phi[1]}.
struct Subgroup {
  std::array<Cochain, 3> phi;
};

// Every rank-2 subgroup exactly once, (2^r - 1)(2^r - 2)/6 of them. Elements are
// combinations of basis classes with masks a < b < a ^ b, listed by (a, b).
// Throws RankTooLow if the rank is below 2.
std::vector<Subgroup> enumerate_rank2_subgroups(const CohomologyBasis& b);

Subgroup make_subgroup(const Cochain& phi1, const Cochain& phi2);

} // namespace z2tri
