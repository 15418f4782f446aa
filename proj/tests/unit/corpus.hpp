#pragma once

#include <string>
#include <vector>

#include "z2tri/triangulation.hpp"

namespace corpus {

struct Entry {
  std::string name;
  z2tri::Triangulation tri;
};

// Twisted loops for k = 1..max_k.
std::vector<Entry> twisted_loops(int max_k = 12);
// Every census fixture.
std::vector<Entry> census();
// Closed orientable triangulations from folding the boundary of generated
// layered solid tori onto itself.
std::vector<Entry> lst_closures();
// Census inputs with one vertex and rank >= 2, each followed by a few seeded
// random flips (non-minimal but still one-vertex).
std::vector<Entry> flipped_census(int flips_per_input = 3);

// All of the above.
std::vector<Entry> all();

} // namespace corpus
