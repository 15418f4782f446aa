#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace z2tri::detail {

// Disjoint sets with a Z/2 label on each element relative to its root.
class ParityUnionFind {
public:
  explicit ParityUnionFind(std::size_t n) : parent_(n), parity_(n, 0), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Returns (root, parity of x relative to root).
  std::pair<int, int> find(int x) {
    int parity = 0;
    int root = x;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, recomputing parities along the way.
    int cur = x;
    int cur_parity = parity;
    while (parent_[cur] != cur) {
      const int next = parent_[cur];
      const int next_parity = cur_parity ^ parity_[cur];
      parent_[cur] = root;
      parity_[cur] = cur_parity;
      cur = next;
      cur_parity = next_parity;
    }
    return {root, parity};
  }

  // Records parity(a) ^ parity(b) == rel. Returns false on contradiction.
  bool unite(int a, int b, int rel = 0) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    if (rank_[ra] < rank_[rb]) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ rel;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    return true;
  }

private:
  std::vector<int> parent_;
  std::vector<int> parity_;
  std::vector<int> rank_;
};

} // namespace z2tri::detail
