#pragma once

// Exhaustive lexicographic matching optimum: maximum weight first, then the
// least total distance. Exponential in the right side; small graphs only.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "lagcd/matching.hpp"

namespace lagcd::testing {

struct MatchingOptimum {
  int weight = 0;
  double distance = 0.0;
};

inline MatchingOptimum bruteForceMatching(const MatchGraph& g) {
  const std::size_t nl = g.left.size();
  std::vector<std::vector<const MatchEdge*>> adj(nl);
  for (const auto& e : g.edges) adj[e.left].push_back(&e);
  std::map<std::pair<std::size_t, std::uint32_t>, MatchingOptimum> memo;
  auto better = [](const MatchingOptimum& a, const MatchingOptimum& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.distance < b.distance - 1e-12;
  };
  std::function<MatchingOptimum(std::size_t, std::uint32_t)> go = [&](std::size_t i, std::uint32_t used) {
    if (i == nl) return MatchingOptimum{};
    const auto key = std::make_pair(i, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    MatchingOptimum best = go(i + 1, used);
    for (const MatchEdge* e : adj[i]) {
      if (used & (1u << e->right)) continue;
      MatchingOptimum cand = go(i + 1, used | (1u << e->right));
      cand.weight += e->weight;
      cand.distance += e->distance;
      if (better(cand, best)) best = cand;
    }
    memo[key] = best;
    return best;
  };
  return go(0, 0);
}

}  // namespace lagcd::testing
