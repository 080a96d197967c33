#pragma once

#include <cstddef>
#include <vector>

#include "lagcd/roots.hpp"

namespace lagcd {

struct MatchEdge {
  std::size_t left = 0;   ///< index into MatchGraph::left
  std::size_t right = 0;  ///< index into MatchGraph::right
  int weight = 0;         ///< min of the endpoint multiplicities
  double distance = 0.0;  ///< |r - s|

  friend bool operator==(const MatchEdge&, const MatchEdge&) = default;
};

/// Bipartite graph on clustered roots: {r, s} is an edge iff |r - s| <= sigma.
struct MatchGraph {
  RootList left;
  RootList right;
  double sigma = 0.0;
  std::vector<MatchEdge> edges;  ///< ordered by (left, right)
};

struct Matching {
  std::vector<MatchEdge> edges;
  int totalWeight = 0;
};

/// All |left| * |right| pairs are compared.
MatchGraph buildGraph(const RootList& left, const RootList& right, double sigma);

/// The same graph with sides swapped.
MatchGraph transposed(const MatchGraph& g);

/// Scans edges by descending weight (ties: ascending distance, then indices)
/// and keeps each edge disjoint from those already kept.
Matching greedyMWM(const MatchGraph& g);

/// Maximum-weight matching; among maximum-weight matchings the one with the
/// least total distance. Exhaustive search for up to 8 vertices per side,
/// assignment reduction beyond. Throws SizeGuard when |left| * |right| > 10^4.
Matching exactMWM(const MatchGraph& g);

/// No shared endpoints, every edge present in `g`, and totalWeight consistent.
bool isValidMatching(const Matching& m, const MatchGraph& g);

}  // namespace lagcd
