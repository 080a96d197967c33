#pragma once

// Synthetic pairs P = G0 * A, Q = G0 * B with integer roots, sampled on
// Chebyshev nodes.

#include <algorithm>
#include <random>
#include <vector>

#include "lagcd/lagpoly.hpp"
#include "support/test_support.hpp"

namespace lagcd::testing {

struct SyntheticPair {
  RootList g0;
  RootList p;
  RootList q;
  LagrangePoly pSamples;
  LagrangePoly qSamples;
};

inline RootList concat(const std::vector<Root>& a, const std::vector<Root>& b) {
  std::vector<Root> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return RootList(std::move(out));
}

inline int totalOf(const std::vector<Root>& v) {
  int t = 0;
  for (const auto& r : v) t += r.multiplicity;
  return t;
}

/// Distinct integer roots in [-6, 6]; G0 roots are doubled with probability
/// `doubleRate`. deg P, deg Q <= maxDegree, deg G0 >= 1.
inline SyntheticPair makeSyntheticPair(std::mt19937_64& gen, int maxDegree = 10, double doubleRate = 0.2) {
  std::vector<int> pool;
  for (int k = -6; k <= 6; ++k) pool.push_back(k);
  std::shuffle(pool.begin(), pool.end(), gen);
  std::size_t next = 0;
  std::bernoulli_distribution twice(doubleRate);

  std::uniform_int_distribution<int> gDeg(1, 4);
  std::vector<Root> g;
  const int gTarget = gDeg(gen);
  while (totalOf(g) < gTarget) {
    const int m = (twice(gen) && totalOf(g) + 2 <= gTarget) ? 2 : 1;
    g.push_back({Complex(pool[next++]), m});
  }
  const int gTotal = totalOf(g);
  std::uniform_int_distribution<int> aDeg(0, maxDegree - gTotal);
  std::vector<Root> a;
  for (int k = aDeg(gen); k > 0; --k) a.push_back({Complex(pool[next++]), 1});
  std::vector<Root> b;
  for (int k = aDeg(gen); k > 0 && next < pool.size(); --k) b.push_back({Complex(pool[next++]), 1});

  SyntheticPair out{RootList(g), concat(g, a), concat(g, b), LagrangePoly({0.0}, {1.0}), LagrangePoly({0.0}, {1.0})};
  out.pSamples = fromRoots(out.p, chebyshevNodes(static_cast<std::size_t>(out.p.totalMultiplicity()) + 1, -7.0, 7.0));
  out.qSamples = fromRoots(out.q, chebyshevNodes(static_cast<std::size_t>(out.q.totalMultiplicity()) + 1, -7.0, 7.0));
  return out;
}

/// Same multiplicities in the same order and every root within tol.
inline bool sameRoots(const RootList& got, const RootList& want, double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (got[i].multiplicity != want[i].multiplicity) return false;
    if (std::abs(got[i].value - want[i].value) > tol) return false;
  }
  return true;
}

}  // namespace lagcd::testing
