#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagcd/cluster.hpp"
#include "lagcd/lagpoly.hpp"
#include "lagcd/matching.hpp"
#include "lagcd/metric.hpp"
#include "lagcd/rootfind.hpp"

namespace lagcd {

enum class Matcher { Greedy, Exact };

struct AgcdOptions {
  /// cluster.sigma is the shared tolerance; the two overrides below default
  /// to it when unset.
  ClusterParams cluster{};
  std::optional<double> sigmaEdge;
  std::optional<double> sigmaCert;
  Rho rho = Rho::Sum;
  Matcher matcher = Matcher::Greedy;
  RootfindOptions rootfind{};
  /// Nodes on which G is sampled; the default set is used when absent.
  std::optional<std::vector<Complex>> gcdNodes;

  double edgeSigma() const { return sigmaEdge.value_or(cluster.sigma); }
  double certSigma() const { return sigmaCert.value_or(cluster.sigma); }
};

enum class MatchSide { Left, Right };

/// Rootfinding and clustering output for one input polynomial.
struct SideReport {
  RootfindReport rootfind;
  std::vector<Cluster> clusters;
  RootList clustered;
};

struct AgcdResult {
  RootList gcd;
  LagrangePoly gcdSamples;
  RootList pTilde;
  LagrangePoly pTildeSamples;  ///< on P's nodes, with P's leading coefficient
  RootList qTilde;
  LagrangePoly qTildeSamples;  ///< on Q's nodes, with Q's leading coefficient
  RootList pCofactor;          ///< pTilde / gcd
  RootList qCofactor;          ///< qTilde / gcd
  MatchGraph graph;
  Matching matching;
  double distP = 0.0;
  double distQ = 0.0;
  bool certifiedP = false;
  bool certifiedQ = false;
  double sigmaCluster = 0.0;
  double sigmaEdge = 0.0;
  double sigmaCert = 0.0;
  Rho rho = Rho::Sum;
  SideReport p;
  SideReport q;
  std::vector<std::string> warnings;

  int degree() const { return gcd.totalMultiplicity(); }
};

/// One root per matched edge {a, b}, placed at the multiplicity-weighted
/// mean (d_a a + d_b b) / (d_a + d_b), with multiplicity W({a, b}). An empty
/// matching yields the empty list (G = 1).
RootList assembleGcd(const Matching& m, const MatchGraph& g);

/// gcd * prod_unmatched (x - r)^d * prod_matched (x - r)^(d - w), where
/// `side` says which graph side `clustered` sits on.
RootList reconstruct(const RootList& clustered, const Matching& m, const RootList& gcd, MatchSide side);

/// clustered with the matched multiplicities removed (the cofactor of gcd).
RootList cofactor(const RootList& clustered, const Matching& m, MatchSide side);

/// Distinct GCD roots, then 0, then Chebyshev points on [lo, hi] until
/// degree + 1 distinct nodes are available.
std::vector<Complex> defaultGcdNodes(const RootList& gcd, double lo, double hi);

/// Rootfinding, clustering, matching, reconstruction and certification.
///
/// Throws ZeroPolynomial when either input is identically zero. A failed
/// distance certificate is reported through `warnings`, not thrown.
AgcdResult approximateGcd(const LagrangePoly& p, const LagrangePoly& q, const AgcdOptions& opts);

}  // namespace lagcd
