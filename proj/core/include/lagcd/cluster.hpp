#pragma once

#include <cstddef>
#include <vector>

#include "lagcd/roots.hpp"

namespace lagcd {

enum class ClusterStrategy { DivideAndConquer, SymmetryHeuristic };

struct ClusterParams {
  double sigma = 0.0;          ///< merge tolerance, in root units
  int maxMultiplicity = 3;     ///< heuristic only
  double fuzzFactor = 1.0;     ///< heuristic radius multiplier
  ClusterStrategy strategy = ClusterStrategy::DivideAndConquer;
  bool fixpoint = false;       ///< DnC only: rerun until nothing merges

  /// Throws InvalidArgument on sigma < 0, maxMultiplicity < 1 or fuzzFactor <= 0.
  void validate() const;
};

/// Constants of the symmetry heuristic.
struct HeuristicTolerances {
  double angularTolerance = 0.35;    ///< rad, per gap, from 2*pi/m
  double radiusBand = 2.0;           ///< max/min distance to centroid
  std::size_t fullEnumerationLimit = 12;
};

/// One output cluster plus the input entries (indices into the input
/// RootList) that were absorbed into it.
struct Cluster {
  Complex center;
  int multiplicity = 1;
  std::vector<std::size_t> members;
};

struct DncStats {
  std::size_t comparisons = 0;  ///< merge-by-imaginary plus strip distance tests
  std::size_t merges = 0;
};

/// Divide-and-conquer clustering after the closest-pair recursion.
///
/// The input is split at m = floor((l+r)/2) of the real-sorted list, both
/// halves are clustered, merged by imaginary part, and cross pairs inside the
/// strip |Re z - Re q[m]| <= sigma with |u - v| <= sigma are merged into
/// ((d_u u + d_v v)/(d_u + d_v), d_u + d_v). Candidate pairs are taken in
/// ascending distance; a point takes part in at most one merge per strip, so
/// chains are not collapsed transitively.
std::vector<Cluster> clusterDnCDetailed(const RootList& q, double sigma, DncStats* stats = nullptr);
RootList clusterRootsDnC(const RootList& q, double sigma, DncStats* stats = nullptr);

/// Repeats clusterRootsDnC on its own output until nothing merges.
std::vector<Cluster> clusterDnCFixpointDetailed(const RootList& q, double sigma);

/// Distance, symmetry and multiplicity-first clustering.
///
/// An input (r, d) counts as d coincident points. For m = maxMultiplicity
/// down to 2, candidate m-point sets are accepted when every point lies
/// within fuzzFactor * sigma^(1/m) of the set's centroid, the max/min radius
/// ratio is within the band, and every angular gap about the centroid is
/// within the angular tolerance of 2*pi/m. Accepted sets are taken most
/// symmetric first and replaced by (centroid, m).
std::vector<Cluster> clusterHeuristicDetailed(const RootList& roots, const ClusterParams& params,
                                              const HeuristicTolerances& tol = {});
RootList clusterRootsHeuristic(const RootList& roots, const ClusterParams& params,
                               const HeuristicTolerances& tol = {});

/// Dispatches on params.strategy (and params.fixpoint for DnC).
std::vector<Cluster> clusterDetailed(const RootList& roots, const ClusterParams& params);
RootList clusterRoots(const RootList& roots, const ClusterParams& params);

RootList toRootList(const std::vector<Cluster>& clusters);

}  // namespace lagcd
