#pragma once

#include <span>
#include <vector>

#include "lagcd/lagpoly.hpp"
#include "lagcd/roots.hpp"

namespace lagcd {

/// Base metric on C^n used inside the root pseudometric.
enum class Rho {
  Sum,  ///< sum of coordinate moduli; linear assignment
  Max,  ///< largest coordinate modulus; bottleneck assignment
};

/// (1/n) * min over permutations tau of rho(tau(f), g).
///
/// Both root vectors must have the same length n >= 1 (LengthMismatch
/// otherwise). For Rho::Sum the matched distances are summed in ascending
/// order so that d(f, g) and d(g, f) agree bit-for-bit.
double rootPseudometric(std::span<const Complex> f, std::span<const Complex> g, Rho rho = Rho::Sum);

/// Compares multiplicity-expanded root lists.
double rootPseudometric(const RootList& f, const RootList& g, Rho rho = Rho::Sum);

struct DistanceCertificate {
  double distance = 0.0;
  bool withinSigma = false;
};

DistanceCertificate certifyDistance(const RootList& p, const RootList& pTilde, double sigma,
                                    Rho rho = Rho::Sum);

/// Roots of `p` are computed with findRoots (unclustered) first.
DistanceCertificate certifyDistance(const LagrangePoly& p, const RootList& pTilde, double sigma,
                                    Rho rho = Rho::Sum);

}  // namespace lagcd
