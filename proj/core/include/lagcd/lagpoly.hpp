#pragma once

#include <span>
#include <vector>

#include "lagcd/roots.hpp"

namespace lagcd {

/// Relative node-gap thresholds, measured against the node spread
/// (largest pairwise distance).
struct NodeTolerances {
  double errorGap = 1e-12;  ///< below this a NearDuplicateNodes error is raised
  double warnGap = 1e-8;    ///< below this the polynomial is flagged ill-conditioned
};

/// ell_k = 1 / prod_{j != k} (x_k - x_j). A single node gets weight 1.
///
/// Throws DuplicateNodes when two nodes coincide exactly and
/// NearDuplicateNodes when a gap falls under `tol.errorGap * spread`.
std::vector<Complex> barycentricWeights(std::span<const Complex> nodes,
                                        const NodeTolerances& tol = {});

/// A polynomial given by its values at distinct nodes (Lagrange basis).
///
/// The nominal degree is `nodes().size() - 1`. Barycentric weights are
/// computed once at construction; the object is immutable afterwards.
class LagrangePoly {
 public:
  LagrangePoly(std::vector<Complex> nodes, std::vector<Complex> values,
               const NodeTolerances& tol = {});

  static LagrangePoly fromReal(std::span<const double> nodes, std::span<const double> values,
                               const NodeTolerances& tol = {});

  std::span<const Complex> nodes() const noexcept { return nodes_; }
  std::span<const Complex> values() const noexcept { return values_; }
  std::span<const Complex> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  int nominalDegree() const noexcept { return static_cast<int>(nodes_.size()) - 1; }

  /// True when some node gap is below the warning threshold.
  bool nearDuplicateNodes() const noexcept { return nearDuplicate_; }

  /// Largest pairwise node distance.
  double nodeSpread() const noexcept { return spread_; }

  /// Mean of the nodes.
  Complex nodeCenter() const noexcept;

  double maxAbsValue() const noexcept;

  /// sum_k ell_k p_k: the coefficient of x^n in the interpolant.
  Complex leadingCoefficient() const noexcept;

 private:
  std::vector<Complex> nodes_;
  std::vector<Complex> values_;
  std::vector<Complex> weights_;
  double spread_ = 0.0;
  bool nearDuplicate_ = false;
};

/// Second-form barycentric evaluation. Returns the stored value bit-for-bit
/// when `z` equals a node exactly.
Complex evaluate(const LagrangePoly& p, Complex z);

/// Samples lead * prod (x - r)^m at `nodes`.
///
/// Factors are multiplied in order of increasing |x_k - r| at each node.
/// Throws InsufficientNodes unless nodes.size() >= totalMultiplicity + 1.
LagrangePoly fromRoots(const RootList& roots, std::span<const Complex> nodes,
                       Complex leadingCoeff = 1.0);

}  // namespace lagcd
