#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "lagcd/lagpoly.hpp"

namespace lagcd {

/// The Lagrange-basis generalized companion pencil, det(z*c1 - c0) = P(z).
///
/// For nodes x_0..x_n with values p_k and barycentric weights ell_k, c0 is the
/// (n+2)x(n+2) arrowhead
///
///     [ 0    -p_0 ... -p_n ]
///     [ ell_0  x_0         ]
///     [  ...       ...     ]
///     [ ell_n          x_n ]
///
/// and c1 is the identity with its top-left entry zeroed.
struct CompanionPencil {
  Eigen::MatrixXcd c0;
  Eigen::MatrixXcd c1;
  int sourceDegree = 0;
};

CompanionPencil buildPencil(const LagrangePoly& p);

struct RootfindOptions {
  bool balance = true;
  int iterationsPerDimension = 40;
  /// Shift-invert eigenvalues with |theta| <= infiniteTolerance * ||M|| are
  /// treated as infinite (fallback path only).
  double infiniteTolerance = 1e-10;
  /// Roots farther than farFactor * nodeSpread from the node center are
  /// dropped as artifacts of a degree-deficient sample.
  double farFactor = 1e6;
  /// Deflation is numerically marginal when |leading coeff| is within this
  /// many multiples of (n + 1) * eps * sum_k |ell_k p_k|, i.e. within the
  /// rounding error of the sum that computes it; the degree is then reduced.
  double marginalLeading = 4.0;
  /// Residuals above this multiple of max|p_k| produce a conditioning note.
  double residualNote = 1e-8;
  /// Roots whose estimated forward error exceeds this multiple of
  /// max(1, |z|) produce a conditioning note.
  double conditionNote = 1e-8;
};

struct RootfindReport {
  std::vector<Complex> roots;        ///< sorted by real part, then imaginary part
  int discardedCount = 0;            ///< pencil eigenvalues not returned
  std::vector<double> residuals;     ///< |P(root)| by barycentric evaluation
  /// First-order forward error estimate per root,
  /// (n + 2) eps * sum_k |ell_k(z) p_k| / |P'(z)| with P' from the computed
  /// roots.
  std::vector<double> errorEstimates;
  int actualDegree = 0;              ///< equals roots.size()
  bool usedFallback = false;         ///< shift-invert full-pencil path was taken
  std::vector<std::string> notes;    ///< conditioning diagnostics; empty when clean

  int pencilDimension() const { return static_cast<int>(roots.size()) + discardedCount; }
};

/// Finite eigenvalues of the companion pencil, i.e. the roots of p.
///
/// The two infinite eigenvalues are removed analytically: the pencil is
/// reduced to an (n+1)x(n+1) standard eigenproblem D - u e^T with one known
/// eigenvalue, which is then deflated by a Householder similarity. Throws
/// DegenerateInput for an all-zero sample and EigensolveFailure when the QR
/// iteration does not converge within its budget.
RootfindReport findRoots(const LagrangePoly& p, const RootfindOptions& opts = {});

/// Diagonal similarity scaling (powers of two) that equalizes row and column
/// norms; eigenvalues are unchanged. Returns the scaled matrix.
Eigen::MatrixXcd balanced(Eigen::MatrixXcd a);

}  // namespace lagcd
