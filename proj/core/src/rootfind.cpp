#include "lagcd/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "lagcd/error.hpp"

namespace lagcd {
namespace {

using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;

VectorXcd eigenvaluesOf(const MatrixXcd& a, const RootfindOptions& opts) {
  if (a.rows() == 0) return {};
  if (a.rows() == 1) return a.diagonal();
  Eigen::ComplexEigenSolver<MatrixXcd> solver;
  solver.setMaxIterations(opts.iterationsPerDimension * a.rows());
  solver.compute(opts.balance ? balanced(a) : a, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolveFailure,
                "QR iteration did not converge for dimension " + std::to_string(a.rows()));
  }
  return solver.eigenvalues();
}

// Standard-form reduction. The pencil's finite eigenvalues solve
// sum_k w_k / (z - x_k) = 0 with w_k = ell_k p_k. With s = sum_k w_k and an
// arbitrary c, A = D - u 1^T, u_k = (x_k - c) w_k / s has characteristic
// polynomial (z - c) P(z) / s, and w is an eigenvector for c. A Householder
// reflector mapping w to e_1 splits c off, leaving the n roots.
std::vector<Complex> deflatedRoots(const LagrangePoly& p, Complex lead, const RootfindOptions& opts) {
  const auto nodes = p.nodes();
  const auto values = p.values();
  const auto weights = p.weights();
  const Index m = static_cast<Index>(nodes.size());
  const Complex c = p.nodeCenter();

  VectorXcd w(m);
  for (Index k = 0; k < m; ++k) w[k] = weights[k] * values[k] / lead;

  MatrixXcd a = MatrixXcd::Zero(m, m);
  for (Index k = 0; k < m; ++k) {
    const Complex uk = (nodes[k] - c) * w[k];
    a.row(k).setConstant(-uk);
    a(k, k) += nodes[k];
  }

  // Householder H = I - 2 v v^* / (v^* v) with H w = alpha e_1.
  const double wnorm = w.norm();
  VectorXcd v = w / wnorm;
  const double a0 = std::abs(v[0]);
  const Complex phase = a0 == 0.0 ? Complex(1.0) : v[0] / a0;
  v[0] += phase;
  const double vv = v.squaredNorm();
  // H A H applied as two rank-one updates.
  const Eigen::RowVectorXcd vha = v.adjoint() * a;
  a.noalias() -= (2.0 / vv) * v * vha;
  const VectorXcd ahv = a * v;
  a.noalias() -= (2.0 / vv) * ahv * v.adjoint();

  const MatrixXcd reduced = a.bottomRightCorner(m - 1, m - 1);
  const VectorXcd ev = eigenvaluesOf(reduced, opts);
  return {ev.data(), ev.data() + ev.size()};
}

// Full-pencil fallback: eigenvalues theta of (C0 - mu C1)^{-1} C1 map to
// lambda = mu + 1/theta; theta ~ 0 marks an infinite eigenvalue.
std::vector<Complex> shiftInvertRoots(const LagrangePoly& p, const RootfindOptions& opts) {
  const CompanionPencil pencil = buildPencil(p);
  const double scale = std::max(p.nodeSpread(), 1.0);
  const Complex center = p.nodeCenter();
  const Complex shifts[] = {center + scale * Complex(0.31, 0.57), center + scale * Complex(-0.73, 0.19),
                            center + scale * Complex(1.37, -1.11)};
  for (const Complex& mu : shifts) {
    Eigen::PartialPivLU<MatrixXcd> lu(pencil.c0 - mu * pencil.c1);
    if (lu.rcond() < 1e-13) continue;
    const MatrixXcd mInv = lu.solve(pencil.c1);
    const VectorXcd theta = eigenvaluesOf(mInv, opts);
    const double cutoff = opts.infiniteTolerance * mInv.norm();
    std::vector<Complex> out;
    for (Index i = 0; i < theta.size(); ++i) {
      if (std::abs(theta[i]) > cutoff) out.push_back(mu + 1.0 / theta[i]);
    }
    return out;
  }
  throw Error(ErrorCode::EigensolveFailure, "no admissible shift for the full pencil");
}

// Number of vanishing top coefficients. The coefficient of t^(n-j) in the
// interpolant, for j below the first nonzero one, is sum_k ell_k p_k t_k^j
// with t the centered and scaled nodes.
int degreeDeficiency(const LagrangePoly& p, double tol) {
  const auto nodes = p.nodes();
  const double spread = p.nodeSpread() > 0.0 ? p.nodeSpread() : 1.0;
  const Complex c = p.nodeCenter();
  std::vector<Complex> terms(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) terms[k] = p.weights()[k] * p.values()[k];
  int d = 0;
  for (; d <= p.nominalDegree(); ++d) {
    Complex sum = 0.0;
    double mag = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
      sum += terms[k];
      mag += std::abs(terms[k]);
      terms[k] *= (nodes[k] - c) / spread;
    }
    if (std::abs(sum) > tol * mag) break;
  }
  return d;
}

// The first `count` nodes in Leja order (start at the node farthest from the
// center, then maximize the product of distances to those already taken).
LagrangePoly lejaSubset(const LagrangePoly& p, std::size_t count) {
  const auto nodes = p.nodes();
  const Complex c = p.nodeCenter();
  std::vector<std::size_t> order;
  std::vector<double> score(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) score[k] = std::log(std::abs(nodes[k] - c) + 1e-300);
  std::vector<bool> used(nodes.size(), false);
  while (order.size() < count) {
    std::size_t best = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!used[k] && (best == nodes.size() || score[k] > score[best])) best = k;
    }
    used[best] = true;
    order.push_back(best);
    if (order.size() == 1) std::fill(score.begin(), score.end(), 0.0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (!used[k]) score[k] += std::log(std::abs(nodes[k] - nodes[best]));
    }
  }
  std::vector<Complex> x;
  std::vector<Complex> y;
  for (std::size_t k : order) {
    x.push_back(nodes[k]);
    y.push_back(p.values()[k]);
  }
  return LagrangePoly(std::move(x), std::move(y));
}

// Per-root first-order error estimates. P = lead * prod (x - z_j) over the
// computed roots; lead is recovered at a probe point away from the roots.
// Everything is accumulated in logs so high degrees do not overflow.
std::vector<double> errorEstimates(const LagrangePoly& p, const std::vector<Complex>& roots) {
  std::vector<double> out(roots.size(), 0.0);
  if (roots.empty()) return out;
  const auto nodes = p.nodes();
  const auto values = p.values();
  const auto weights = p.weights();
  const double spread = std::max(p.nodeSpread(), 1.0);

  double rootReach = 0.0;
  for (const auto& z : roots) rootReach = std::max(rootReach, std::abs(z - p.nodeCenter()));
  const Complex probe = p.nodeCenter() + (2.0 * std::max(rootReach, spread)) * Complex(0.6, 0.8);
  double logLead = std::log(std::abs(evaluate(p, probe)));
  for (const auto& z : roots) logLead -= std::log(std::abs(probe - z));

  // Backward error of the eigensolve grows with the pencil dimension.
  const double eps = std::numeric_limits<double>::epsilon() * static_cast<double>(nodes.size() + 1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Complex z = roots[i];
    // log sum_k |ell_k(z) p_k| with ell_k(z) = ell(z) w_k / (z - x_k).
    double logSum = 0.0;
    std::size_t hit = nodes.size();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (z == nodes[k]) hit = k;
    }
    if (hit < nodes.size()) {
      logSum = std::log(std::abs(values[hit]) + std::numeric_limits<double>::min());
    } else {
      double s = 0.0;
      double logEll = 0.0;
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        s += std::abs(weights[k] * values[k] / (z - nodes[k]));
        logEll += std::log(std::abs(z - nodes[k]));
      }
      logSum = logEll + std::log(s);
    }
    double logDeriv = logLead;
    bool coincident = false;
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j == i) continue;
      const double d = std::abs(z - roots[j]);
      if (d == 0.0) coincident = true;
      logDeriv += std::log(d);
    }
    out[i] = coincident ? std::numeric_limits<double>::infinity() : eps * std::exp(logSum - logDeriv);
  }
  return out;
}

}  // namespace

CompanionPencil buildPencil(const LagrangePoly& p) {
  const Index m = static_cast<Index>(p.size());
  const auto nodes = p.nodes();
  const auto values = p.values();
  const auto weights = p.weights();
  CompanionPencil pencil;
  pencil.sourceDegree = p.nominalDegree();
  pencil.c0 = MatrixXcd::Zero(m + 1, m + 1);
  for (Index k = 0; k < m; ++k) {
    pencil.c0(0, k + 1) = -values[k];
    pencil.c0(k + 1, 0) = weights[k];
    pencil.c0(k + 1, k + 1) = nodes[k];
  }
  pencil.c1 = MatrixXcd::Identity(m + 1, m + 1);
  pencil.c1(0, 0) = 0.0;
  return pencil;
}

Eigen::MatrixXcd balanced(Eigen::MatrixXcd a) {
  const Index n = a.rows();
  constexpr double radix = 2.0;
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Index i = 0; i < n; ++i) {
      double c = 0.0;
      double r = 0.0;
      for (Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
  return a;
}

RootfindReport findRoots(const LagrangePoly& p, const RootfindOptions& opts) {
  if (p.nominalDegree() < 1) {
    throw Error(ErrorCode::InvalidArgument, "rootfinding needs at least two nodes");
  }
  if (p.maxAbsValue() <= std::numeric_limits<double>::min()) {
    throw Error(ErrorCode::DegenerateInput, "all sampled values are zero");
  }

  RootfindReport report;
  const Complex lead = p.leadingCoefficient();
  double leadScale = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) leadScale += std::abs(p.weights()[k] * p.values()[k]);

  std::vector<Complex> candidates;
  const double marginal =
      opts.marginalLeading * static_cast<double>(p.size()) * std::numeric_limits<double>::epsilon();
  if (std::abs(lead) > marginal * leadScale) {
    candidates = deflatedRoots(p, lead, opts);
  } else {
    report.usedFallback = true;
    const int deficiency = degreeDeficiency(p, marginal);
    const int degree = p.nominalDegree() - deficiency;
    if (degree >= 1) {
      const LagrangePoly sub = lejaSubset(p, static_cast<std::size_t>(degree) + 1);
      const Complex subLead = sub.leadingCoefficient();
      double subScale = 0.0;
      for (std::size_t k = 0; k < sub.size(); ++k) subScale += std::abs(sub.weights()[k] * sub.values()[k]);
      if (std::abs(subLead) > marginal * subScale) {
        report.notes.push_back("leading coefficients are negligible; roots taken from a " +
                               std::to_string(degree + 1) + "-node subset");
        candidates = deflatedRoots(sub, subLead, opts);
      } else {
        report.notes.push_back("leading coefficient is negligible; full-pencil path used");
        candidates = shiftInvertRoots(p, opts);
      }
    } else {
      report.notes.push_back("sample is numerically constant");
    }
  }

  const double reach = opts.farFactor * p.nodeSpread();
  const Complex center = p.nodeCenter();
  for (const auto& z : candidates) {
    if (std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z - center) <= reach) {
      report.roots.push_back(z);
    }
  }
  std::sort(report.roots.begin(), report.roots.end(), lessByRealThenImag);

  const int pencilDim = static_cast<int>(p.size()) + 1;
  report.actualDegree = static_cast<int>(report.roots.size());
  report.discardedCount = pencilDim - report.actualDegree;
  if (report.actualDegree < p.nominalDegree()) {
    std::ostringstream note;
    note << "sample has degree " << report.actualDegree << " below nominal " << p.nominalDegree();
    report.notes.push_back(note.str());
  }

  const double vmax = p.maxAbsValue();
  double worst = 0.0;
  report.residuals.reserve(report.roots.size());
  for (const auto& z : report.roots) {
    const double r = std::abs(evaluate(p, z));
    report.residuals.push_back(r);
    worst = std::max(worst, r);
  }
  report.errorEstimates = errorEstimates(p, report.roots);
  int illConditioned = 0;
  double worstEstimate = 0.0;
  for (std::size_t i = 0; i < report.roots.size(); ++i) {
    if (report.errorEstimates[i] > opts.conditionNote * std::max(1.0, std::abs(report.roots[i]))) {
      ++illConditioned;
      worstEstimate = std::max(worstEstimate, report.errorEstimates[i]);
    }
  }
  if (illConditioned > 0) {
    std::ostringstream note;
    note << illConditioned << " ill-conditioned root(s), estimated error up to " << worstEstimate;
    report.notes.push_back(note.str());
  }
  if (worst > opts.residualNote * vmax) {
    std::ostringstream note;
    note << "largest residual " << worst << " exceeds " << opts.residualNote << " * max|p_k|";
    report.notes.push_back(note.str());
  }
  if (p.nearDuplicateNodes()) report.notes.push_back("near-duplicate nodes");
  return report;
}

}  // namespace lagcd
