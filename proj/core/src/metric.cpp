#include "lagcd/metric.hpp"

#include <algorithm>
#include <string>

#include "lagcd/assignment.hpp"
#include "lagcd/error.hpp"
#include "lagcd/rootfind.hpp"

namespace lagcd {

double rootPseudometric(std::span<const Complex> f, std::span<const Complex> g, Rho rho) {
  if (f.size() != g.size()) {
    throw Error(ErrorCode::LengthMismatch, "root vectors of length " + std::to_string(f.size()) +
                                               " and " + std::to_string(g.size()));
  }
  if (f.empty()) throw Error(ErrorCode::LengthMismatch, "root vectors must be non-empty");
  const auto n = static_cast<Eigen::Index>(f.size());
  Eigen::MatrixXd cost(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) cost(i, j) = std::abs(f[static_cast<std::size_t>(i)] - g[static_cast<std::size_t>(j)]);
  }
  const std::vector<std::size_t> tau =
      rho == Rho::Sum ? solveAssignment(cost) : solveBottleneckAssignment(cost);

  std::vector<double> terms(f.size());
  for (Eigen::Index i = 0; i < n; ++i) terms[static_cast<std::size_t>(i)] = cost(i, static_cast<Eigen::Index>(tau[static_cast<std::size_t>(i)]));
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  if (rho == Rho::Sum) {
    for (double t : terms) total += t;
  } else {
    total = terms.back();
  }
  return total / static_cast<double>(f.size());
}

double rootPseudometric(const RootList& f, const RootList& g, Rho rho) {
  const auto fe = f.expanded();
  const auto ge = g.expanded();
  return rootPseudometric(std::span<const Complex>(fe), std::span<const Complex>(ge), rho);
}

DistanceCertificate certifyDistance(const RootList& p, const RootList& pTilde, double sigma, Rho rho) {
  const double d = rootPseudometric(p, pTilde, rho);
  return {d, d <= sigma};
}

DistanceCertificate certifyDistance(const LagrangePoly& p, const RootList& pTilde, double sigma, Rho rho) {
  const RootfindReport report = findRoots(p);
  return certifyDistance(RootList::simple(report.roots), pTilde, sigma, rho);
}

}  // namespace lagcd
