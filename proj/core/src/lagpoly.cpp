#include "lagcd/lagpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lagcd/error.hpp"

namespace lagcd {
namespace {

struct GapSummary {
  double spread = 0.0;
  double minGap = 0.0;
};

GapSummary scanNodes(std::span<const Complex> nodes) {
  GapSummary s;
  s.minGap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const double gap = std::abs(nodes[i] - nodes[j]);
      if (gap == 0.0) {
        throw Error(ErrorCode::DuplicateNodes, "nodes " + std::to_string(i) + " and " +
                                                   std::to_string(j) + " coincide");
      }
      s.spread = std::max(s.spread, gap);
      s.minGap = std::min(s.minGap, gap);
    }
  }
  return s;
}

}  // namespace

std::vector<Complex> barycentricWeights(std::span<const Complex> nodes, const NodeTolerances& tol) {
  if (nodes.empty()) throw Error(ErrorCode::InvalidArgument, "at least one node is required");
  const GapSummary gaps = scanNodes(nodes);
  if (nodes.size() > 1 && gaps.minGap < tol.errorGap * gaps.spread) {
    throw Error(ErrorCode::NearDuplicateNodes,
                "relative node gap " + std::to_string(gaps.minGap / gaps.spread) + " below " +
                    std::to_string(tol.errorGap));
  }
  std::vector<Complex> w(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j != k) prod *= nodes[k] - nodes[j];
    }
    w[k] = 1.0 / prod;
  }
  return w;
}

LagrangePoly::LagrangePoly(std::vector<Complex> nodes, std::vector<Complex> values,
                           const NodeTolerances& tol)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(nodes_.size()) + " nodes but " +
                                               std::to_string(values_.size()) + " values");
  }
  weights_ = barycentricWeights(nodes_, tol);
  const GapSummary gaps = scanNodes(nodes_);
  spread_ = gaps.spread;
  nearDuplicate_ = nodes_.size() > 1 && gaps.minGap < tol.warnGap * gaps.spread;
}

LagrangePoly LagrangePoly::fromReal(std::span<const double> nodes, std::span<const double> values,
                                    const NodeTolerances& tol) {
  return LagrangePoly(std::vector<Complex>(nodes.begin(), nodes.end()),
                      std::vector<Complex>(values.begin(), values.end()), tol);
}

Complex LagrangePoly::nodeCenter() const noexcept {
  Complex sum = 0.0;
  for (const auto& x : nodes_) sum += x;
  return sum / static_cast<double>(nodes_.size());
}

double LagrangePoly::maxAbsValue() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

Complex LagrangePoly::leadingCoefficient() const noexcept {
  Complex s = 0.0;
  for (std::size_t k = 0; k < nodes_.size(); ++k) s += weights_[k] * values_[k];
  return s;
}

Complex evaluate(const LagrangePoly& p, Complex z) {
  const auto nodes = p.nodes();
  const auto values = p.values();
  const auto weights = p.weights();
  Complex num = 0.0;
  Complex den = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (z == nodes[k]) return values[k];
    const Complex t = weights[k] / (z - nodes[k]);
    num += t * values[k];
    den += t;
  }
  return num / den;
}

LagrangePoly fromRoots(const RootList& roots, std::span<const Complex> nodes, Complex leadingCoeff) {
  const int degree = roots.totalMultiplicity();
  if (static_cast<int>(nodes.size()) < degree + 1) {
    throw Error(ErrorCode::InsufficientNodes, std::to_string(nodes.size()) +
                                                  " nodes cannot carry degree " +
                                                  std::to_string(degree));
  }
  std::vector<Complex> values(nodes.size());
  std::vector<Complex> factors;
  factors.reserve(static_cast<std::size_t>(degree));
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    factors.clear();
    for (const auto& r : roots) {
      factors.insert(factors.end(), static_cast<std::size_t>(r.multiplicity), nodes[k] - r.value);
    }
    std::sort(factors.begin(), factors.end(),
              [](const Complex& a, const Complex& b) { return std::abs(a) < std::abs(b); });
    Complex prod = leadingCoeff;
    for (const auto& f : factors) prod *= f;
    values[k] = prod;
  }
  return LagrangePoly(std::vector<Complex>(nodes.begin(), nodes.end()), std::move(values));
}

}  // namespace lagcd
