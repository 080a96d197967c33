#include "lagcd/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lagcd/assignment.hpp"
#include "lagcd/error.hpp"

namespace lagcd {
namespace {

constexpr std::size_t kExhaustiveLimit = 8;
constexpr std::size_t kSizeGuard = 10000;

Matching finalize(std::vector<MatchEdge> edges) {
  std::sort(edges.begin(), edges.end(), [](const MatchEdge& a, const MatchEdge& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  Matching m;
  for (const auto& e : edges) m.totalWeight += e.weight;
  m.edges = std::move(edges);
  return m;
}

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const MatchGraph& g) : g_(g), byLeft_(g.left.size()) {
    for (const auto& e : g.edges) byLeft_[e.left].push_back(&e);
    rightUsed_.assign(g.right.size(), 0);
  }

  std::vector<MatchEdge> run() {
    visit(0, 0, 0.0);
    return best_;
  }

 private:
  void visit(std::size_t leftIdx, int weight, double distance) {
    if (leftIdx == byLeft_.size()) {
      if (weight > bestWeight_ || (weight == bestWeight_ && distance < bestDistance_)) {
        bestWeight_ = weight;
        bestDistance_ = distance;
        best_ = current_;
      }
      return;
    }
    for (const MatchEdge* e : byLeft_[leftIdx]) {
      if (rightUsed_[e->right]) continue;
      rightUsed_[e->right] = 1;
      current_.push_back(*e);
      visit(leftIdx + 1, weight + e->weight, distance + e->distance);
      current_.pop_back();
      rightUsed_[e->right] = 0;
    }
    visit(leftIdx + 1, weight, distance);
  }

  const MatchGraph& g_;
  std::vector<std::vector<const MatchEdge*>> byLeft_;
  std::vector<char> rightUsed_;
  std::vector<MatchEdge> current_;
  std::vector<MatchEdge> best_;
  int bestWeight_ = -1;
  double bestDistance_ = std::numeric_limits<double>::infinity();
};

// Square assignment over max(|L|, |R|); non-edges and padding cost 0, an
// edge costs -weight + scaled distance. The distance term of any matching
// stays below 1/2, so integer weight always dominates.
std::vector<MatchEdge> assignmentSearch(const MatchGraph& g) {
  const auto n = static_cast<Eigen::Index>(std::max(g.left.size(), g.right.size()));
  double totalDistance = 0.0;
  for (const auto& e : g.edges) totalDistance += e.distance;
  const double scale = 0.5 / (totalDistance + 1.0);

  Eigen::MatrixXd cost = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXi edgeAt = Eigen::MatrixXi::Constant(n, n, -1);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const auto& e = g.edges[k];
    const auto i = static_cast<Eigen::Index>(e.left);
    const auto j = static_cast<Eigen::Index>(e.right);
    cost(i, j) = -static_cast<double>(e.weight) + scale * e.distance;
    edgeAt(i, j) = static_cast<int>(k);
  }
  const auto rowToCol = solveAssignment(cost);
  std::vector<MatchEdge> chosen;
  for (Eigen::Index i = 0; i < n; ++i) {
    const int k = edgeAt(i, static_cast<Eigen::Index>(rowToCol[static_cast<std::size_t>(i)]));
    if (k >= 0) chosen.push_back(g.edges[static_cast<std::size_t>(k)]);
  }
  return chosen;
}

}  // namespace

MatchGraph buildGraph(const RootList& left, const RootList& right, double sigma) {
  if (!(sigma >= 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma must be >= 0");
  MatchGraph g{left, right, sigma, {}};
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const double d = std::abs(left[i].value - right[j].value);
      if (d <= sigma) {
        g.edges.push_back({i, j, std::min(left[i].multiplicity, right[j].multiplicity), d});
      }
    }
  }
  return g;
}

MatchGraph transposed(const MatchGraph& g) {
  MatchGraph t{g.right, g.left, g.sigma, {}};
  t.edges.reserve(g.edges.size());
  for (const auto& e : g.edges) t.edges.push_back({e.right, e.left, e.weight, e.distance});
  std::sort(t.edges.begin(), t.edges.end(), [](const MatchEdge& a, const MatchEdge& b) {
    return a.left != b.left ? a.left < b.left : a.right < b.right;
  });
  return t;
}

Matching greedyMWM(const MatchGraph& g) {
  std::vector<MatchEdge> order = g.edges;
  std::sort(order.begin(), order.end(), [](const MatchEdge& a, const MatchEdge& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  std::vector<char> leftUsed(g.left.size(), 0);
  std::vector<char> rightUsed(g.right.size(), 0);
  std::vector<MatchEdge> taken;
  for (const auto& e : order) {
    if (leftUsed[e.left] || rightUsed[e.right]) continue;
    leftUsed[e.left] = rightUsed[e.right] = 1;
    taken.push_back(e);
  }
  return finalize(std::move(taken));
}

Matching exactMWM(const MatchGraph& g) {
  if (g.left.size() * g.right.size() > kSizeGuard) {
    throw Error(ErrorCode::SizeGuard, std::to_string(g.left.size()) + " x " +
                                          std::to_string(g.right.size()) + " exceeds the exact-matching guard");
  }
  if (g.edges.empty()) return {};
  if (g.left.size() <= kExhaustiveLimit && g.right.size() <= kExhaustiveLimit) {
    return finalize(ExhaustiveSearch(g).run());
  }
  return finalize(assignmentSearch(g));
}

bool isValidMatching(const Matching& m, const MatchGraph& g) {
  std::vector<char> leftUsed(g.left.size(), 0);
  std::vector<char> rightUsed(g.right.size(), 0);
  int total = 0;
  for (const auto& e : m.edges) {
    if (e.left >= g.left.size() || e.right >= g.right.size()) return false;
    if (leftUsed[e.left] || rightUsed[e.right]) return false;
    leftUsed[e.left] = rightUsed[e.right] = 1;
    const bool inGraph = std::any_of(g.edges.begin(), g.edges.end(), [&](const MatchEdge& x) { return x == e; });
    if (!inGraph) return false;
    total += e.weight;
  }
  return total == m.totalWeight;
}

}  // namespace lagcd
