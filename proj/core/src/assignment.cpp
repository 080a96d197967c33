#include "lagcd/assignment.hpp"

#include <algorithm>
#include <limits>

#include "lagcd/error.hpp"

namespace lagcd {

std::vector<std::size_t> solveAssignment(const Eigen::MatrixXd& cost) {
  const auto n = static_cast<std::size_t>(cost.rows());
  const auto m = static_cast<std::size_t>(cost.cols());
  if (n > m) throw Error(ErrorCode::InvalidArgument, "assignment needs rows <= cols");
  constexpr double inf = std::numeric_limits<double>::infinity();

  // 1-based potentials; column 0 is the virtual source.
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = owner[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = cost(static_cast<Eigen::Index>(i0 - 1), static_cast<Eigen::Index>(j - 1)) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> rowToCol(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) rowToCol[owner[j] - 1] = j - 1;
  }
  return rowToCol;
}

namespace {

// Kuhn's augmenting-path perfect matching restricted to cost <= limit.
bool perfectMatchingUnder(const Eigen::MatrixXd& cost, double limit, std::vector<std::size_t>& colOwner) {
  const auto n = static_cast<std::size_t>(cost.rows());
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  colOwner.assign(n, none);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t row) -> bool {
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[c] || cost(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) > limit) continue;
      seen[c] = 1;
      if (colOwner[c] == none || self(self, colOwner[c])) {
        colOwner[c] = row;
        return true;
      }
    }
    return false;
  };
  for (std::size_t r = 0; r < n; ++r) {
    seen.assign(n, 0);
    if (!augment(augment, r)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> solveBottleneckAssignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols()) throw Error(ErrorCode::InvalidArgument, "bottleneck assignment needs a square matrix");
  const auto n = static_cast<std::size_t>(cost.rows());
  if (n == 0) return {};
  std::vector<double> levels(cost.data(), cost.data() + cost.size());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::size_t lo = 0;
  std::size_t hi = levels.size() - 1;
  std::vector<std::size_t> colOwner;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (perfectMatchingUnder(cost, levels[mid], colOwner)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  perfectMatchingUnder(cost, levels[lo], colOwner);
  std::vector<std::size_t> rowToCol(n);
  for (std::size_t c = 0; c < n; ++c) rowToCol[colOwner[c]] = c;
  return rowToCol;
}

}  // namespace lagcd
