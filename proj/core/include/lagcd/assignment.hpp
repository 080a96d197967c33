#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace lagcd {

/// Minimum-cost assignment of rows to distinct columns (rows <= cols),
/// shortest augmenting paths with potentials, O(rows^2 * cols).
/// Returns the column assigned to each row.
std::vector<std::size_t> solveAssignment(const Eigen::MatrixXd& cost);

/// Minimizes the largest assigned cost over perfect matchings of a square
/// matrix. Returns the column assigned to each row.
std::vector<std::size_t> solveBottleneckAssignment(const Eigen::MatrixXd& cost);

}  // namespace lagcd
