#pragma once

#include <Eigen/Dense>

#include <limits>

namespace bifnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace bifnet
