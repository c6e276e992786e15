#pragma once

#include <Eigen/Dense>

namespace dlra {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

} // namespace dlra
