#pragma once

#include <Eigen/Dense>

namespace mfmab {

using Vec = Eigen::VectorXd;
using VecI = Eigen::VectorXi;
using Mat = Eigen::MatrixXd;

// Row-major layouts so each agent's per-arm data sits contiguously.
using MatRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatIRM = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

}  // namespace mfmab
