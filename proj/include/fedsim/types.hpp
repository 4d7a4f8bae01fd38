#pragma once

#include <Eigen/Dense>

namespace fedsim {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

}  // namespace fedsim
