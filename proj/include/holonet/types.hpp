#pragma once

#include <Eigen/Core>

namespace holonet {

// Dense column vector over double.  All set/norm computations run in a finite
// truncation of l2, so a heap vector with explicit ambient dimension is the
// native representation everywhere.
using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

}  // namespace holonet
