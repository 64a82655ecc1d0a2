#pragma once

#include <Eigen/Dense>

namespace kgo::quadrature {

struct Rule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Gauss-Legendre rule with n nodes on [a, b].
Rule gauss_legendre(int n, double a, double b);

}  // namespace kgo::quadrature
