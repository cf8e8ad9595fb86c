#pragma once

#include "natgrad/types.hpp"

namespace natgrad {

/// Nodes and weights of a quadrature rule on [0, 1].
struct QuadratureRule {
  Vector nodes;
  Vector weights;
};

/// Gauss-Legendre rule with n nodes mapped to [0, 1].
/// Exact for polynomials up to degree 2n - 1.
QuadratureRule gauss_legendre_01(int n);

}  // namespace natgrad
