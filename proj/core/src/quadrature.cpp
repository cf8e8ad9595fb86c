#include "natgrad/quadrature.hpp"

#include <cmath>

namespace natgrad {

// Nodes are the roots of the Legendre polynomial P_n on [-1, 1], found by
// Newton iteration from the Chebyshev-like initial guess; weights follow
// from the derivative. Mapped to [0, 1] at the end.
QuadratureRule gauss_legendre_01(int n) {
  require(n >= 1, "gauss_legendre_01: node count must be >= 1");

  Vector x(n), w(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Recurrence: (j+1) P_{j+1} = (2j+1) z P_j - j P_{j-1}
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x(i) = -z;
    x(n - 1 - i) = z;
    const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
    w(i) = wi;
    w(n - 1 - i) = wi;
  }

  QuadratureRule rule;
  rule.nodes = (x.array() + 1.0) / 2.0;
  rule.weights = w / 2.0;
  return rule;
}

}  // namespace natgrad
