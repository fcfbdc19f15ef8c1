#ifndef STOKESROM_QUADRATURE_HPP
#define STOKESROM_QUADRATURE_HPP

#include <Eigen/Dense>

namespace stokesrom {

struct QuadratureRule1d {
  Eigen::VectorXd points;   // in [-1,1]
  Eigen::VectorXd weights;  // sum to 2
};

// Gauss-Legendre rule with n points, exact for polynomials of degree 2n-1.
QuadratureRule1d gauss_legendre(int n);

// Gauss-Jacobi rule with weight (1-x)^alpha on [-1,1].
QuadratureRule1d gauss_jacobi(int n, double alpha);

struct TriangleQuadrature {
  Eigen::Matrix<double, Eigen::Dynamic, 2> points;  // on {x,y>=0, x+y<=1}
  Eigen::VectorXd weights;                          // sum to 1/2
  int degree = 0;                                   // exactness
};

// Rule exact for total polynomial degree >= `degree`, positive weights.
// Built by collapsing a Gauss-Legendre x Gauss-Jacobi tensor rule onto the
// reference triangle.
TriangleQuadrature triangle_quadrature(int degree);

}  // namespace stokesrom

#endif
