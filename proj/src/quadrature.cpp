#include "stokesrom/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace stokesrom {

namespace {

// Golub-Welsch: nodes/weights from the symmetric Jacobi matrix of the
// orthogonality weight.
QuadratureRule1d golub_welsch(const Eigen::VectorXd& diag,
                              const Eigen::VectorXd& offdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = diag(i);
    if (i + 1 < n) {
      J(i, i + 1) = offdiag(i);
      J(i + 1, i) = offdiag(i);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  QuadratureRule1d rule;
  rule.points = es.eigenvalues();
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    rule.weights(i) = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

QuadratureRule1d gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) {
    const double k = static_cast<double>(i);
    off(i - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  }
  return golub_welsch(diag, off, 2.0);
}

QuadratureRule1d gauss_jacobi(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: n must be >= 1");
  const double beta = 0.0;
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  const double ab = alpha + beta;
  for (int i = 0; i < n; ++i) {
    const double k = static_cast<double>(i);
    if (i == 0)
      diag(i) = (beta - alpha) / (ab + 2.0);
    else
      diag(i) = (beta * beta - alpha * alpha) /
                ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
  }
  for (int i = 1; i < n; ++i) {
    const double k = static_cast<double>(i);
    double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
    double den = (2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                 (2.0 * k + ab - 1.0);
    off(i - 1) = std::sqrt(num / den);
  }
  // mu0 = int_{-1}^{1} (1-x)^alpha dx
  const double mu0 = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
  return golub_welsch(diag, off, mu0);
}

TriangleQuadrature triangle_quadrature(int degree) {
  if (degree < 0) throw std::invalid_argument("triangle_quadrature: degree < 0");
  if (degree > 40) throw std::out_of_range("triangle_quadrature: degree above supported range");
  const int n = degree / 2 + 1;  // 2n-1 >= degree
  const QuadratureRule1d ga = gauss_legendre(n);
  const QuadratureRule1d gb = gauss_jacobi(n, 1.0);

  TriangleQuadrature rule;
  rule.degree = degree;
  rule.points.resize(n * n, 2);
  rule.weights.resize(n * n);
  int q = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j, ++q) {
      const double a = ga.points(i);
      const double b = gb.points(j);
      rule.points(q, 0) = 0.25 * (1.0 + a) * (1.0 - b);
      rule.points(q, 1) = 0.5 * (1.0 + b);
      // Duffy factor (1-b)/8 with (1-b) absorbed in the Jacobi weight
      rule.weights(q) = ga.weights(i) * gb.weights(j) / 8.0;
    }
  }
  return rule;
}

}  // namespace stokesrom
