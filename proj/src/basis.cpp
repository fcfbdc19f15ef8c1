#include "stokesrom/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace stokesrom {

namespace {

// Legendre P_k and P_k' by recurrence.
void legendre(int k, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  if (k == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int n = 1; n < k; ++n) {
    const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = k * (x * p1 - p0) / (x * x - 1.0);
}

}  // namespace

Eigen::VectorXd fekete_nodes_1d(int k) {
  if (k < 1) throw std::invalid_argument("fekete_nodes_1d: k must be >= 1");
  Eigen::VectorXd nodes(k + 1);
  nodes(0) = -1.0;
  nodes(k) = 1.0;
  // interior nodes: roots of P_k', Newton from Chebyshev-Gauss-Lobatto guesses
  for (int i = 1; i < k; ++i) {
    double x = -std::cos(M_PI * i / k);
    for (int it = 0; it < 100; ++it) {
      double p, dp;
      legendre(k, x, p, dp);
      // f = P_k'(x); f' = P_k''(x) from the Legendre ODE
      const double f = dp;
      const double fp = (2.0 * x * dp - k * (k + 1.0) * p) / (1.0 - x * x);
      const double dxn = f / fp;
      x -= dxn;
      if (std::abs(dxn) < 1e-15) break;
    }
    nodes(i) = x;
  }
  // enforce symmetry exactly
  for (int i = 0; i <= k / 2; ++i) {
    const double s = 0.5 * (nodes(i) - nodes(k - i));
    nodes(i) = s;
    nodes(k - i) = -s;
  }
  if (k % 2 == 0) nodes(k / 2) = 0.0;
  return nodes;
}

Lagrange1d::Lagrange1d(Eigen::VectorXd nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw std::invalid_argument("Lagrange1d: need >= 2 nodes");
}

Eigen::VectorXd Lagrange1d::eval(double x) const {
  const int n = static_cast<int>(nodes_.size());
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      prod *= (x - nodes_(j)) / (nodes_(i) - nodes_(j));
    }
    v(i) = prod;
  }
  return v;
}

Eigen::VectorXd Lagrange1d::deriv(double x) const {
  const int n = static_cast<int>(nodes_.size());
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int m = 0; m < n; ++m) {
      if (m == i) continue;
      double prod = 1.0 / (nodes_(i) - nodes_(m));
      for (int j = 0; j < n; ++j) {
        if (j == i || j == m) continue;
        prod *= (x - nodes_(j)) / (nodes_(i) - nodes_(j));
      }
      sum += prod;
    }
    v(i) = sum;
  }
  return v;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> TriangleBasis::lattice_nodes(int k) {
  const int nn = (k + 1) * (k + 2) / 2;
  Eigen::Matrix<double, Eigen::Dynamic, 2> nodes(nn, 2);
  const double h = 1.0 / k;
  int idx = 0;
  nodes.row(idx++) << 0.0, 0.0;
  nodes.row(idx++) << 1.0, 0.0;
  nodes.row(idx++) << 0.0, 1.0;
  for (int i = 1; i < k; ++i) nodes.row(idx++) << i * h, 0.0;            // edge 0-1
  for (int i = 1; i < k; ++i) nodes.row(idx++) << (k - i) * h, i * h;    // edge 1-2
  for (int i = 1; i < k; ++i) nodes.row(idx++) << 0.0, (k - i) * h;      // edge 2-0
  for (int j = 1; j <= k - 2; ++j)
    for (int i = 1; i <= k - 1 - j; ++i) nodes.row(idx++) << i * h, j * h;
  return nodes;
}

TriangleBasis::TriangleBasis(int k) : k_(k) {
  if (k < 1 || k > 10) throw std::invalid_argument("TriangleBasis: unsupported degree");
  nodes_ = lattice_nodes(k);
  const int nn = size();

  // monomial exponent list, total degree <= k
  std::vector<std::pair<int, int>> expo;
  for (int d = 0; d <= k; ++d)
    for (int a = d; a >= 0; --a) expo.emplace_back(a, d - a);

  Eigen::MatrixXd V(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int m = 0; m < nn; ++m)
      V(i, m) = std::pow(nodes_(i, 0), expo[m].first) *
                std::pow(nodes_(i, 1), expo[m].second);
  coeff_ = V.fullPivLu().inverse();  // column j: coefficients of N_j

  face_nodes_.resize(3);
  face_nodes_[0].push_back(0);
  for (int i = 0; i < k - 1; ++i) face_nodes_[0].push_back(3 + i);
  face_nodes_[0].push_back(1);
  face_nodes_[1].push_back(1);
  for (int i = 0; i < k - 1; ++i) face_nodes_[1].push_back(3 + (k - 1) + i);
  face_nodes_[1].push_back(2);
  face_nodes_[2].push_back(2);
  for (int i = 0; i < k - 1; ++i) face_nodes_[2].push_back(3 + 2 * (k - 1) + i);
  face_nodes_[2].push_back(0);
}

Eigen::MatrixXd TriangleBasis::eval(
    const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts) const {
  const int np = static_cast<int>(pts.rows());
  const int nn = size();
  std::vector<std::pair<int, int>> expo;
  for (int d = 0; d <= k_; ++d)
    for (int a = d; a >= 0; --a) expo.emplace_back(a, d - a);
  Eigen::MatrixXd M(np, nn);
  for (int q = 0; q < np; ++q)
    for (int m = 0; m < nn; ++m)
      M(q, m) = std::pow(pts(q, 0), expo[m].first) *
                std::pow(pts(q, 1), expo[m].second);
  return M * coeff_;
}

void TriangleBasis::grad(const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts,
                         Eigen::MatrixXd& dx, Eigen::MatrixXd& dy) const {
  const int np = static_cast<int>(pts.rows());
  const int nn = size();
  std::vector<std::pair<int, int>> expo;
  for (int d = 0; d <= k_; ++d)
    for (int a = d; a >= 0; --a) expo.emplace_back(a, d - a);
  Eigen::MatrixXd Mx(np, nn), My(np, nn);
  for (int q = 0; q < np; ++q) {
    for (int m = 0; m < nn; ++m) {
      const int a = expo[m].first, b = expo[m].second;
      Mx(q, m) = a == 0 ? 0.0
                        : a * std::pow(pts(q, 0), a - 1) * std::pow(pts(q, 1), b);
      My(q, m) = b == 0 ? 0.0
                        : b * std::pow(pts(q, 0), a) * std::pow(pts(q, 1), b - 1);
    }
  }
  dx = Mx * coeff_;
  dy = My * coeff_;
}

}  // namespace stokesrom
