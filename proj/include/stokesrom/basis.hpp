#ifndef STOKESROM_BASIS_HPP
#define STOKESROM_BASIS_HPP

#include <Eigen/Dense>

namespace stokesrom {

// Fekete points on [-1,1] for degree k: the Gauss-Lobatto nodes, i.e. the
// endpoints plus the roots of P_k'(x).
Eigen::VectorXd fekete_nodes_1d(int k);

// Nodal Lagrange basis on a given 1d node set.
class Lagrange1d {
 public:
  explicit Lagrange1d(Eigen::VectorXd nodes);

  int degree() const { return static_cast<int>(nodes_.size()) - 1; }
  const Eigen::VectorXd& nodes() const { return nodes_; }

  Eigen::VectorXd eval(double x) const;
  Eigen::VectorXd deriv(double x) const;

 private:
  Eigen::VectorXd nodes_;
};

// Nodal Lagrange basis of total degree k on the reference triangle
// {x,y >= 0, x+y <= 1}. Node layout matches the mesh file convention:
// vertices (0,0),(1,0),(0,1); then k-1 equispaced nodes per edge for edges
// 0-1, 1-2, 2-0; then interior lattice nodes (row by row in y).
class TriangleBasis {
 public:
  explicit TriangleBasis(int k);

  int degree() const { return k_; }
  int size() const { return static_cast<int>(nodes_.rows()); }
  const Eigen::Matrix<double, Eigen::Dynamic, 2>& nodes() const { return nodes_; }

  // values(q, i) = N_i at point q
  Eigen::MatrixXd eval(const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts) const;
  // gradient components, each (npts x nbasis)
  void grad(const Eigen::Matrix<double, Eigen::Dynamic, 2>& pts,
            Eigen::MatrixXd& dx, Eigen::MatrixXd& dy) const;

  // node indices (k+1 of them) along local face f, ordered from vertex f to
  // vertex (f+1)%3
  const std::vector<int>& face_nodes(int f) const { return face_nodes_[f]; }

  static Eigen::Matrix<double, Eigen::Dynamic, 2> lattice_nodes(int k);

 private:
  int k_;
  Eigen::Matrix<double, Eigen::Dynamic, 2> nodes_;
  Eigen::MatrixXd coeff_;  // monomial coefficients of each basis function
  std::vector<std::vector<int>> face_nodes_;
};

}  // namespace stokesrom

#endif
