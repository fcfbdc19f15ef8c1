#ifndef STOKESROM_MESH_HPP
#define STOKESROM_MESH_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "stokesrom/basis.hpp"
#include "stokesrom/quadrature.hpp"

namespace stokesrom {

enum class FaceTag : int { Interior = 0, Dirichlet = 1, Neumann = 2, Slip = 3 };

struct Face {
  int left_elem = -1;   // element that created the face
  int left_face = -1;   // local face index in left_elem
  int right_elem = -1;  // -1 for boundary faces
  int right_face = -1;
  FaceTag tag = FaceTag::Interior;
  std::vector<int> nodes;  // k+1 mesh node ids, in left-element order
};

// Fixed high-order triangular mesh of the reference domain.
class ReferenceMesh {
 public:
  ReferenceMesh(int degree, Eigen::Matrix<double, Eigen::Dynamic, 2> nodes,
                Eigen::MatrixXi elements,
                const std::vector<std::array<int, 3>>& boundary_faces);

  static ReferenceMesh load(const std::string& path);

  int degree() const { return degree_; }
  int n_nodes() const { return static_cast<int>(nodes_.rows()); }
  int n_elements() const { return static_cast<int>(elements_.rows()); }
  int n_faces() const { return static_cast<int>(faces_.size()); }
  int nodes_per_element() const { return (degree_ + 1) * (degree_ + 2) / 2; }

  const Eigen::Matrix<double, Eigen::Dynamic, 2>& nodes() const { return nodes_; }
  const Eigen::MatrixXi& elements() const { return elements_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }

  // face id of local face lf of element e
  int elem_face(int e, int lf) const { return elem_faces_(e, lf); }
  bool is_left(int e, int f) const { return faces_[f].left_elem == e; }

  Eigen::Vector2d node(int i) const { return nodes_.row(i).transpose(); }
  Eigen::Vector2d element_centroid(int e) const;

  // coordinates of the element's (high-order) nodes, (n_en x 2)
  Eigen::Matrix<double, Eigen::Dynamic, 2> element_coords(int e) const;

  int count_faces(FaceTag tag) const;

 private:
  void build_faces(const std::vector<std::array<int, 3>>& boundary_faces);

  int degree_;
  Eigen::Matrix<double, Eigen::Dynamic, 2> nodes_;
  Eigen::MatrixXi elements_;
  std::vector<Face> faces_;
  Eigen::MatrixXi elem_faces_;
};

// 1d grid on [a,b]: n_elements uniform elements, Fekete (Gauss-Lobatto)
// nodes of degree k in each, shared endpoints.
class ParametricGrid {
 public:
  ParametricGrid(double a, double b, int n_elements, int degree,
                 int n_quad_per_elem = 0);

  double a() const { return a_; }
  double b() const { return b_; }
  int n_elements() const { return n_elements_; }
  int degree() const { return degree_; }
  int n_nodes() const { return n_elements_ * degree_ + 1; }
  const Eigen::VectorXd& nodes() const { return nodes_; }

  int n_quad_per_elem() const { return static_cast<int>(quad_.points.size()); }
  int n_quad() const { return n_elements_ * n_quad_per_elem(); }
  // global quadrature point/weight q
  double quad_point(int q) const { return quad_points_(q); }
  double quad_weight(int q) const { return quad_weights_(q); }
  int quad_elem(int q) const { return q / n_quad_per_elem(); }

  // global node index of local node i in element e
  int node_index(int e, int i) const { return e * degree_ + i; }
  // basis values of element e at its local quadrature point iq
  const Eigen::MatrixXd& basis_at_quad() const { return basis_at_quad_; }

  int find_element(double mu) const;
  double interpolate(const Eigen::VectorXd& nodal, double mu) const;
  // values of all global basis functions at mu (sparse by element, returned dense)
  Eigen::VectorXd basis_at(double mu) const;

 private:
  double a_, b_;
  int n_elements_, degree_;
  Eigen::VectorXd nodes_;
  Lagrange1d elem_basis_;
  QuadratureRule1d quad_;
  Eigen::VectorXd quad_points_, quad_weights_;
  Eigen::MatrixXd basis_at_quad_;  // (n_quad_per_elem x k+1), reference coords
};

}  // namespace stokesrom

#endif
