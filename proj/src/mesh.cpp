#include "stokesrom/mesh.hpp"

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace stokesrom {

ReferenceMesh::ReferenceMesh(int degree,
                             Eigen::Matrix<double, Eigen::Dynamic, 2> nodes,
                             Eigen::MatrixXi elements,
                             const std::vector<std::array<int, 3>>& boundary_faces)
    : degree_(degree), nodes_(std::move(nodes)), elements_(std::move(elements)) {
  if (degree_ < 1) throw std::runtime_error("ReferenceMesh: degree must be >= 1");
  if (elements_.cols() != nodes_per_element())
    throw std::runtime_error("ReferenceMesh: element node count does not match degree");
  build_faces(boundary_faces);
}

void ReferenceMesh::build_faces(
    const std::vector<std::array<int, 3>>& boundary_faces) {
  const int k = degree_;
  const int nel = n_elements();
  faces_.clear();
  elem_faces_.setConstant(nel, 3, -1);

  TriangleBasis ref(k);
  // map from sorted endpoint pair -> face id
  std::map<std::pair<int, int>, int> lookup;
  for (int e = 0; e < nel; ++e) {
    for (int lf = 0; lf < 3; ++lf) {
      const auto& fn = ref.face_nodes(lf);
      std::vector<int> ids(fn.size());
      for (size_t i = 0; i < fn.size(); ++i) ids[i] = elements_(e, fn[i]);
      const int va = ids.front(), vb = ids.back();
      const auto key = std::minmax(va, vb);
      auto it = lookup.find(key);
      if (it == lookup.end()) {
        Face f;
        f.left_elem = e;
        f.left_face = lf;
        f.nodes = ids;
        lookup[key] = static_cast<int>(faces_.size());
        elem_faces_(e, lf) = static_cast<int>(faces_.size());
        faces_.push_back(std::move(f));
      } else {
        Face& f = faces_[it->second];
        if (f.right_elem != -1)
          throw std::runtime_error("ReferenceMesh: face shared by more than two elements");
        // orientation must be reversed on the second element
        bool reversed = true;
        for (size_t i = 0; i < ids.size(); ++i)
          if (ids[i] != f.nodes[ids.size() - 1 - i]) reversed = false;
        if (!reversed)
          throw std::runtime_error("ReferenceMesh: nonconforming face node ordering");
        f.right_elem = e;
        f.right_face = lf;
        elem_faces_(e, lf) = it->second;
      }
    }
  }

  for (const auto& bf : boundary_faces) {
    const int e = bf[0], lf = bf[1], tag = bf[2];
    if (e < 0 || e >= nel || lf < 0 || lf > 2)
      throw std::runtime_error("ReferenceMesh: boundary face record out of range");
    if (tag < 1 || tag > 3)
      throw std::runtime_error("ReferenceMesh: unknown boundary tag " + std::to_string(tag));
    Face& f = faces_[elem_faces_(e, lf)];
    if (f.right_elem != -1)
      throw std::runtime_error("ReferenceMesh: boundary tag on an interior face");
    f.tag = static_cast<FaceTag>(tag);
  }
  for (const auto& f : faces_)
    if (f.right_elem == -1 && f.tag == FaceTag::Interior)
      throw std::runtime_error("ReferenceMesh: untagged boundary face");
}

ReferenceMesh ReferenceMesh::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);

  int lineno = 0;
  auto next_line = [&](std::istringstream& ss) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      const auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      ss = std::istringstream(line);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
  };

  std::istringstream ss;
  if (!next_line(ss)) throw fail("missing header");
  int nsd, k, nn, nel, nbf;
  if (!(ss >> nsd >> k >> nn >> nel >> nbf)) throw fail("bad header");
  if (nsd != 2) throw fail("only nsd=2 supported");
  if (k < 1) throw fail("bad degree");

  Eigen::Matrix<double, Eigen::Dynamic, 2> nodes(nn, 2);
  for (int i = 0; i < nn; ++i) {
    if (!next_line(ss)) throw fail("unexpected end of file in node block");
    if (!(ss >> nodes(i, 0) >> nodes(i, 1))) throw fail("bad node line");
  }
  const int nen = (k + 1) * (k + 2) / 2;
  Eigen::MatrixXi elements(nel, nen);
  for (int e = 0; e < nel; ++e) {
    if (!next_line(ss)) throw fail("unexpected end of file in element block");
    for (int i = 0; i < nen; ++i) {
      int id;
      if (!(ss >> id)) throw fail("bad element line");
      if (id < 0 || id >= nn) throw fail("node id out of range");
      elements(e, i) = id;
    }
  }
  std::vector<std::array<int, 3>> bfaces(nbf);
  for (int i = 0; i < nbf; ++i) {
    if (!next_line(ss)) throw fail("unexpected end of file in boundary block");
    if (!(ss >> bfaces[i][0] >> bfaces[i][1] >> bfaces[i][2]))
      throw fail("bad boundary face line");
  }
  return ReferenceMesh(k, std::move(nodes), std::move(elements), bfaces);
}

Eigen::Vector2d ReferenceMesh::element_centroid(int e) const {
  Eigen::Vector2d c = Eigen::Vector2d::Zero();
  for (int v = 0; v < 3; ++v) c += node(elements_(e, v));
  return c / 3.0;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> ReferenceMesh::element_coords(int e) const {
  const int nen = nodes_per_element();
  Eigen::Matrix<double, Eigen::Dynamic, 2> X(nen, 2);
  for (int i = 0; i < nen; ++i) X.row(i) = nodes_.row(elements_(e, i));
  return X;
}

int ReferenceMesh::count_faces(FaceTag tag) const {
  int c = 0;
  for (const auto& f : faces_)
    if (f.tag == tag) ++c;
  return c;
}

ParametricGrid::ParametricGrid(double a, double b, int n_elements, int degree,
                               int n_quad_per_elem)
    : a_(a),
      b_(b),
      n_elements_(n_elements),
      degree_(degree),
      elem_basis_(fekete_nodes_1d(degree)),
      quad_(gauss_legendre(n_quad_per_elem > 0 ? n_quad_per_elem : degree + 1)) {
  if (!(b > a)) throw std::invalid_argument("ParametricGrid: empty interval");
  if (n_elements < 1) throw std::invalid_argument("ParametricGrid: n_elements < 1");

  const Eigen::VectorXd ref = fekete_nodes_1d(degree_);
  nodes_.resize(n_nodes());
  const double h = (b_ - a_) / n_elements_;
  for (int e = 0; e < n_elements_; ++e) {
    for (int i = 0; i <= degree_; ++i)
      nodes_(node_index(e, i)) = a_ + h * (e + 0.5 * (ref(i) + 1.0));
  }
  nodes_(0) = a_;
  nodes_(n_nodes() - 1) = b_;

  const int nq = static_cast<int>(quad_.points.size());
  quad_points_.resize(n_elements_ * nq);
  quad_weights_.resize(n_elements_ * nq);
  for (int e = 0; e < n_elements_; ++e) {
    for (int q = 0; q < nq; ++q) {
      quad_points_(e * nq + q) = a_ + h * (e + 0.5 * (quad_.points(q) + 1.0));
      quad_weights_(e * nq + q) = 0.5 * h * quad_.weights(q);
    }
  }
  basis_at_quad_.resize(nq, degree_ + 1);
  for (int q = 0; q < nq; ++q)
    basis_at_quad_.row(q) = elem_basis_.eval(quad_.points(q)).transpose();
}

int ParametricGrid::find_element(double mu) const {
  const double tol = 1e-12 * (b_ - a_);
  if (mu < a_ - tol || mu > b_ + tol)
    throw std::out_of_range("ParametricGrid: point outside interval");
  const double h = (b_ - a_) / n_elements_;
  int e = static_cast<int>((mu - a_) / h);
  if (e < 0) e = 0;
  if (e >= n_elements_) e = n_elements_ - 1;
  return e;
}

double ParametricGrid::interpolate(const Eigen::VectorXd& nodal, double mu) const {
  const int e = find_element(mu);
  const double h = (b_ - a_) / n_elements_;
  const double xi = 2.0 * (mu - a_ - e * h) / h - 1.0;
  const Eigen::VectorXd v = elem_basis_.eval(xi);
  double sum = 0.0;
  for (int i = 0; i <= degree_; ++i) sum += v(i) * nodal(node_index(e, i));
  return sum;
}

Eigen::VectorXd ParametricGrid::basis_at(double mu) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_nodes());
  const int e = find_element(mu);
  const double h = (b_ - a_) / n_elements_;
  const double xi = 2.0 * (mu - a_ - e * h) / h - 1.0;
  const Eigen::VectorXd v = elem_basis_.eval(xi);
  for (int i = 0; i <= degree_; ++i) out(node_index(e, i)) += v(i);
  return out;
}

}  // namespace stokesrom
