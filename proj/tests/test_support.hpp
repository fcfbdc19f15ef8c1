#ifndef STOKESROM_TEST_SUPPORT_HPP
#define STOKESROM_TEST_SUPPORT_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stokesrom/mesh.hpp"

namespace stokesrom::testing {

// tag chosen from the face midpoint; return 1, 2 or 3
using TagFn = std::function<int(const Eigen::Vector2d&)>;

inline TagFn all_dirichlet() {
  return [](const Eigen::Vector2d&) { return 1; };
}

struct MeshBuilder {
  std::vector<Eigen::Vector2d> nodes;
  std::vector<std::vector<int>> elements;
  std::map<std::array<long long, 2>, int> lookup;
  double snap = 1e-10;

  int add_node(const Eigen::Vector2d& p) {
    std::array<long long, 2> key = {llround(p.x() / snap), llround(p.y() / snap)};
    auto it = lookup.find(key);
    if (it != lookup.end()) return it->second;
    const int id = static_cast<int>(nodes.size());
    nodes.push_back(p);
    lookup[key] = id;
    return id;
  }

  // add a curved triangle given by a map from the reference triangle
  void add_element(int k,
                   const std::function<Eigen::Vector2d(double, double)>& geo) {
    const auto ref = TriangleBasis::lattice_nodes(k);
    std::vector<int> ids(ref.rows());
    for (int i = 0; i < ref.rows(); ++i)
      ids[i] = add_node(geo(ref(i, 0), ref(i, 1)));
    elements.push_back(std::move(ids));
  }

  ReferenceMesh finish(int k, const TagFn& tag) {
    const int nn = static_cast<int>(nodes.size());
    const int nel = static_cast<int>(elements.size());
    const int nen = (k + 1) * (k + 2) / 2;
    Eigen::Matrix<double, Eigen::Dynamic, 2> N(nn, 2);
    for (int i = 0; i < nn; ++i) N.row(i) = nodes[i].transpose();
    Eigen::MatrixXi E(nel, nen);
    for (int e = 0; e < nel; ++e)
      for (int i = 0; i < nen; ++i) E(e, i) = elements[e][i];

    // find boundary faces by counting edge occurrences
    std::map<std::array<int, 2>, std::vector<std::array<int, 2>>> edge_use;
    const int verts[3][2] = {{0, 1}, {1, 2}, {2, 0}};
    for (int e = 0; e < nel; ++e) {
      for (int lf = 0; lf < 3; ++lf) {
        int a = E(e, verts[lf][0]), b = E(e, verts[lf][1]);
        std::array<int, 2> key = {std::min(a, b), std::max(a, b)};
        edge_use[key].push_back({e, lf});
      }
    }
    std::vector<std::array<int, 3>> bfaces;
    for (const auto& [key, uses] : edge_use) {
      if (uses.size() == 1) {
        const Eigen::Vector2d mid =
            0.5 * (N.row(key[0]) + N.row(key[1])).transpose();
        bfaces.push_back({uses[0][0], uses[0][1], tag(mid)});
      }
    }
    return ReferenceMesh(k, std::move(N), std::move(E), bfaces);
  }
};

// [ax,bx] x [ay,by], nx x ny cells, two triangles each
inline ReferenceMesh rect_mesh(double ax, double bx, double ay, double by,
                               int nx, int ny, int k,
                               const TagFn& tag = all_dirichlet()) {
  MeshBuilder mb;
  const double hx = (bx - ax) / nx, hy = (by - ay) / ny;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double x0 = ax + i * hx, y0 = ay + j * hy;
      auto corner = [&](double u, double v) {
        return Eigen::Vector2d(x0 + u * hx, y0 + v * hy);
      };
      mb.add_element(k, [&](double u, double v) { return corner(u, v); });
      mb.add_element(k, [&](double u, double v) { return corner(1.0 - u, 1.0 - v); });
    }
  }
  return mb.finish(k, tag);
}

inline ReferenceMesh square_mesh(int n, int k, const TagFn& tag = all_dirichlet()) {
  return rect_mesh(0.0, 1.0, 0.0, 1.0, n, n, k, tag);
}

// full annulus r in [r0,r1], curved elements, all boundaries tagged by `tag`
inline ReferenceMesh annulus_mesh(double r0, double r1, int n_theta, int n_r,
                                  int k, const TagFn& tag = all_dirichlet()) {
  MeshBuilder mb;
  const double dr = (r1 - r0) / n_r, dth = 2.0 * M_PI / n_theta;
  for (int j = 0; j < n_theta; ++j) {
    for (int i = 0; i < n_r; ++i) {
      const double ra = r0 + i * dr, th0 = j * dth;
      auto polar = [&](double u, double v) {
        const double r = ra + u * dr, th = th0 + v * dth;
        return Eigen::Vector2d(r * std::cos(th), r * std::sin(th));
      };
      mb.add_element(k, [&](double u, double v) { return polar(u, v); });
      mb.add_element(k, [&](double u, double v) { return polar(1.0 - u, 1.0 - v); });
    }
  }
  return mb.finish(k, tag);
}

inline std::string write_mesh_file(const ReferenceMesh& mesh,
                                   const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "w");
  std::fprintf(f, "2 %d %d %d %d\n", mesh.degree(), mesh.n_nodes(),
               mesh.n_elements(),
               mesh.count_faces(FaceTag::Dirichlet) +
                   mesh.count_faces(FaceTag::Neumann) +
                   mesh.count_faces(FaceTag::Slip));
  for (int i = 0; i < mesh.n_nodes(); ++i)
    std::fprintf(f, "%.17g %.17g\n", mesh.nodes()(i, 0), mesh.nodes()(i, 1));
  for (int e = 0; e < mesh.n_elements(); ++e) {
    for (int i = 0; i < mesh.nodes_per_element(); ++i)
      std::fprintf(f, "%d ", mesh.elements()(e, i));
    std::fprintf(f, "\n");
  }
  for (const auto& fc : mesh.faces())
    if (fc.tag != FaceTag::Interior)
      std::fprintf(f, "%d %d %d\n", fc.left_elem, fc.left_face,
                   static_cast<int>(fc.tag));
  std::fclose(f);
  return path;
}

}  // namespace stokesrom::testing

#endif
