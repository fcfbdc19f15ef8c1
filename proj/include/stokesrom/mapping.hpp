#ifndef STOKESROM_MAPPING_HPP
#define STOKESROM_MAPPING_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "stokesrom/mesh.hpp"

namespace stokesrom {

// Scalar factor of one separated term, factorised per parameter:
// phi(mu) = prod_j factors[j](mu_j). Missing entries count as 1.
struct ParametricFactor {
  std::vector<std::function<double(double)>> factors;

  double eval(const Eigen::VectorXd& mu) const {
    double p = 1.0;
    for (size_t j = 0; j < factors.size(); ++j)
      if (factors[j]) p *= factors[j](mu(static_cast<int>(j)));
    return p;
  }
  double eval_dim(int j, double mu_j) const {
    if (j >= static_cast<int>(factors.size()) || !factors[j]) return 1.0;
    return factors[j](mu_j);
  }
  static ParametricFactor one(int n_params) {
    ParametricFactor f;
    f.factors.assign(n_params, nullptr);
    return f;
  }
};

// Spatial fields are closed-form functors. Piecewise definitions decide the
// branch from the probe point (an element interior point), so that face
// quadrature points lying exactly on a piecewise interface are evaluated
// with the adjacent element's branch.
using SpatialField2 = std::function<Eigen::Vector2d(const Eigen::Vector2d& x,
                                                    const Eigen::Vector2d& probe)>;
using SpatialField22 = std::function<Eigen::Matrix2d(const Eigen::Vector2d& x,
                                                     const Eigen::Vector2d& probe)>;
using SpatialField1 = std::function<double(const Eigen::Vector2d& x,
                                           const Eigen::Vector2d& probe)>;

struct MappingTerm {
  SpatialField2 value;
  SpatialField22 jacobian;  // spatial gradient of value
  ParametricFactor factor;
};

struct Box {
  std::vector<std::array<double, 2>> intervals;
  int dim() const { return static_cast<int>(intervals.size()); }
  bool contains(const Eigen::VectorXd& mu, double tol = 1e-12) const {
    for (int j = 0; j < dim(); ++j)
      if (mu(j) < intervals[j][0] - tol || mu(j) > intervals[j][1] + tol)
        return false;
    return true;
  }
};

class SeparatedMapping {
 public:
  SeparatedMapping(std::vector<MappingTerm> terms, Box box)
      : terms_(std::move(terms)), box_(std::move(box)) {}

  static SeparatedMapping identity(int n_params);

  int n_terms() const { return static_cast<int>(terms_.size()); }
  int n_params() const { return box_.dim(); }
  const std::vector<MappingTerm>& terms() const { return terms_; }
  const Box& param_box() const { return box_; }

  Eigen::Vector2d evaluate(const Eigen::Vector2d& x, const Eigen::VectorXd& mu,
                           const Eigen::Vector2d* probe = nullptr) const;
  Eigen::Matrix2d jacobian(const Eigen::Vector2d& x, const Eigen::VectorXd& mu,
                           const Eigen::Vector2d* probe = nullptr) const;

  void check_params(const Eigen::VectorXd& mu) const;

 private:
  std::vector<MappingTerm> terms_;
  Box box_;
};

struct DetTerm {
  SpatialField1 value;
  ParametricFactor factor;
};
struct AdjTerm {
  SpatialField22 value;
  ParametricFactor factor;
};

// Exact separated determinant and adjugate of the mapping Jacobian (2d):
// det is bilinear in the J^k, adj is linear, so
//   det(J) = sum_{k<=l} D^{kl} phi^k phi^l   (n_M(n_M+1)/2 terms)
//   adj(J) = sum_k adj(J^k) phi^k            (n_M terms, adj = det J . J^{-1})
struct SeparatedJacobian {
  std::vector<MappingTerm> jac_terms;
  std::vector<DetTerm> det_terms;
  std::vector<AdjTerm> adj_terms;
  Box box;

  int n_det() const { return static_cast<int>(det_terms.size()); }
  int n_adj() const { return static_cast<int>(adj_terms.size()); }

  double det(const Eigen::Vector2d& x, const Eigen::VectorXd& mu,
             const Eigen::Vector2d* probe = nullptr) const;
  Eigen::Matrix2d adj(const Eigen::Vector2d& x, const Eigen::VectorXd& mu,
                      const Eigen::Vector2d* probe = nullptr) const;
};

SeparatedJacobian separate_det_adj(const SeparatedMapping& m);

// Composition b(a(x, mu_a), mu_b) for mappings whose non-identity terms of b
// are invariant under a on the deformable support (checked by sampling).
// Without a tolerance any sampled invariance defect larger than 1e-12 rejects
// the composition; a supplied tolerance accepts defects up to it.
SeparatedMapping compose_mappings(const SeparatedMapping& a,
                                  const SeparatedMapping& b,
                                  std::optional<double> reseparation_tol = {});

// Reference geometry of the two-bladder swimmer.
struct SwimmerGeometry {
  double L = 6.0;
  double H = 2.0;
  double x0 = 1.5;        // sphere centres at (+-x0, 0)
  double R_ref = 0.116;
  double R_out = 0.45;
  double R_int = 0.47;

  double R_plus(double mu1) const {
    return -0.0372 * mu1 * mu1 + 0.0968 * mu1 + 0.25;
  }
  double R_minus(double mu1) const {
    const double rp = R_plus(mu1);
    return std::cbrt(1.0 / 32.0 - rp * rp * rp);
  }
  double distance_profile(double x) const;        // piecewise d(x)
  double distance_profile_slope(double x) const;  // d'(x)
};

// Radius mapping: 6 terms, mu_1 in [-1,1]. Takes `dim` = index of mu_1 within
// the parameter box and the total number of parameters.
SeparatedMapping radius_mapping(const SwimmerGeometry& g, int n_params = 1,
                                int dim = 0);
// Distance mapping: 2 terms (piecewise translation + identity).
SeparatedMapping distance_mapping(const SwimmerGeometry& g,
                                  std::array<double, 2> interval,
                                  int n_params = 1, int dim = 0);

// Scaled-Jacobian mesh quality per element: min over volume quadrature points
// of det(J_mu J_iso), normalised by the element mean. 1 for undeformed affine
// elements, negative when inverted.
Eigen::VectorXd scaled_jacobian_quality(const ReferenceMesh& mesh,
                                        const SeparatedMapping& m,
                                        const Eigen::VectorXd& mu);

}  // namespace stokesrom

#endif
