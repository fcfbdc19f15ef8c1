#include "stokesrom/mapping.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace stokesrom {

using Eigen::Matrix2d;
using Eigen::Vector2d;
using Eigen::VectorXd;

SeparatedMapping SeparatedMapping::identity(int n_params) {
  MappingTerm t;
  t.value = [](const Vector2d& x, const Vector2d&) { return x; };
  t.jacobian = [](const Vector2d&, const Vector2d&) { return Matrix2d::Identity().eval(); };
  t.factor = ParametricFactor::one(n_params);
  Box box;
  box.intervals.assign(n_params, {-1.0, 1.0});
  return SeparatedMapping({t}, box);
}

void SeparatedMapping::check_params(const VectorXd& mu) const {
  if (mu.size() != n_params())
    throw std::invalid_argument("SeparatedMapping: parameter dimension mismatch");
  if (!box_.contains(mu))
    throw std::out_of_range("SeparatedMapping: parameter outside its interval");
}

Vector2d SeparatedMapping::evaluate(const Vector2d& x, const VectorXd& mu,
                                    const Vector2d* probe) const {
  check_params(mu);
  const Vector2d& pr = probe ? *probe : x;
  Vector2d out = Vector2d::Zero();
  for (const auto& t : terms_) out += t.value(x, pr) * t.factor.eval(mu);
  return out;
}

Matrix2d SeparatedMapping::jacobian(const Vector2d& x, const VectorXd& mu,
                                    const Vector2d* probe) const {
  check_params(mu);
  const Vector2d& pr = probe ? *probe : x;
  Matrix2d out = Matrix2d::Zero();
  for (const auto& t : terms_) out += t.jacobian(x, pr) * t.factor.eval(mu);
  return out;
}

double SeparatedJacobian::det(const Vector2d& x, const VectorXd& mu,
                              const Vector2d* probe) const {
  const Vector2d& pr = probe ? *probe : x;
  double out = 0.0;
  for (const auto& t : det_terms) out += t.value(x, pr) * t.factor.eval(mu);
  return out;
}

Matrix2d SeparatedJacobian::adj(const Vector2d& x, const VectorXd& mu,
                                const Vector2d* probe) const {
  const Vector2d& pr = probe ? *probe : x;
  Matrix2d out = Matrix2d::Zero();
  for (const auto& t : adj_terms) out += t.value(x, pr) * t.factor.eval(mu);
  return out;
}

namespace {

Matrix2d adjugate2(const Matrix2d& J) {
  Matrix2d a;
  a << J(1, 1), -J(0, 1), -J(1, 0), J(0, 0);
  return a;
}

// polarisation of the 2x2 determinant: det(A+B) = det A + det B + cross(A,B)
double det_cross(const Matrix2d& A, const Matrix2d& B) {
  return A(0, 0) * B(1, 1) + B(0, 0) * A(1, 1) - A(0, 1) * B(1, 0) -
         B(0, 1) * A(1, 0);
}

ParametricFactor factor_product(const ParametricFactor& a,
                                const ParametricFactor& b) {
  ParametricFactor out;
  const size_t n = std::max(a.factors.size(), b.factors.size());
  out.factors.resize(n);
  for (size_t j = 0; j < n; ++j) {
    auto fa = j < a.factors.size() ? a.factors[j] : nullptr;
    auto fb = j < b.factors.size() ? b.factors[j] : nullptr;
    if (fa && fb)
      out.factors[j] = [fa, fb](double m) { return fa(m) * fb(m); };
    else if (fa)
      out.factors[j] = fa;
    else
      out.factors[j] = fb;
  }
  return out;
}

}  // namespace

SeparatedJacobian separate_det_adj(const SeparatedMapping& m) {
  SeparatedJacobian sj;
  sj.jac_terms = m.terms();
  sj.box = m.param_box();
  const int nM = m.n_terms();
  for (int k = 0; k < nM; ++k) {
    const auto& tk = m.terms()[k];
    AdjTerm at;
    at.value = [jac = tk.jacobian](const Vector2d& x, const Vector2d& pr) {
      return adjugate2(jac(x, pr)).eval();
    };
    at.factor = tk.factor;
    sj.adj_terms.push_back(std::move(at));

    for (int l = k; l < nM; ++l) {
      const auto& tl = m.terms()[l];
      DetTerm dt;
      if (l == k) {
        dt.value = [jac = tk.jacobian](const Vector2d& x, const Vector2d& pr) {
          return jac(x, pr).determinant();
        };
        dt.factor = factor_product(tk.factor, tk.factor);
      } else {
        dt.value = [ja = tk.jacobian, jb = tl.jacobian](const Vector2d& x,
                                                        const Vector2d& pr) {
          return det_cross(ja(x, pr), jb(x, pr));
        };
        dt.factor = factor_product(tk.factor, tl.factor);
      }
      sj.det_terms.push_back(std::move(dt));
    }
  }
  return sj;
}

SeparatedMapping compose_mappings(const SeparatedMapping& a,
                                  const SeparatedMapping& b,
                                  std::optional<double> reseparation_tol) {
  if (a.n_params() != b.n_params())
    throw std::invalid_argument("compose_mappings: parameter dimension mismatch");
  const double tol = reseparation_tol.value_or(1e-12);

  // sampled invariance check: b's non-identity spatial fields must not see
  // the deformation of a
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto sample_mu = [&](const Box& box) {
    VectorXd mu(box.dim());
    for (int j = 0; j < box.dim(); ++j)
      mu(j) = box.intervals[j][0] +
              unif(rng) * (box.intervals[j][1] - box.intervals[j][0]);
    return mu;
  };

  std::vector<MappingTerm> terms;
  for (const auto& tb : b.terms()) {
    // identity term of b? detect by value(x)=x at samples
    bool is_identity = true;
    for (int s = 0; s < 8 && is_identity; ++s) {
      Vector2d x(unif(rng) * 4.0 - 2.0, unif(rng) * 2.0);
      if ((tb.value(x, x) - x).norm() > 1e-14) is_identity = false;
    }
    if (is_identity) {
      for (const auto& ta : a.terms()) {
        MappingTerm t = ta;
        t.factor = factor_product(ta.factor, tb.factor);
        terms.push_back(std::move(t));
      }
    } else {
      double defect = 0.0;
      for (int s = 0; s < 64; ++s) {
        Vector2d x(unif(rng) * 8.0 - 4.0, unif(rng) * 2.0);
        const VectorXd mu = sample_mu(a.param_box());
        const Vector2d xa = a.evaluate(x, mu, &x);
        defect = std::max(defect, (tb.value(xa, xa) - tb.value(x, x)).norm());
      }
      if (defect > tol)
        throw std::runtime_error(
            "compose_mappings: composition is not separable within tolerance");
      terms.push_back(tb);
    }
  }
  return SeparatedMapping(std::move(terms), a.param_box());
}

double SwimmerGeometry::distance_profile(double x) const {
  const double xl = x0 - R_int, xr = x0 + R_int;
  if (x <= -xr) return (x + L) / (xr - L);
  if (x <= -xl) return -1.0;
  if (x <= xl) return x / xl;
  if (x <= xr) return 1.0;
  return (x - L) / (xr - L);
}

double SwimmerGeometry::distance_profile_slope(double x) const {
  const double xl = x0 - R_int, xr = x0 + R_int;
  if (x < -xr) return 1.0 / (xr - L);
  if (x < -xl) return 0.0;
  if (x < xl) return 1.0 / xl;
  if (x < xr) return 0.0;
  return 1.0 / (xr - L);
}

namespace {

// region classifiers for the swimmer maps, decided from the probe point
enum class Disk { Plus, Minus, Outside };

Disk disk_region(const Vector2d& probe, const SwimmerGeometry& g) {
  const Vector2d cp(g.x0, 0.0), cm(-g.x0, 0.0);
  if ((probe - cp).norm() <= g.R_out) return Disk::Plus;
  if ((probe + cp).norm() <= g.R_out) return Disk::Minus;
  return Disk::Outside;
}

}  // namespace

SeparatedMapping radius_mapping(const SwimmerGeometry& g, int n_params, int dim) {
  const double Rr = g.R_ref, Ro = g.R_out;
  const Vector2d c(g.x0, 0.0);

  auto radial = [](const Vector2d& v) {
    const double r = v.norm();
    Matrix2d J = Matrix2d::Identity() / r - v * v.transpose() / (r * r * r);
    return J;
  };

  auto make_factor = [&](std::function<double(double)> f) {
    ParametricFactor pf = ParametricFactor::one(n_params);
    pf.factors[dim] = std::move(f);
    return pf;
  };

  std::vector<MappingTerm> T(6);
  // terms 1-3 act in the disk around +x0, 4-6 in the disk around -x0;
  // the identity outside both disks is split between the two unit-factor terms
  T[0].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    if (disk_region(pr, g) != Disk::Plus) return Vector2d::Zero();
    const Vector2d v = x - c;
    return v / v.norm();
  };
  T[0].jacobian = [g, c, radial](const Vector2d& x, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) != Disk::Plus) return Matrix2d::Zero();
    return radial(x - c);
  };
  T[0].factor = make_factor([g, Ro, Rr](double m) {
    return Ro * (g.R_plus(m) - Rr) / (Ro - Rr);
  });

  T[1].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    if (disk_region(pr, g) != Disk::Plus) return Vector2d::Zero();
    return x - c;
  };
  T[1].jacobian = [g](const Vector2d&, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) != Disk::Plus) return Matrix2d::Zero();
    return Matrix2d::Identity();
  };
  T[1].factor = make_factor([g, Ro, Rr](double m) {
    return (Ro - g.R_plus(m)) / (Ro - Rr);
  });

  T[2].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    const Disk d = disk_region(pr, g);
    if (d == Disk::Plus) return c;
    if (d == Disk::Outside) return 0.5 * x;
    return Vector2d::Zero();
  };
  T[2].jacobian = [g](const Vector2d&, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) == Disk::Outside)
      return (0.5 * Matrix2d::Identity()).eval();
    return Matrix2d::Zero();
  };
  T[2].factor = make_factor([](double) { return 1.0; });

  T[3].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    if (disk_region(pr, g) != Disk::Minus) return Vector2d::Zero();
    const Vector2d v = x + c;
    return v / v.norm();
  };
  T[3].jacobian = [g, c, radial](const Vector2d& x, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) != Disk::Minus) return Matrix2d::Zero();
    return radial(x + c);
  };
  T[3].factor = make_factor([g, Ro, Rr](double m) {
    return Ro * (g.R_minus(m) - Rr) / (Ro - Rr);
  });

  T[4].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    if (disk_region(pr, g) != Disk::Minus) return Vector2d::Zero();
    return x + c;
  };
  T[4].jacobian = [g](const Vector2d&, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) != Disk::Minus) return Matrix2d::Zero();
    return Matrix2d::Identity();
  };
  T[4].factor = make_factor([g, Ro, Rr](double m) {
    return (Ro - g.R_minus(m)) / (Ro - Rr);
  });

  T[5].value = [g, c](const Vector2d& x, const Vector2d& pr) -> Vector2d {
    const Disk d = disk_region(pr, g);
    if (d == Disk::Minus) return -c;
    if (d == Disk::Outside) return 0.5 * x;
    return Vector2d::Zero();
  };
  T[5].jacobian = [g](const Vector2d&, const Vector2d& pr) -> Matrix2d {
    if (disk_region(pr, g) == Disk::Outside)
      return (0.5 * Matrix2d::Identity()).eval();
    return Matrix2d::Zero();
  };
  T[5].factor = make_factor([](double) { return 1.0; });

  Box box;
  box.intervals.assign(n_params, {-1.0, 1.0});
  return SeparatedMapping(std::move(T), box);
}

SeparatedMapping distance_mapping(const SwimmerGeometry& g,
                                  std::array<double, 2> interval, int n_params,
                                  int dim) {
  auto make_factor = [&](std::function<double(double)> f) {
    ParametricFactor pf = ParametricFactor::one(n_params);
    pf.factors[dim] = std::move(f);
    return pf;
  };

  std::vector<MappingTerm> T(2);
  T[0].value = [g](const Vector2d&, const Vector2d& pr) -> Vector2d {
    return Vector2d(g.distance_profile(pr(0)), 0.0);
  };
  T[0].jacobian = [g](const Vector2d&, const Vector2d& pr) -> Matrix2d {
    Matrix2d J = Matrix2d::Zero();
    J(0, 0) = g.distance_profile_slope(pr(0));
    return J;
  };
  T[0].factor = make_factor([x0 = g.x0](double m) { return -x0 * m / 3.0; });

  T[1].value = [](const Vector2d& x, const Vector2d&) { return x; };
  T[1].jacobian = [](const Vector2d&, const Vector2d&) {
    return Matrix2d::Identity().eval();
  };
  T[1].factor = make_factor([](double) { return 1.0; });

  Box box;
  box.intervals.assign(n_params, {-1.0, 1.0});
  box.intervals[dim] = {interval[0], interval[1]};
  return SeparatedMapping(std::move(T), box);
}

Eigen::VectorXd scaled_jacobian_quality(const ReferenceMesh& mesh,
                                        const SeparatedMapping& m,
                                        const VectorXd& mu) {
  const int k = mesh.degree();
  TriangleBasis basis(k);
  TriangleQuadrature quad = triangle_quadrature(2 * k + 2);
  Eigen::MatrixXd dX, dY;
  basis.grad(quad.points, dX, dY);

  const Eigen::MatrixXd N = basis.eval(quad.points);

  Eigen::VectorXd quality(mesh.n_elements());
  const int nq = static_cast<int>(quad.weights.size());
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto X = mesh.element_coords(e);
    const Vector2d probe = mesh.element_centroid(e);
    double dmin = std::numeric_limits<double>::max();
    double dsum = 0.0;
    for (int q = 0; q < nq; ++q) {
      Matrix2d Jiso;  // J(i,j) = d x_i / d xi_j
      Jiso(0, 0) = dX.row(q).dot(X.col(0));
      Jiso(0, 1) = dY.row(q).dot(X.col(0));
      Jiso(1, 0) = dX.row(q).dot(X.col(1));
      Jiso(1, 1) = dY.row(q).dot(X.col(1));
      const Vector2d xq(N.row(q).dot(X.col(0)), N.row(q).dot(X.col(1)));
      const Matrix2d Jm = m.jacobian(xq, mu, &probe);
      const double d = (Jm * Jiso).determinant();
      dmin = std::min(dmin, d);
      dsum += d;
    }
    quality(e) = dmin / (dsum / nq);
  }
  return quality;
}

}  // namespace stokesrom
