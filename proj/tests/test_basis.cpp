#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stokesrom/basis.hpp"

using namespace stokesrom;

namespace {

// P_k'(x) via recurrence, used as an independent oracle for the k=4 nodes
double legendre_deriv(int k, double x) {
  double p0 = 1.0, p1 = x;
  for (int n = 1; n < k; ++n) {
    const double p2 = ((2.0 * n + 1.0) * x * p1 - n * p0) / (n + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return k * (x * p1 - p0) / (x * x - 1.0);
}

double bisect_root(int k, double lo, double hi) {
  double flo = legendre_deriv(k, lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = legendre_deriv(k, mid);
    if (flo * fm <= 0.0)
      hi = mid;
    else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("fekete nodes small degrees") {
  auto n1 = fekete_nodes_1d(1);
  CHECK(n1(0) == -1.0);
  CHECK(n1(1) == 1.0);
  auto n2 = fekete_nodes_1d(2);
  CHECK(n2(1) == 0.0);
  CHECK_THROWS(fekete_nodes_1d(0));
}

TEST_CASE("fekete nodes k=4 match Legendre-derivative roots") {
  auto n4 = fekete_nodes_1d(4);
  REQUIRE(n4.size() == 5);
  // positive interior root of P_4'
  const double r = bisect_root(4, 0.2, 0.99);
  CHECK(n4(0) == doctest::Approx(-1.0));
  CHECK(n4(1) == doctest::Approx(-r).epsilon(1e-12));
  CHECK(n4(2) == doctest::Approx(0.0));
  CHECK(n4(3) == doctest::Approx(r).epsilon(1e-12));
  CHECK(n4(4) == doctest::Approx(1.0));
}

TEST_CASE("1d lagrange partition of unity and delta") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int k = 1; k <= 4; ++k) {
    Lagrange1d b(fekete_nodes_1d(k));
    for (int i = 0; i <= k; ++i) {
      auto v = b.eval(b.nodes()(i));
      for (int j = 0; j <= k; ++j)
        CHECK(std::abs(v(j) - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
    for (int s = 0; s < 100; ++s) {
      const double x = unif(rng);
      CHECK(std::abs(b.eval(x).sum() - 1.0) < 1e-12);
      CHECK(std::abs(b.deriv(x).sum()) < 1e-11);
    }
  }
}

TEST_CASE("triangle basis partition of unity and delta, k<=4") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int k = 1; k <= 4; ++k) {
    TriangleBasis b(k);
    auto N = b.eval(b.nodes());
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < b.size(); ++j)
        CHECK(std::abs(N(i, j) - (i == j ? 1.0 : 0.0)) < 1e-12);

    Eigen::Matrix<double, Eigen::Dynamic, 2> pts(100, 2);
    for (int s = 0; s < 100; ++s) {
      double a = unif(rng), c = unif(rng);
      if (a + c > 1.0) {
        a = 1.0 - a;
        c = 1.0 - c;
      }
      pts(s, 0) = a;
      pts(s, 1) = c;
    }
    auto V = b.eval(pts);
    Eigen::MatrixXd dx, dy;
    b.grad(pts, dx, dy);
    for (int s = 0; s < 100; ++s) {
      CHECK(std::abs(V.row(s).sum() - 1.0) < 1e-12);
      CHECK(std::abs(dx.row(s).sum()) < 1e-11);
      CHECK(std::abs(dy.row(s).sum()) < 1e-11);
    }
  }
}

TEST_CASE("triangle basis reproduces polynomials and their gradients") {
  TriangleBasis b(3);
  // f = x^2 y - 2 x y + y^3 interpolated exactly at degree 3
  auto f = [](double x, double y) { return x * x * y - 2 * x * y + y * y * y; };
  auto fx = [](double x, double y) { return 2 * x * y - 2 * y; };
  auto fy = [](double x, double y) { return x * x - 2 * x + 3 * y * y; };
  Eigen::VectorXd coef(b.size());
  for (int i = 0; i < b.size(); ++i) coef(i) = f(b.nodes()(i, 0), b.nodes()(i, 1));
  Eigen::Matrix<double, Eigen::Dynamic, 2> pts(3, 2);
  pts << 0.31, 0.22, 0.05, 0.9, 0.4, 0.4;
  auto V = b.eval(pts);
  Eigen::MatrixXd dx, dy;
  b.grad(pts, dx, dy);
  for (int s = 0; s < 3; ++s) {
    CHECK(V.row(s).dot(coef) == doctest::Approx(f(pts(s, 0), pts(s, 1))).epsilon(1e-12));
    CHECK(dx.row(s).dot(coef) == doctest::Approx(fx(pts(s, 0), pts(s, 1))).epsilon(1e-11));
    CHECK(dy.row(s).dot(coef) == doctest::Approx(fy(pts(s, 0), pts(s, 1))).epsilon(1e-11));
  }
}
