#include <random>

#include "catch_amalgamated.hpp"

#include "aldous/jacobi.hpp"
#include "oracles.hpp"

using namespace aldous;

namespace {

Eigen::MatrixXd random_symmetric(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = z(rng);
  return a;
}

}  // namespace

TEST_CASE("diagonal and 2x2 inputs") {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(3, 3);
  d.diagonal() << 3, -1, 2;
  CHECK(jacobi_eigen(d).values == std::vector<double>{-1, 2, 3});
  Eigen::MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  const auto e = jacobi_eigen(m);
  CHECK(e.values[0] == Catch::Approx(1.0).margin(1e-14));
  CHECK(e.values[1] == Catch::Approx(3.0).margin(1e-14));
}

TEST_CASE("agrees with Eigen's solver on random matrices") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const int d = 1 + t;
    const auto a = random_symmetric(d, rng);
    const auto ours = jacobi_eigen(a);
    const auto ref = oracle::eigen_values(a);
    for (int i = 0; i < d; ++i) CHECK(std::abs(ours.values[static_cast<std::size_t>(i)] - ref[static_cast<std::size_t>(i)]) < 1e-9 * std::max(1.0, a.norm()));
    CHECK(max_residual(a, ours) < 1e-9 * std::max(1.0, a.norm()));
    // orthonormal eigenvectors
    CHECK((ours.vectors.transpose() * ours.vectors - Eigen::MatrixXd::Identity(d, d)).norm() < 1e-10);
  }
}

TEST_CASE("degenerate spectra") {
  // all-ones matrix: eigenvalues 0 (d-1 times) and d
  const int d = 6;
  const Eigen::MatrixXd j = Eigen::MatrixXd::Ones(d, d);
  const auto e = jacobi_eigen(j);
  for (int i = 0; i < d - 1; ++i) CHECK(std::abs(e.values[static_cast<std::size_t>(i)]) < 1e-12);
  CHECK(e.values.back() == Catch::Approx(6.0));
}

TEST_CASE("rejects bad input") {
  CHECK_THROWS_AS(jacobi_eigen(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(jacobi_eigen(m), std::invalid_argument);
  JacobiOptions o;
  o.max_sweeps = 0;
  Eigen::MatrixXd s(2, 2);
  s << 1, 1, 1, 1;
  CHECK_THROWS_AS(jacobi_eigen(s, o), ConvergenceError);
}

TEST_CASE("empty matrix") {
  CHECK(jacobi_eigen(Eigen::MatrixXd(0, 0)).values.empty());
}
