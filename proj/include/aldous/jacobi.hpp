#pragma once

// Cyclic Jacobi eigensolver for dense real symmetric matrices.
//
// Sweeps over all (p, q) pairs in row order, annihilating a_pq with a plane
// rotation, until the off-diagonal Frobenius norm drops below tol * ||M||_F.
// Eigenvalues are then accurate to roughly tol * ||M||.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aldous {

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  double tol = 1e-12;
  int max_sweeps = 60;
  bool vectors = true;
};

struct EigenDecomposition {
  std::vector<double> values;  // nondecreasing
  Eigen::MatrixXd vectors;     // column i pairs with values[i]; empty if not requested
  int sweeps = 0;
};

inline double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

inline EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& m, const JacobiOptions& opt = {}) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigensolver needs a square matrix");
  const Eigen::Index n = m.rows();
  const double norm = m.norm();
  if ((m - m.transpose()).norm() > opt.tol * std::max(norm, 1.0))
    throw std::invalid_argument("eigensolver needs a symmetric matrix");

  Eigen::MatrixXd a = 0.5 * (m + m.transpose());
  Eigen::MatrixXd v;
  if (opt.vectors) v = Eigen::MatrixXd::Identity(n, n);

  EigenDecomposition out;
  const double target = opt.tol * norm;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweep == opt.max_sweeps)
      throw ConvergenceError("Jacobi did not converge in " + std::to_string(opt.max_sweeps) +
                             " sweeps");
    ++sweep;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Entries below the resolution of the diagonal are dropped outright.
        if (std::abs(apq) < 1e-3 * std::numeric_limits<double>::epsilon() *
                                std::min(std::abs(a(p, p)), std::abs(a(q, q)))) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the rotation in the (p, q) plane.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        if (opt.vectors) {
          for (Eigen::Index k = 0; k < n; ++k) {
            const double vkp = v(k, p), vkq = v(k, q);
            v(k, p) = c * vkp - s * vkq;
            v(k, q) = s * vkp + c * vkq;
          }
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });
  out.values.reserve(static_cast<std::size_t>(n));
  for (auto idx : order) out.values.push_back(a(idx, idx));
  if (opt.vectors) {
    out.vectors.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) out.vectors.col(c) = v.col(order[static_cast<std::size_t>(c)]);
  }
  return out;
}

// max_i ||M v_i - lambda_i v_i||
inline double max_residual(const Eigen::MatrixXd& m, const EigenDecomposition& d) {
  double worst = 0;
  for (Eigen::Index i = 0; i < d.vectors.cols(); ++i) {
    const Eigen::VectorXd r = m * d.vectors.col(i) - d.values[static_cast<std::size_t>(i)] * d.vectors.col(i);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

}  // namespace aldous
