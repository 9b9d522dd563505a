#pragma once

// Spectra of the interchange operator: the numeric route (dense matrix +
// Jacobi) and the closed forms available on the Gelfand-Tsetlin basis.
//
// Closed forms, with c_k(T) the content of the box holding label k:
//   star str_{n,k}:          (k-1) - c_k(T)            for every tableau T
//   quasi-complete sum a_k str_{n,k}:
//                            wt(G) - sum_k a_k c_k(T)
//   complete graph K_n:      C(n,2) - content_sum(shape)   (a scalar)
//   hook [n-k,1^k]:          all k-subset sums of the [n-1,1] spectrum
//
// The complete-graph scalar can also be written as
//   wt(K_n) - sum_j [C(l_j - j + 1, 2) - C(j, 2)]
// over the row lengths l_j; the bracketed sum equals content_sum(shape).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "aldous/graph.hpp"
#include "aldous/jacobi.hpp"
#include "aldous/partition.hpp"
#include "aldous/rational.hpp"
#include "aldous/symrep.hpp"

namespace aldous {

class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
  }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double lambda1() const { return values_.at(0); }
  double lambda_max() const { return values_.at(values_.size() - 1); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

class ExactSpectrum {
 public:
  ExactSpectrum() = default;
  explicit ExactSpectrum(std::vector<Rational> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
  }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Rational& lambda1() const { return values_.at(0); }
  const Rational& lambda_max() const { return values_.at(values_.size() - 1); }

  Spectrum to_numeric() const {
    std::vector<double> v;
    v.reserve(values_.size());
    for (const auto& q : values_) v.push_back(to_double(q));
    return Spectrum(std::move(v));
  }

 private:
  std::vector<Rational> values_;
};

inline constexpr double kDefaultSpectralTol = 1e-12;

inline Spectrum spectrum(const Eigen::MatrixXd& m, double tol = kDefaultSpectralTol) {
  if (m.rows() == 0) return Spectrum{};
  JacobiOptions opt;
  opt.tol = tol;
  opt.vectors = false;
  return Spectrum(jacobi_eigen(m, opt).values);
}

// Largest elementwise gap between two sorted multisets; infinity on size mismatch.
inline double multiset_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<double> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}
inline double multiset_distance(const Spectrum& a, const Spectrum& b) {
  return multiset_distance(a.values(), b.values());
}

// Whether sub is contained in super as a multiset, up to tol (greedy on sorted lists).
inline bool multiset_contains(const std::vector<double>& super, const std::vector<double>& sub, double tol) {
  std::vector<double> x = super, y = sub;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  std::size_t i = 0;
  for (double v : y) {
    while (i < x.size() && x[i] < v - tol) ++i;
    if (i == x.size() || std::abs(x[i] - v) > tol) return false;
    ++i;
  }
  return true;
}

inline Spectrum numeric_spectrum(const Partition& shape, const WeightedGraph& a,
                                 double tol = kDefaultSpectralTol) {
  return spectrum(delta_matrix(shape, a), tol);
}

inline ExactSpectrum star_spectrum(const Partition& shape, int k,
                                   std::uint64_t tableau_cap = kDefaultTableauCap) {
  if (k < 2 || k > shape.n()) throw std::invalid_argument("star index k must satisfy 2 <= k <= n");
  if (tableau_count(shape) > tableau_cap)
    throw TableauCapExceeded(shape.label() + " exceeds the tableau cap");
  std::vector<Rational> v;
  for_each_standard_tableau(shape, [&](const StandardTableau& t) {
    v.emplace_back((k - 1) - t.content_of(k));
  });
  return ExactSpectrum(std::move(v));
}

// a holds a_2..a_n. Works for any ordered field type, double or Rational.
template <class Scalar>
std::vector<Scalar> quasi_complete_values(const Partition& shape, std::span<const Scalar> a,
                                          std::uint64_t tableau_cap = kDefaultTableauCap) {
  const int n = shape.n();
  if (static_cast<int>(a.size()) != n - 1)
    throw std::invalid_argument("quasi-complete weights need n-1 entries a_2..a_n");
  Scalar wt = 0;
  for (int k = 2; k <= n; ++k) {
    const Scalar& ak = a[static_cast<std::size_t>(k - 2)];
    if (ak < 0) throw std::invalid_argument("quasi-complete weights must be nonnegative");
    wt += ak * Scalar(k - 1);
  }
  if (tableau_count(shape) > tableau_cap)
    throw TableauCapExceeded(shape.label() + " exceeds the tableau cap");
  std::vector<Scalar> out;
  for_each_standard_tableau(shape, [&](const StandardTableau& t) {
    Scalar v = wt;
    for (int k = 2; k <= n; ++k) {
      const int c = t.content_of(k);
      if (c != 0) v -= a[static_cast<std::size_t>(k - 2)] * Scalar(c);
    }
    out.push_back(std::move(v));
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline ExactSpectrum quasi_complete_spectrum(const Partition& shape, std::span<const Rational> a,
                                             std::uint64_t tableau_cap = kDefaultTableauCap) {
  return ExactSpectrum(quasi_complete_values<Rational>(shape, a, tableau_cap));
}

// Doubles convert to rationals exactly, so exact=true evaluates the formula
// on the given binary64 weights without rounding.
inline ExactSpectrum quasi_complete_spectrum(const Partition& shape, const std::vector<double>& a,
                                             bool exact, std::uint64_t tableau_cap = kDefaultTableauCap) {
  if (exact) {
    std::vector<Rational> q;
    q.reserve(a.size());
    for (double x : a) q.push_back(to_rational(x));
    return quasi_complete_spectrum(shape, std::span<const Rational>(q), tableau_cap);
  }
  auto v = quasi_complete_values<double>(shape, std::span<const double>(a), tableau_cap);
  std::vector<Rational> q;
  for (double x : v) q.push_back(to_rational(x));
  return ExactSpectrum(std::move(q));
}

// a_k = n^{-2k}, k = 2..n
inline std::vector<Rational> fast_decreasing_weights(int n) {
  std::vector<Rational> a;
  for (int k = 2; k <= n; ++k) a.push_back(rational_power(n, -2 * k));
  return a;
}

inline long long complete_graph_eigenvalue(const Partition& shape) {
  const long long n = shape.n();
  return n * (n - 1) / 2 - content_sum(shape);
}

inline Spectrum hook_spectrum(const WeightedGraph& a, int k, double tol = kDefaultSpectralTol) {
  const int n = a.n();
  if (k < 0 || k > n - 1) throw std::invalid_argument("hook index k must satisfy 0 <= k <= n-1");
  if (k == 0) return Spectrum({0.0});
  const Spectrum standard = numeric_spectrum(hook(n, 1), a, tol);
  const auto& base = standard.values();
  std::vector<double> sums;
  std::function<void(int, int, double)> rec = [&](int start, int depth, double acc) {
    if (depth == k) {
      sums.push_back(acc);
      return;
    }
    for (int i = start; i < static_cast<int>(base.size()); ++i) rec(i + 1, depth + 1, acc + base[static_cast<std::size_t>(i)]);
  };
  rec(0, 0, 0.0);
  return Spectrum(std::move(sums));
}

inline Eigen::MatrixXd laplacian(const WeightedGraph& a) {
  const int n = a.n();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : a.edges()) {
    l(e.i - 1, e.j - 1) -= e.weight;
    l(e.j - 1, e.i - 1) -= e.weight;
    l(e.i - 1, e.i - 1) += e.weight;
    l(e.j - 1, e.j - 1) += e.weight;
  }
  return l;
}

inline double laplacian_gap(const WeightedGraph& a, double tol = kDefaultSpectralTol) {
  if (a.n() < 2) return 0.0;
  return spectrum(laplacian(a), tol)[1];
}

// Dimension of the subspace of [shape] fixed by the Young subgroup that
// permutes each block of consecutive vertices; blocks given by their sizes.
// Computed as the kernel dimension of Delta for the union of block paths.
inline int young_invariant_dimension(const Partition& shape, const std::vector<int>& blocks,
                                     double zero_tol = 1e-9) {
  WeightedGraph g(shape.n());
  int start = 1, total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("block sizes must be positive");
    for (int v = start; v + 1 < start + b; ++v) g.set(v, v + 1, 1.0);
    start += b;
    total += b;
  }
  if (total != shape.n()) throw std::invalid_argument("blocks must cover 1..n");
  const Spectrum s = numeric_spectrum(shape, g);
  return static_cast<int>(std::count_if(s.values().begin(), s.values().end(),
                                        [&](double x) { return std::abs(x) < zero_tol; }));
}

}  // namespace aldous
