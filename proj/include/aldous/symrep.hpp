#pragma once

// Orthogonal matrices of the irreducible representations of S_n, built in
// Young's orthogonal form. The basis is indexed by standard tableaux in the
// canonical enumeration order of for_each_standard_tableau; that basis is
// the Gelfand-Tsetlin basis, on which every Jucys-Murphy star operator is
// diagonal.
//
// For T a tableau and s_i = (i, i+1):
//   i, i+1 in the same row     -> s_i T = T
//   i, i+1 in the same column  -> s_i T = -T
//   otherwise, with d = content(i+1) - content(i) in T and T' = T with i, i+1
//   swapped,  s_i T = (1/d) T + sqrt(1 - 1/d^2) T'.
//
// Also provides the permutation action on colorings L^2(Q(shape)) and the
// left regular representation, both used as independent oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "aldous/graph.hpp"
#include "aldous/partition.hpp"
#include "aldous/permutation.hpp"

namespace aldous {

class DimensionCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t default_dim_cap() {
  if (const char* env = std::getenv("ALDOUS_DIM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

struct RepMatrix {
  Partition shape;
  Eigen::MatrixXd entries;
  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

// Sparse image of one adjacent transposition: row r has entry diag[r] at
// column r and off[r] at column partner[r] (partner[r] == r when off[r] == 0).
struct AdjacentAction {
  std::vector<std::size_t> partner;
  std::vector<double> diag;
  std::vector<double> off;

  // X <- S X
  void left_multiply(Eigen::MatrixXd& x) const {
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (std::size_t r = 0; r < diag.size(); ++r) {
      const auto ri = static_cast<Eigen::Index>(r);
      out.row(ri) = diag[r] * x.row(ri);
      if (off[r] != 0.0) out.row(ri) += off[r] * x.row(static_cast<Eigen::Index>(partner[r]));
    }
    x.swap(out);
  }
  // X <- X S  (S is symmetric)
  void right_multiply(Eigen::MatrixXd& x) const {
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (std::size_t c = 0; c < diag.size(); ++c) {
      const auto ci = static_cast<Eigen::Index>(c);
      out.col(ci) = diag[c] * x.col(ci);
      if (off[c] != 0.0) out.col(ci) += off[c] * x.col(static_cast<Eigen::Index>(partner[c]));
    }
    x.swap(out);
  }
  Eigen::MatrixXd dense() const {
    const auto d = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t r = 0; r < diag.size(); ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(r)) = diag[r];
      if (off[r] != 0.0)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(partner[r])) = off[r];
    }
    return m;
  }
};

class IrrepModel {
 public:
  // Transposition images are cached only up to this dimension.
  static constexpr std::size_t kCacheDimLimit = 256;

  explicit IrrepModel(Partition shape, std::size_t dim_cap = default_dim_cap())
      : shape_(std::move(shape)) {
    const std::uint64_t count = tableau_count(shape_);
    if (count > dim_cap)
      throw DimensionCapExceeded(shape_.label() + " has dimension " + std::to_string(count) +
                                 ", above the cap of " + std::to_string(dim_cap));
    tableaux_ = standard_tableaux(shape_);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(tableaux_.size());
    for (std::size_t t = 0; t < tableaux_.size(); ++t) index.emplace(key(tableaux_[t].row_word()), t);

    const int n = shape_.n();
    adjacent_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int i = 1; i < n; ++i) {
      AdjacentAction& act = adjacent_[static_cast<std::size_t>(i - 1)];
      act.partner.resize(tableaux_.size());
      act.diag.resize(tableaux_.size());
      act.off.assign(tableaux_.size(), 0.0);
      for (std::size_t t = 0; t < tableaux_.size(); ++t) {
        const Box a = tableaux_[t].box_of(i);
        const Box b = tableaux_[t].box_of(i + 1);
        act.partner[t] = t;
        if (a.row == b.row) {
          act.diag[t] = 1.0;
        } else if (a.col == b.col) {
          act.diag[t] = -1.0;
        } else {
          const double d = static_cast<double>(b.content() - a.content());
          auto word = tableaux_[t].row_word();
          std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(i)]);
          act.partner[t] = index.at(key(word));
          act.diag[t] = 1.0 / d;
          act.off[t] = std::sqrt(1.0 - 1.0 / (d * d));
        }
      }
    }
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  std::size_t dim() const { return tableaux_.size(); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

  const AdjacentAction& adjacent(int i) const {
    if (i < 1 || i >= n()) throw std::out_of_range("adjacent transposition index out of range");
    return adjacent_[static_cast<std::size_t>(i - 1)];
  }

  Eigen::MatrixXd identity() const {
    const auto d = static_cast<Eigen::Index>(dim());
    return Eigen::MatrixXd::Identity(d, d);
  }

  // Image of the transposition (i j); (i j) = s_{j-1} (i j-1) s_{j-1}.
  Eigen::MatrixXd transposition(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n() || i == j) throw std::out_of_range("transposition index out of range");
    if (dim() > kCacheDimLimit) return transposition_uncached(i, j);
    const std::uint64_t k = static_cast<std::uint64_t>(i) * 1024u + static_cast<std::uint64_t>(j);
    {
      std::shared_lock lock(cache_mutex_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return it->second;
    }
    Eigen::MatrixXd m;
    if (j == i + 1) {
      m = adjacent(i).dense();
    } else {
      m = transposition(i, j - 1);
      adjacent(j - 1).left_multiply(m);
      adjacent(j - 1).right_multiply(m);
    }
    std::unique_lock lock(cache_mutex_);
    return cache_.emplace(k, std::move(m)).first->second;
  }

  Eigen::MatrixXd permutation(const Permutation& g) const {
    if (g.n() != n()) throw std::invalid_argument("permutation degree does not match the shape");
    Eigen::MatrixXd m = identity();
    const auto word = g.adjacent_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) adjacent(*it).left_multiply(m);
    return m;
  }

  // sum_{i<j} a_ij (I - rho((i j)))
  Eigen::MatrixXd delta(const WeightedGraph& a) const {
    check_graph(a);
    const auto d = static_cast<Eigen::Index>(dim());
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
    const int nn = n();
    for (int i = 1; i < nn; ++i) {
      int last = 0;
      for (int j = i + 1; j <= nn; ++j)
        if (a.weight(i, j) > 0) last = j;
      if (last == 0) continue;
      if (dim() <= kCacheDimLimit) {
        for (int j = i + 1; j <= last; ++j)
          if (a.weight(i, j) > 0) accumulate(out, a.weight(i, j), transposition(i, j));
      } else {
        Eigen::MatrixXd cur = adjacent(i).dense();
        for (int j = i + 1; j <= last; ++j) {
          if (j > i + 1) {
            adjacent(j - 1).left_multiply(cur);
            adjacent(j - 1).right_multiply(cur);
          }
          if (a.weight(i, j) > 0) accumulate(out, a.weight(i, j), cur);
        }
      }
    }
    return out;
  }

 private:
  static std::string key(const std::vector<int>& word) {
    std::string s;
    s.reserve(word.size());
    for (int r : word) s.push_back(static_cast<char>(r));
    return s;
  }

  static void accumulate(Eigen::MatrixXd& out, double w, const Eigen::MatrixXd& t) {
    out.diagonal().array() += w;
    out.noalias() -= w * t;
  }

  void check_graph(const WeightedGraph& a) const {
    if (a.n() != n())
      throw std::invalid_argument("graph has " + std::to_string(a.n()) + " vertices but " +
                                  shape_.label() + " is a partition of " + std::to_string(n()));
  }

  Eigen::MatrixXd transposition_uncached(int i, int j) const {
    Eigen::MatrixXd m = adjacent(i).dense();
    for (int t = i + 2; t <= j; ++t) {
      adjacent(t - 1).left_multiply(m);
      adjacent(t - 1).right_multiply(m);
    }
    return m;
  }

  Partition shape_;
  std::vector<StandardTableau> tableaux_;
  std::vector<AdjacentAction> adjacent_;
  mutable std::shared_mutex cache_mutex_;
  mutable std::map<std::uint64_t, Eigen::MatrixXd> cache_;
};

// Process-wide registry so repeated queries on one shape share a model.
inline std::shared_ptr<const IrrepModel> irrep_model(const Partition& shape,
                                                     std::size_t dim_cap = default_dim_cap()) {
  static std::mutex mutex;
  static std::map<Partition, std::shared_ptr<const IrrepModel>> models;
  {
    std::lock_guard lock(mutex);
    auto it = models.find(shape);
    if (it != models.end()) {
      if (it->second->dim() > dim_cap)
        throw DimensionCapExceeded(shape.label() + " exceeds the dimension cap");
      return it->second;
    }
  }
  auto model = std::make_shared<const IrrepModel>(shape, dim_cap);
  std::lock_guard lock(mutex);
  return models.emplace(shape, std::move(model)).first->second;
}

inline RepMatrix rep_adjacent(const Partition& shape, int i) {
  auto model = irrep_model(shape);
  if (i < 1 || i >= shape.n()) throw std::out_of_range("adjacent transposition index out of range");
  return {shape, model->adjacent(i).dense()};
}

inline RepMatrix rep_permutation(const Partition& shape, const Permutation& g) {
  return {shape, irrep_model(shape)->permutation(g)};
}

inline Eigen::MatrixXd delta_matrix(const Partition& shape, const WeightedGraph& a) {
  return irrep_model(shape)->delta(a);
}

// rho(g) (x) sgn.
inline RepMatrix tensor_sign(const RepMatrix& m, const Permutation& g) {
  return {m.shape, static_cast<double>(g.sign()) * m.entries};
}

// The interchange operator on shape (x) sgn, realized in the basis of shape:
// sum a_ij (I + rho((i j))) = 2 wt(A) I - delta.
inline Eigen::MatrixXd sign_twisted_delta(const Partition& shape, const WeightedGraph& a) {
  Eigen::MatrixXd d = -delta_matrix(shape, a);
  d.diagonal().array() += 2.0 * a.total_weight();
  return d;
}

// n! / prod_i shape_i!
inline double coloring_count(const Partition& shape) {
  double v = 1;
  int k = 0;
  for (int len : shape.parts())
    for (int t = 1; t <= len; ++t) v = v * static_cast<double>(++k) / static_cast<double>(t);
  return std::round(v);
}

// Colorings q: {1..n} -> {1..m} with #q^{-1}(i) = shape_i, in lexicographic
// order of the color word.
class ColoringSpace {
 public:
  ColoringSpace(Partition shape, std::size_t size_cap) : shape_(std::move(shape)) {
    std::vector<int> word;
    for (int c = 1; c <= shape_.rows(); ++c) word.insert(word.end(), static_cast<std::size_t>(shape_.row(c)), c);
    const double size = multinomial();
    if (size > static_cast<double>(size_cap))
      throw DimensionCapExceeded("coloring space of " + shape_.label() + " has " +
                                 std::to_string(static_cast<long long>(size)) + " elements, above the cap");
    do {
      index_.emplace(key(word), colorings_.size());
      colorings_.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
  }

  const Partition& shape() const { return shape_; }
  std::size_t size() const { return colorings_.size(); }
  const std::vector<int>& coloring(std::size_t idx) const { return colorings_[idx]; }
  std::size_t index_of(const std::vector<int>& q) const { return index_.at(key(q)); }

  double multinomial() const { return coloring_count(shape_); }

 private:
  static std::string key(const std::vector<int>& q) {
    std::string s;
    for (int c : q) s.push_back(static_cast<char>(c));
    return s;
  }
  Partition shape_;
  std::vector<std::vector<int>> colorings_;
  std::unordered_map<std::string, std::size_t> index_;
};

// sum a_ij (id - (ij)) on L^2(Q(shape)), (g f)(q) = f(g^{-1} q).
inline Eigen::MatrixXd l2q_delta(const Partition& shape, const WeightedGraph& a,
                                 std::size_t size_cap = default_dim_cap()) {
  if (a.n() != shape.n()) throw std::invalid_argument("graph size does not match the shape");
  ColoringSpace space(shape, size_cap);
  const auto d = static_cast<Eigen::Index>(space.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  const auto edges = a.edges();
  for (std::size_t idx = 0; idx < space.size(); ++idx) {
    const auto& q = space.coloring(idx);
    for (const auto& e : edges) {
      const auto qi = q[static_cast<std::size_t>(e.i - 1)];
      const auto qj = q[static_cast<std::size_t>(e.j - 1)];
      if (qi == qj) continue;
      auto swapped = q;
      std::swap(swapped[static_cast<std::size_t>(e.i - 1)], swapped[static_cast<std::size_t>(e.j - 1)]);
      const auto r = static_cast<Eigen::Index>(idx);
      m(r, r) += e.weight;
      m(r, static_cast<Eigen::Index>(space.index_of(swapped))) -= e.weight;
    }
  }
  return m;
}

inline constexpr int kRegularDefaultCap = 5;
inline constexpr int kRegularHardCap = 6;

// Delta_A acting by left multiplication on the group algebra, basis = S_n in
// lexicographic order of one-line words.
inline Eigen::MatrixXd regular_delta(const WeightedGraph& a, int n_cap = kRegularDefaultCap) {
  const int n = a.n();
  if (n > std::min(n_cap, kRegularHardCap))
    throw DimensionCapExceeded("regular representation refused for n = " + std::to_string(n));
  std::vector<std::vector<int>> perms;
  std::map<std::vector<int>, std::size_t> index;
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    index.emplace(w, perms.size());
    perms.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  const auto d = static_cast<Eigen::Index>(perms.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  m.diagonal().array() += a.total_weight();
  for (const auto& e : a.edges()) {
    for (std::size_t g = 0; g < perms.size(); ++g) {
      // ((i j) o g)(x) = (i j)(g(x))
      auto h = perms[g];
      for (int& v : h) {
        if (v == e.i) v = e.j;
        else if (v == e.j) v = e.i;
      }
      m(static_cast<Eigen::Index>(index.at(h)), static_cast<Eigen::Index>(g)) -= e.weight;
    }
  }
  return m;
}

}  // namespace aldous
