#pragma once

// Symmetric nonnegative edge weights on vertices 1..n, the data of the
// interchange operator. Also the named graph families and the graph JSON
// format {"n": int, "edges": [[i, j, weight], ...]} (1-based, i < j).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace aldous {

struct Edge {
  int i;
  int j;
  double weight;
};

class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(int n) : n_(n), w_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  }

  WeightedGraph(int n, const std::vector<Edge>& edges) : WeightedGraph(n) {
    for (const auto& e : edges) add(e.i, e.j, e.weight);
  }

  int n() const { return n_; }

  double weight(int i, int j) const {
    return w_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
  }

  void set(int i, int j, double w) {
    check_pair(i, j);
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("edge weights must be finite and nonnegative");
    at(i, j) = w;
    at(j, i) = w;
    wt_ = 0.0;
    for (int a = 1; a <= n_; ++a)
      for (int b = a + 1; b <= n_; ++b) wt_ += weight(a, b);
  }

  void add(int i, int j, double w) { set(i, j, weight(i, j) + w); }

  // Sum over unordered pairs.
  double total_weight() const { return wt_; }

  double vertex_weight(int v) const {
    double s = 0;
    for (int j = 1; j <= n_; ++j) s += weight(v, j);
    return s;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (weight(i, j) > 0) out.push_back({i, j, weight(i, j)});
    return out;
  }

  bool is_zero() const { return edges().empty(); }

  WeightedGraph scaled(double c) const {
    WeightedGraph g(n_);
    for (const auto& e : edges()) g.set(e.i, e.j, c * e.weight);
    return g;
  }

  WeightedGraph relabeled(const std::vector<int>& new_label) const {
    WeightedGraph g(n_);
    for (const auto& e : edges())
      g.set(new_label.at(static_cast<std::size_t>(e.i - 1)),
            new_label.at(static_cast<std::size_t>(e.j - 1)), e.weight);
    return g;
  }

  friend WeightedGraph operator+(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n() != b.n()) throw std::invalid_argument("adding graphs on different vertex sets");
    WeightedGraph g = a;
    for (const auto& e : b.edges()) g.add(e.i, e.j, e.weight);
    return g;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  // When a_{i,j} depends only on j for every i < j, the graph is the
  // nested-star combination sum_k a_k str_{n,k}; returns a_2..a_n.
  std::optional<std::vector<double>> quasi_complete_weights() const {
    std::vector<double> a;
    for (int j = 2; j <= n_; ++j) {
      const double v = weight(1, j);
      for (int i = 2; i < j; ++i)
        if (weight(i, j) != v) return std::nullopt;
      a.push_back(v);
    }
    return a;
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) throw std::invalid_argument("vertex out of range");
    if (i == j) throw std::invalid_argument("self loops are not allowed");
  }
  double& at(int i, int j) {
    return w_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j - 1)];
  }

  int n_ = 0;
  std::vector<double> w_;
  double wt_ = 0.0;
};

namespace family {

inline WeightedGraph complete(int n) {
  WeightedGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.set(i, j, 1.0);
  return g;
}

// K_{n,k}: a clique on 1..k, the other vertices isolated.
inline WeightedGraph clique_prefix(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("clique_prefix needs 1 <= k <= n");
  WeightedGraph g(n);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) g.set(i, j, 1.0);
  return g;
}

// str_{n,k}: vertex k joined to each of 1..k-1.
inline WeightedGraph star(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("star needs 2 <= k <= n");
  WeightedGraph g(n);
  for (int i = 1; i < k; ++i) g.set(i, k, 1.0);
  return g;
}

inline WeightedGraph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  WeightedGraph g(n);
  for (int i = 1; i <= n; ++i) g.set(i, i % n + 1, 1.0);
  return g;
}

inline WeightedGraph path(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  WeightedGraph g(n);
  for (int i = 1; i < n; ++i) g.set(i, i + 1, 1.0);
  return g;
}

// m disjoint unit edges (1,2), (3,4), ...
inline WeightedGraph matching(int n, int m) {
  if (m < 0 || 2 * m > n) throw std::invalid_argument("matching needs 0 <= 2m <= n");
  WeightedGraph g(n);
  for (int e = 0; e < m; ++e) g.set(2 * e + 1, 2 * e + 2, 1.0);
  return g;
}

// sum_{k=2}^n a_k str_{n,k}; a holds a_2..a_n.
inline WeightedGraph quasi_complete(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size()) + 1;
  WeightedGraph g(n);
  for (int k = 2; k <= n; ++k) {
    const double w = a[static_cast<std::size_t>(k - 2)];
    if (w < 0) throw std::invalid_argument("quasi-complete weights must be nonnegative");
    for (int i = 1; i < k; ++i) g.set(i, k, w);
  }
  return g;
}

// Center vertex 1, edge (1,i) of weight a_i; a holds a_2..a_n.
inline WeightedGraph weighted_star(const std::vector<double>& a) {
  const int n = static_cast<int>(a.size()) + 1;
  WeightedGraph g(n);
  for (int i = 2; i <= n; ++i) g.set(1, i, a[static_cast<std::size_t>(i - 2)]);
  return g;
}

enum class WeightDistribution { uniform, exponential, unit };

inline WeightDistribution parse_distribution(const std::string& s) {
  if (s == "uniform") return WeightDistribution::uniform;
  if (s == "exponential") return WeightDistribution::exponential;
  if (s == "unit") return WeightDistribution::unit;
  throw std::invalid_argument("unknown weight distribution '" + s + "'");
}

// Each pair becomes an edge with probability density; weights drawn from dist
// (uniform on (0,1], exponential with mean 1, or 1).
template <class Rng>
WeightedGraph random(int n, Rng& rng, double density = 1.0,
                     WeightDistribution dist = WeightDistribution::uniform) {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("density must lie in [0,1]");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  WeightedGraph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (unif(rng) >= density) continue;
      double w = 1.0;
      if (dist == WeightDistribution::uniform) w = 1.0 - unif(rng);
      else if (dist == WeightDistribution::exponential) w = expo(rng);
      g.set(i, j, w);
    }
  return g;
}

inline WeightedGraph random_seeded(int n, std::uint64_t seed, double density = 1.0,
                                   WeightDistribution dist = WeightDistribution::uniform) {
  std::mt19937_64 rng(seed);
  return random(n, rng, density, dist);
}

struct FamilyParams {
  int k = 0;  // star / clique index, 0 means n
  int m = -1;  // matching edges, -1 means floor(n/2)
  std::vector<double> weights;  // quasi / weighted-star: a_2..a_n
  std::uint64_t seed = 1;
  double density = 1.0;
  WeightDistribution distribution = WeightDistribution::uniform;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> v{"complete", "star", "clique", "cycle", "path", "matching",
                                          "quasi", "weighted-star", "random"};
  return v;
}

inline WeightedGraph by_name(const std::string& name, int n, const FamilyParams& p = {}) {
  if (n < 1) throw std::invalid_argument("graphs need n >= 1");
  const int k = p.k == 0 ? n : p.k;
  auto need_weights = [&] {
    if (static_cast<int>(p.weights.size()) != n - 1)
      throw std::invalid_argument(name + " needs n-1 weights a_2..a_n");
    return p.weights;
  };
  if (name == "complete") return complete(n);
  if (name == "star") return star(n, k);
  if (name == "clique") return clique_prefix(n, k);
  if (name == "cycle") return cycle(n);
  if (name == "path") return path(n);
  if (name == "matching") return matching(n, p.m < 0 ? n / 2 : p.m);
  if (name == "quasi") return quasi_complete(need_weights());
  if (name == "weighted-star") return weighted_star(need_weights());
  if (name == "random") return random_seeded(n, p.seed, p.density, p.distribution);
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

}  // namespace family

inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.i, e.j, e.weight});
  return {{"n", g.n()}, {"edges", edges}};
}

inline WeightedGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("graph JSON needs an integer field \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("graph JSON: n must be positive");
  WeightedGraph g(n);
  if (!j.contains("edges")) return g;
  const auto& edges = j.at("edges");
  if (!edges.is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number())
      throw std::invalid_argument("graph JSON: each edge must be [i, j, weight]");
    const int a = e[0].get<int>(), b = e[1].get<int>();
    const double w = e[2].get<double>();
    if (a < 1 || b > n || a >= b) throw std::invalid_argument("graph JSON: edges need 1 <= i < j <= n");
    if (w < 0) throw std::invalid_argument("graph JSON: negative weight");
    if (g.weight(a, b) != 0.0) throw std::invalid_argument("graph JSON: duplicate edge");
    g.set(a, b, w);
  }
  return g;
}

}  // namespace aldous
