#pragma once

// The Aldous order on partitions of n:
//     sigma >= tau   iff   lambda_1(A; sigma) <= lambda_1(A; tau) for every A.
// A single graph with lambda_1(A; sigma) > lambda_1(A; tau) refutes sigma >= tau.
// No search can prove an entry, so "proved" entries come only from the fixed
// list of known results in seed_known(); everything else is refuted by a
// recorded witness or stays unknown.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <nlohmann/json.hpp>

#include "aldous/graph.hpp"
#include "aldous/partition.hpp"
#include "aldous/rational.hpp"
#include "aldous/spectral.hpp"
#include "aldous/symrep.hpp"

namespace aldous {

inline constexpr double kOrderTol = 1e-9;

// Citation tags allowed on proved entries.
namespace tag {
inline constexpr const char* sign_trivial_extremes = "sign-trivial-extremes";  // [n] >= rho >= [1^n]
inline constexpr const char* bacher_hook_chain = "bacher-hook-chain";          // hooks totally ordered
inline constexpr const char* spectral_gap = "caputo-liggett-richthammer";      // [n-1,1] > rho
inline constexpr const char* row_column = "row-column-separation";             // n >= 4k^2+4k
inline constexpr const char* transitive = "transitive-closure";

inline bool is_citation(const std::string& t) {
  return t == sign_trivial_extremes || t == bacher_hook_chain || t == spectral_gap ||
         t == row_column || t == transitive;
}
}  // namespace tag

// Witness families recorded on refuted entries.
namespace witness {
inline constexpr const char* dominance_complete = "complete-graph-dominance";
inline constexpr const char* lex_quasi_complete = "quasi-complete-lex";
inline constexpr const char* two_column_star = "star-two-column";
}  // namespace witness

enum class RelationStatus { unknown, proved, refuted };

inline std::string to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::proved: return "proved";
    case RelationStatus::refuted: return "refuted";
    default: return "unknown";
  }
}

inline RelationStatus parse_status(const std::string& s) {
  if (s == "proved") return RelationStatus::proved;
  if (s == "refuted") return RelationStatus::refuted;
  if (s == "unknown") return RelationStatus::unknown;
  throw std::invalid_argument("unknown relation status '" + s + "'");
}

struct Refutation {
  WeightedGraph witness;
  std::string family;
  double margin = 0.0;  // lambda_1(A; sigma) - lambda_1(A; tau)
  bool exact = false;
};

struct RelationEntry {
  Partition sigma;
  Partition tau;
  RelationStatus status = RelationStatus::unknown;
  std::string tag;  // proved entries
  std::optional<Refutation> refutation;
};

class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class RelationLedger {
 public:
  RelationLedger() = default;
  explicit RelationLedger(int n) : n_(n), shapes_(all_partitions(n)) {
    for (std::size_t i = 0; i < shapes_.size(); ++i) index_.emplace(shapes_[i], i);
    entries_.resize(shapes_.size() * shapes_.size());
    for (std::size_t i = 0; i < shapes_.size(); ++i)
      for (std::size_t j = 0; j < shapes_.size(); ++j) {
        auto& e = entries_[i * shapes_.size() + j];
        e.sigma = shapes_[i];
        e.tau = shapes_[j];
      }
  }

  int n() const { return n_; }
  const std::vector<Partition>& shapes() const { return shapes_; }
  std::size_t size() const { return shapes_.size(); }

  std::size_t index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument(p.label() + " is not a partition of " + std::to_string(n_));
    return it->second;
  }

  const RelationEntry& entry(std::size_t i, std::size_t j) const {
    check_offdiagonal(i, j);
    return entries_[i * shapes_.size() + j];
  }
  const RelationEntry& entry(const Partition& s, const Partition& t) const { return entry(index(s), index(t)); }

  // False if the entry was already proved.
  bool prove(std::size_t i, std::size_t j, const std::string& citation) {
    if (!tag::is_citation(citation)) throw std::invalid_argument("'" + citation + "' is not a citation tag");
    auto& e = at(i, j);
    if (e.status == RelationStatus::refuted)
      throw ContradictionError("cannot prove " + e.sigma.label() + " >= " + e.tau.label() +
                               ": already refuted");
    if (e.status == RelationStatus::proved) return false;
    e.status = RelationStatus::proved;
    e.tag = citation;
    return true;
  }

  // False if the entry already carries a refutation (first witness wins).
  bool refute(std::size_t i, std::size_t j, Refutation r) {
    auto& e = at(i, j);
    if (e.status == RelationStatus::proved)
      throw ContradictionError("witness refutes proved relation " + e.sigma.label() + " >= " +
                               e.tau.label() + " (" + e.tag + ")");
    if (e.status == RelationStatus::refuted) return false;
    e.status = RelationStatus::refuted;
    e.refutation = std::move(r);
    return true;
  }

  void close_transitively() {
    const std::size_t m = shapes_.size();
    auto proved = [&](std::size_t a, std::size_t b) {
      return a == b || at(a, b).status == RelationStatus::proved;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i) {
          if (i == k || !proved(i, k)) continue;
          for (std::size_t j = 0; j < m; ++j)
            if (j != i && j != k && proved(k, j) && !proved(i, j)) {
              prove(i, j, tag::transitive);
              changed = true;
            }
        }
    }
  }

  std::size_t count(RelationStatus s) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (i != j && entry(i, j).status == s) ++c;
    return c;
  }

 private:
  void check_offdiagonal(std::size_t i, std::size_t j) const {
    if (i >= shapes_.size() || j >= shapes_.size() || i == j)
      throw std::out_of_range("ledger entries are indexed by distinct partitions");
  }
  RelationEntry& at(std::size_t i, std::size_t j) {
    check_offdiagonal(i, j);
    return entries_[i * shapes_.size() + j];
  }
  const RelationEntry& at(std::size_t i, std::size_t j) const { return entry(i, j); }

  int n_ = 0;
  std::vector<Partition> shapes_;
  std::map<Partition, std::size_t> index_;
  std::vector<RelationEntry> entries_;
};

// ---------------------------------------------------------------------------
// lambda_1 evaluation

struct LowestEigenvalue {
  double value = 0.0;
  std::optional<Rational> exact;
};

// Quasi-complete graphs (stars included) use the exact tableau formula;
// everything else goes through the eigensolver.
inline LowestEigenvalue lowest_eigenvalue(const Partition& shape, const WeightedGraph& a,
                                          std::uint64_t tableau_cap = kDefaultTableauCap) {
  if (a.n() != shape.n()) throw std::invalid_argument("graph size does not match the partition");
  if (auto qc = a.quasi_complete_weights(); qc && tableau_count(shape) <= tableau_cap) {
    const auto s = quasi_complete_spectrum(shape, *qc, /*exact=*/true, tableau_cap);
    return {to_double(s.lambda1()), s.lambda1()};
  }
  return {numeric_spectrum(shape, a).lambda1(), std::nullopt};
}

inline std::optional<Refutation> margin_refutation(const LowestEigenvalue& ls, const LowestEigenvalue& lt,
                                                   const WeightedGraph& a, const std::string& family,
                                                   double tol) {
  Refutation r{a, family, ls.value - lt.value, false};
  if (ls.exact && lt.exact) {
    const Rational m = *ls.exact - *lt.exact;
    r.margin = to_double(m);
    r.exact = true;
  }
  if (r.margin > 10.0 * tol) return r;
  return std::nullopt;
}

// A refutation of sigma >= tau when lambda_1(A; sigma) > lambda_1(A; tau) + 10 tol.
inline std::optional<Refutation> check_pair(const Partition& sigma, const Partition& tau,
                                            const WeightedGraph& a, double tol = kOrderTol,
                                            const std::string& family = "graph") {
  require_same_size(sigma, tau);
  return margin_refutation(lowest_eigenvalue(sigma, a), lowest_eigenvalue(tau, a), a, family, tol);
}

// ---------------------------------------------------------------------------
// Known entries

inline Partition two_column_shape(int n, int i) {
  std::vector<int> parts(static_cast<std::size_t>(i), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(n - 2 * i), 1);
  return Partition(std::move(parts));
}

struct SeedOptions {
  std::uint64_t tableau_cap = kDefaultTableauCap;
};

inline RelationLedger seed_known(int n, const SeedOptions& opt = {}) {
  if (n < 2) throw std::invalid_argument("seed_known needs n >= 2");
  RelationLedger L(n);
  const auto& shapes = L.shapes();
  const std::size_t m = shapes.size();
  const std::size_t top = L.index(Partition{n});
  const std::size_t bottom = L.index(conjugate(Partition{n}));

  for (std::size_t i = 0; i < m; ++i) {
    if (i != top) L.prove(top, i, tag::sign_trivial_extremes);
    if (i != bottom) L.prove(i, bottom, tag::sign_trivial_extremes);
  }
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) L.prove(L.index(hook(n, j)), L.index(hook(n, k)), tag::bacher_hook_chain);
  if (n >= 2) {
    const std::size_t standard = L.index(hook(n, 1));
    for (std::size_t i = 0; i < m; ++i)
      if (i != top && i != standard) L.prove(standard, i, tag::spectral_gap);
  }
  for (int k = 1; 4 * k * k + 4 * k <= n && k < n; ++k)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t s = 0; s < m; ++s)
        if (s != t && in_row_class(shapes[t], k) && in_column_class(shapes[s], k))
          L.prove(t, s, tag::row_column);
  L.close_transitively();

  // Strict domination sigma < tau: K_n acts by C(n,2) - content_sum, and
  // content sums strictly increase up the domination order.
  const WeightedGraph kn = family::complete(n);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      if (s != t && dominates(shapes[t], shapes[s])) {
        const long long margin = content_sum(shapes[t]) - content_sum(shapes[s]);
        L.refute(s, t, {kn, witness::dominance_complete, static_cast<double>(margin), true});
      }

  // alpha < beta lexicographically: fast-decreasing nested stars. The weights
  // n^{-2k} are stored scaled by n^{2n} (integers n^{2(n-k)}); scaling the
  // graph scales every eigenvalue and keeps the comparison.
  {
    std::vector<Rational> a;
    std::vector<double> a_double;
    for (int k = 2; k <= n; ++k) {
      a.push_back(rational_power(n, 2 * (n - k)));
      a_double.push_back(to_double(a.back()));
    }
    const WeightedGraph g = family::quasi_complete(a_double);
    std::vector<std::optional<Rational>> l1(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (tableau_count(shapes[i]) > opt.tableau_cap) continue;
      l1[i] = quasi_complete_spectrum(shapes[i], std::span<const Rational>(a), opt.tableau_cap).lambda1();
    }
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        if (s == t || !l1[s] || !l1[t] || !(shapes[s] < shapes[t])) continue;
        const Rational margin = *l1[s] - *l1[t];
        if (margin > 0) L.refute(s, t, {g, witness::lex_quasi_complete, to_double(margin), true});
      }
  }

  // [2^i, 1^{n-2i}] vs [2^j, 1^{n-2j}], j < i: the full star str_{n,n}.
  if (n >= 3) {
    const WeightedGraph st = family::star(n, n);
    for (int i = 2; 2 * i <= n; ++i)
      for (int j = 1; j < i; ++j) {
        const Partition big = two_column_shape(n, i), small = two_column_shape(n, j);
        if (tableau_count(big) > opt.tableau_cap || tableau_count(small) > opt.tableau_cap) continue;
        const Rational margin = star_spectrum(big, n).lambda1() - star_spectrum(small, n).lambda1();
        if (margin > 0)
          L.refute(L.index(big), L.index(small), {st, witness::two_column_star, to_double(margin), true});
      }
  }
  return L;
}

// ---------------------------------------------------------------------------
// Search

struct NamedGraph {
  std::string family;
  WeightedGraph graph;
};

struct ScanOptions {
  int n = 4;
  std::vector<std::string> families{"stars", "complete", "cycles", "paths", "matchings", "quasi", "random"};
  int budget = 1000;  // random graphs, and random quasi-complete graphs
  double tol = kOrderTol;
  std::uint64_t seed = 42;
  int workers = 0;  // 0: hardware concurrency
  std::uint64_t tableau_cap = kDefaultTableauCap;
  double density = 0.6;
  family::WeightDistribution distribution = family::WeightDistribution::uniform;
};

inline const std::vector<std::string>& known_families() {
  static const std::vector<std::string> f{"stars", "complete", "cycles", "paths", "matchings", "quasi", "random"};
  return f;
}

inline std::vector<std::string> parse_families(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    // accept singular spellings too
    if (tok == "star") tok = "stars";
    if (tok == "cycle") tok = "cycles";
    if (tok == "path") tok = "paths";
    if (tok == "matching") tok = "matchings";
    if (tok == "quasi-complete") tok = "quasi";
    const auto& known = known_families();
    if (std::find(known.begin(), known.end(), tok) == known.end())
      throw std::invalid_argument("unknown graph family '" + tok + "'");
    out.push_back(tok);
  }
  if (out.empty()) throw std::invalid_argument("no graph families given");
  return out;
}

// Structured families come first (in the fixed order of known_families), so
// any pair a random graph refutes has no witness among the structured ones.
inline std::vector<NamedGraph> scan_graphs(const ScanOptions& opt) {
  const int n = opt.n;
  auto wanted = [&](const char* f) {
    return std::find(opt.families.begin(), opt.families.end(), f) != opt.families.end();
  };
  std::vector<NamedGraph> out;
  std::mt19937_64 rng(opt.seed);
  if (wanted("stars"))
    for (int k = 2; k <= n; ++k) out.push_back({"star k=" + std::to_string(k), family::star(n, k)});
  if (wanted("complete")) {
    out.push_back({"complete", family::complete(n)});
    for (int k = 2; k < n; ++k) out.push_back({"clique k=" + std::to_string(k), family::clique_prefix(n, k)});
  }
  if (wanted("cycles") && n >= 3) out.push_back({"cycle", family::cycle(n)});
  if (wanted("paths") && n >= 2) out.push_back({"path", family::path(n)});
  if (wanted("matchings"))
    for (int m = 1; 2 * m <= n; ++m) out.push_back({"matching m=" + std::to_string(m), family::matching(n, m)});
  if (wanted("quasi")) {
    std::vector<double> down, up;
    for (int k = 2; k <= n; ++k) {
      down.push_back(to_double(rational_power(n, 2 * (n - k))));
      up.push_back(to_double(rational_power(n, 2 * (k - 2))));
    }
    out.push_back({"quasi fast-decreasing", family::quasi_complete(down)});
    out.push_back({"quasi fast-increasing", family::quasi_complete(up)});
    std::uniform_int_distribution<int> small(0, 3);
    for (int b = 0; b < opt.budget; ++b) {
      std::vector<double> a;
      for (int k = 2; k <= n; ++k) a.push_back(static_cast<double>(small(rng)));
      out.push_back({"quasi random", family::quasi_complete(a)});
    }
  }
  if (wanted("random")) {
    const double densities[] = {1.0, opt.density, 0.35};
    for (int b = 0; b < opt.budget; ++b)
      out.push_back({"random", family::random(n, rng, densities[b % 3], opt.distribution)});
  }
  return out;
}

struct Contradiction {
  Partition sigma;
  Partition tau;
  std::string citation;
  Refutation evidence;
};

struct ScanResult {
  RelationLedger ledger;
  std::vector<Contradiction> contradictions;
  std::size_t graphs_evaluated = 0;
};

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

inline ScanResult scan(const ScanOptions& opt) {
  if (opt.budget <= 0) throw std::invalid_argument("scan budget must be positive");
  ScanResult result{seed_known(opt.n, {opt.tableau_cap}), {}, 0};
  RelationLedger& L = result.ledger;
  const auto& shapes = L.shapes();
  const std::size_t m = shapes.size();
  const auto graphs = scan_graphs(opt);

  // Evaluate every graph on every shape; the merge below runs in graph order,
  // so the outcome does not depend on the worker count.
  std::vector<std::vector<LowestEigenvalue>> l1(graphs.size());
  const int workers = std::min<int>(resolve_workers(opt.workers), static_cast<int>(std::max<std::size_t>(graphs.size(), 1)));
  auto work = [&](int w) {
    for (std::size_t g = static_cast<std::size_t>(w); g < graphs.size(); g += static_cast<std::size_t>(workers)) {
      l1[g].reserve(m);
      for (const auto& s : shapes) l1[g].push_back(lowest_eigenvalue(s, graphs[g].graph, opt.tableau_cap));
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (std::size_t g = 0; g < graphs.size(); ++g) {
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = 0; t < m; ++t) {
        if (s == t) continue;
        const auto& e = L.entry(s, t);
        if (e.status == RelationStatus::refuted) continue;
        auto r = margin_refutation(l1[g][s], l1[g][t], graphs[g].graph, graphs[g].family, opt.tol);
        if (!r) continue;
        if (e.status == RelationStatus::proved)
          result.contradictions.push_back({shapes[s], shapes[t], e.tag, *r});
        else
          L.refute(s, t, std::move(*r));
      }
  }
  result.graphs_evaluated = graphs.size();
  return result;
}

// Re-evaluates every stored witness from scratch.
inline std::vector<std::string> recheck_witnesses(const RelationLedger& L, double tol = kOrderTol) {
  std::vector<std::string> failures;
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t t = 0; t < L.size(); ++t) {
      if (s == t) continue;
      const auto& e = L.entry(s, t);
      if (e.status != RelationStatus::refuted) continue;
      if (!e.refutation) {
        failures.push_back(e.sigma.label() + " >= " + e.tau.label() + ": refuted without witness");
        continue;
      }
      auto r = check_pair(e.sigma, e.tau, e.refutation->witness, tol);
      if (!r) failures.push_back(e.sigma.label() + " >= " + e.tau.label() + ": witness does not reproduce");
    }
  return failures;
}

// ---------------------------------------------------------------------------
// Ledger JSON

inline nlohmann::json ledger_to_json(const RelationLedger& L) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t s = 0; s < L.size(); ++s)
    for (std::size_t t = 0; t < L.size(); ++t) {
      if (s == t) continue;
      const auto& e = L.entry(s, t);
      nlohmann::json j{{"sigma", e.sigma.to_string()}, {"tau", e.tau.to_string()}, {"status", to_string(e.status)}};
      if (e.status == RelationStatus::proved) j["tag"] = e.tag;
      if (e.refutation) {
        auto w = graph_to_json(e.refutation->witness);
        w["family"] = e.refutation->family;
        w["exact"] = e.refutation->exact;
        j["witness"] = w;
        j["margin"] = e.refutation->margin;
      }
      entries.push_back(j);
    }
  return {{"n", L.n()}, {"entries", entries}};
}

inline RelationLedger ledger_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw std::invalid_argument("ledger JSON needs an integer field \"n\"");
  RelationLedger L(j.at("n").get<int>());
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw std::invalid_argument("ledger JSON needs an \"entries\" array");
  for (const auto& e : j.at("entries")) {
    const auto s = L.index(parse_partition(e.at("sigma").get<std::string>()));
    const auto t = L.index(parse_partition(e.at("tau").get<std::string>()));
    const auto status = parse_status(e.at("status").get<std::string>());
    if (status == RelationStatus::proved) {
      L.prove(s, t, e.at("tag").get<std::string>());
    } else if (status == RelationStatus::refuted) {
      const auto& w = e.at("witness");
      Refutation r{graph_from_json(w), w.value("family", std::string("graph")), e.at("margin").get<double>(),
                   w.value("exact", false)};
      L.refute(s, t, std::move(r));
    }
  }
  return L;
}

// ---------------------------------------------------------------------------
// Bound lemmas

struct BoundReport {
  std::string name;
  bool holds = true;
  double value = 0.0;  // worst observed left-hand side
  double bound = 0.0;
  int instances = 0;
  bool exact = false;
};

inline void require_row_class(const Partition& sigma, int k) {
  if (k < 0 || k >= std::max(sigma.n(), 1)) throw std::invalid_argument("k must satisfy 0 <= k < n");
  if (!in_row_class(sigma, k))
    throw std::invalid_argument(sigma.label() + " does not have >= n-k boxes in its first row");
}

inline std::vector<int> random_relabeling(int n, std::mt19937_64& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// lambda_max(2k disjoint edges; sigma) <= 2k for sigma with >= n-k boxes in row 1, n >= 4k.
// Trial 0 uses the canonical matching, later trials relabel its vertices.
inline BoundReport check_matching_bound(const Partition& sigma, int k, int trials = 1, std::uint64_t seed = 1,
                                        double tol = kOrderTol) {
  require_row_class(sigma, k);
  const int n = sigma.n();
  if (n < 4 * k) throw std::invalid_argument("matching bound needs n >= 4k");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  BoundReport r{"matching", true, 0.0, 2.0 * k, 0, false};
  std::mt19937_64 rng(seed);
  const WeightedGraph base = family::matching(n, 2 * k);
  for (int t = 0; t < trials; ++t) {
    const WeightedGraph g = t == 0 ? base : base.relabeled(random_relabeling(n, rng));
    const double lmax = numeric_spectrum(sigma, g).lambda_max();
    r.value = std::max(r.value, lmax);
    r.holds = r.holds && lmax <= r.bound + tol;
    ++r.instances;
  }
  return r;
}

// lambda_max(str_{n,l+1}; sigma) <= l + k, evaluated exactly.
inline BoundReport check_onestar_bound(const Partition& sigma, int k, int l) {
  require_row_class(sigma, k);
  if (l < 1 || l > sigma.n() - 1) throw std::invalid_argument("star size l must satisfy 1 <= l <= n-1");
  const Rational lmax = star_spectrum(sigma, l + 1).lambda_max();
  BoundReport r{"onestar", lmax <= Rational(l + k), to_double(lmax), static_cast<double>(l + k), 1, true};
  return r;
}

inline double weightedstar_bound(const std::vector<double>& a, int k) {
  // a holds a_2..a_n
  double b = 0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) {
    const int i = static_cast<int>(idx) + 2;
    b += (i <= k + 1 ? 2.0 : 1.0) * a[idx];
  }
  return b;
}

// Weighted star centered at 1 with a_2 >= ... >= a_n >= 0.
inline BoundReport check_weightedstar_bound(const Partition& sigma, int k, const std::vector<double>& a,
                                            double tol = kOrderTol) {
  require_row_class(sigma, k);
  if (static_cast<int>(a.size()) != sigma.n() - 1) throw std::invalid_argument("need weights a_2..a_n");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    if (i > 0 && a[i] > a[i - 1]) throw std::invalid_argument("weights must be sorted nonincreasing");
  }
  const double lmax = numeric_spectrum(sigma, family::weighted_star(a)).lambda_max();
  const double bound = weightedstar_bound(a, k);
  return {"weightedstar", lmax <= bound + tol, lmax, bound, 1, false};
}

// lambda_1(A; sigma) <= 2 sum_{v in vertices} W(v), W(v) the weighted degree.
inline BoundReport check_invariant_vector_bound(const Partition& sigma, int k, const WeightedGraph& a,
                                                const std::vector<int>& vertices, double tol = kOrderTol) {
  require_row_class(sigma, k);
  if (a.n() != sigma.n()) throw std::invalid_argument("graph size does not match the partition");
  if (static_cast<int>(vertices.size()) != k) throw std::invalid_argument("need exactly k vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("vertices must be distinct");
  double bound = 0;
  for (int v : sorted) {
    if (v < 1 || v > a.n()) throw std::invalid_argument("vertex out of range");
    bound += 2.0 * a.vertex_weight(v);
  }
  const double l1 = numeric_spectrum(sigma, a).lambda1();
  return {"invariant-vector", l1 <= bound + tol, l1, bound, 1, false};
}

// Vertices sorted by weighted degree, ties broken by index.
inline std::vector<int> vertices_by_weight(const WeightedGraph& a) {
  std::vector<int> v(static_cast<std::size_t>(a.n()));
  std::iota(v.begin(), v.end(), 1);
  std::stable_sort(v.begin(), v.end(), [&](int x, int y) { return a.vertex_weight(x) < a.vertex_weight(y); });
  return v;
}

// ---------------------------------------------------------------------------
// Reducing graphs and star decomposition

struct ReducingReport {
  bool reducing = false;
  double lhs = 0.0;  // lambda_max(H; sigma) + lambda_max(H; tau (x) sgn)
  double rhs = 0.0;  // 2 wt(H)
  double lambda1_tau = 0.0;
  double lambda_max_sigma = 0.0;
  bool direct_agrees = true;  // lambda_1(H; tau) >= lambda_max(H; sigma) gives the same verdict
  explicit operator bool() const { return reducing; }
};

inline ReducingReport check_reducing(const WeightedGraph& h, const Partition& sigma, const Partition& tau,
                                     double tol = kOrderTol) {
  require_same_size(sigma, tau);
  ReducingReport r;
  const Spectrum s_sigma = numeric_spectrum(sigma, h);
  const Spectrum s_twisted = numeric_spectrum(conjugate(tau), h);
  r.lambda_max_sigma = s_sigma.lambda_max();
  r.lhs = r.lambda_max_sigma + s_twisted.lambda_max();
  r.rhs = 2.0 * h.total_weight();
  r.reducing = r.lhs <= r.rhs + tol;
  r.lambda1_tau = numeric_spectrum(tau, h).lambda1();
  r.direct_agrees = (r.lambda1_tau >= r.lambda_max_sigma - tol) == r.reducing;
  return r;
}

inline int max_matching_size(const WeightedGraph& a) {
  using G = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  G g(static_cast<std::size_t>(a.n()));
  for (const auto& e : a.edges())
    boost::add_edge(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1), g);
  std::vector<boost::graph_traits<G>::vertex_descriptor> mate(static_cast<std::size_t>(a.n()));
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  return static_cast<int>(boost::matching_size(g, &mate[0]));
}

// No eps-copy of a 2k-edge matching fits under A.
inline bool is_matching_irreducible(const WeightedGraph& a, int k) { return max_matching_size(a) < 2 * k; }

struct WeightedStar {
  int center = 1;
  WeightedGraph graph;
};

// Greedy: take the lexicographically first remaining edge (u, v), split off
// every remaining edge at u as one star and then every remaining edge at v as
// a second. The chosen edges are pairwise disjoint, so without a 2k-matching
// this ends within 2k-1 rounds.
inline std::vector<WeightedStar> star_decompose(const WeightedGraph& a, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (!is_matching_irreducible(a, k))
    throw std::invalid_argument("graph contains 2k disjoint edges; no star decomposition of this size");
  std::vector<WeightedStar> stars;
  WeightedGraph rest = a;
  for (int round = 0; round < 2 * k - 1; ++round) {
    const auto edges = rest.edges();
    if (edges.empty()) break;
    const int centers[2] = {edges.front().i, edges.front().j};
    for (int c : centers) {
      WeightedStar s{c, WeightedGraph(a.n())};
      for (int v = 1; v <= a.n(); ++v)
        if (v != c && rest.weight(c, v) > 0) {
          s.graph.set(c, v, rest.weight(c, v));
          rest.set(c, v, 0.0);
        }
      if (!s.graph.is_zero()) stars.push_back(std::move(s));
    }
  }
  if (!rest.is_zero()) throw std::logic_error("star decomposition left edges behind");
  return stars;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {
inline bool reachable_through(const std::vector<std::vector<char>>& rel, std::size_t i, std::size_t j) {
  for (std::size_t k = 0; k < rel.size(); ++k)
    if (k != i && k != j && rel[i][k] && rel[k][j]) return true;
  return false;
}
}  // namespace detail

// Nodes are partitions. Solid arrows: transitive reduction of the proved
// relation (from larger to smaller). Dashed arrows: unknown pairs that
// survived the search and are not implied by a two-step chain of proved or
// unknown pairs. Dotted undirected edges mark pairs refuted both ways.
inline std::string export_dot(const RelationLedger& L) {
  const std::size_t m = L.size();
  auto quote = [](const Partition& p) { return "\"" + p.label() + "\""; };
  std::vector<std::vector<char>> proved(m, std::vector<char>(m, 0)), candidate = proved;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const auto st = L.entry(i, j).status;
      proved[i][j] = st == RelationStatus::proved;
      candidate[i][j] = st != RelationStatus::refuted;
    }

  std::ostringstream os;
  os << "digraph aldous_order_n" << L.n() << " {\n";
  os << "  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (const auto& p : L.shapes()) os << "  " << quote(p) << ";\n";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (proved[i][j] && !detail::reachable_through(proved, i, j))
        os << "  " << quote(L.shapes()[i]) << " -> " << quote(L.shapes()[j]) << ";\n";
      else if (!proved[i][j] && candidate[i][j] && !detail::reachable_through(candidate, i, j))
        os << "  " << quote(L.shapes()[i]) << " -> " << quote(L.shapes()[j]) << " [style=dashed];\n";
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (L.entry(i, j).status == RelationStatus::refuted && L.entry(j, i).status == RelationStatus::refuted)
        os << "  " << quote(L.shapes()[i]) << " -> " << quote(L.shapes()[j])
           << " [dir=none, style=dotted, color=gray, constraint=false, label=\"incomparable\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace aldous
