#pragma once

// Invariant suites behind `aldous verify`. Each suite runs a batch of
// randomized or exhaustive checks at one n and reports every failure as JSON.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aldous/characters.hpp"
#include "aldous/game.hpp"
#include "aldous/graph.hpp"
#include "aldous/order.hpp"
#include "aldous/partition.hpp"
#include "aldous/spectral.hpp"
#include "aldous/symrep.hpp"

namespace aldous {

struct VerifyOptions {
  int n = 5;
  std::uint64_t seed = 42;
  int samples = 0;  // 0: the suite's default
  int workers = 0;
};

struct SuiteReport {
  SuiteReport(std::string name, int size) : suite(std::move(name)), n(size) {}

  std::string suite;
  int n = 0;
  std::size_t checks = 0;
  nlohmann::json failures = nlohmann::json::array();
  std::vector<std::string> skipped;

  bool passed() const { return failures.empty(); }

  void check(bool ok, nlohmann::json detail) {
    ++checks;
    if (!ok) failures.push_back(std::move(detail));
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"suite", suite}, {"n", n}, {"passed", passed()}, {"checks", checks}, {"failures", failures}};
    if (!skipped.empty()) j["skipped"] = skipped;
    return j;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"lemma9", "qc", "hooks", "characters", "oracle", "bounds", "dual", "consistency"};
  return s;
}

namespace detail {

inline int samples_or(const VerifyOptions& o, int fallback) { return o.samples > 0 ? o.samples : fallback; }

inline bool fits(const Partition& p, std::size_t cap = default_dim_cap()) { return tableau_count(p) <= cap; }

// Random graph with a rotating shape: dense, sparse, exponential weights.
inline WeightedGraph varied_graph(int n, std::mt19937_64& rng, int i) {
  switch (i % 3) {
    case 0: return family::random(n, rng, 1.0, family::WeightDistribution::uniform);
    case 1: return family::random(n, rng, 0.4, family::WeightDistribution::uniform);
    default: return family::random(n, rng, 0.8, family::WeightDistribution::exponential);
  }
}

}  // namespace detail

inline SuiteReport verify_lemma9(const VerifyOptions& o) {
  SuiteReport r{"lemma9", o.n};
  for (const auto& p : all_partitions(o.n)) {
    if (!detail::fits(p)) {
      r.skipped.push_back(p.label());
      continue;
    }
    for (int k = 2; k <= o.n; ++k) {
      const double d = multiset_distance(star_spectrum(p, k).to_numeric(), numeric_spectrum(p, family::star(o.n, k)));
      r.check(d < 1e-8, {{"shape", p.to_string()}, {"k", k}, {"distance", d}});
    }
  }
  return r;
}

inline SuiteReport verify_qc(const VerifyOptions& o) {
  SuiteReport r{"qc", o.n};
  std::mt19937_64 rng(o.seed);
  std::exponential_distribution<double> expo(1.0);
  const auto shapes = all_partitions(o.n);
  for (int s = 0; s < detail::samples_or(o, 50); ++s) {
    std::vector<double> a(static_cast<std::size_t>(o.n - 1));
    for (auto& x : a) x = expo(rng);
    const WeightedGraph g = family::quasi_complete(a);
    for (const auto& p : shapes) {
      if (!detail::fits(p)) continue;
      const double d = multiset_distance(quasi_complete_spectrum(p, a, true).to_numeric(), numeric_spectrum(p, g));
      r.check(d < 1e-8, {{"shape", p.to_string()}, {"weights", a}, {"distance", d}});
    }
  }
  // exact fast-decreasing weights refute alpha >= beta for alpha <lex beta
  const auto a = fast_decreasing_weights(o.n);
  std::vector<Rational> l1;
  for (const auto& p : shapes) l1.push_back(quasi_complete_spectrum(p, std::span<const Rational>(a)).lambda1());
  for (std::size_t i = 0; i < shapes.size(); ++i)
    for (std::size_t j = 0; j < shapes.size(); ++j)
      if (shapes[i] < shapes[j])
        r.check(l1[i] > l1[j], {{"alpha", shapes[i].to_string()}, {"beta", shapes[j].to_string()},
                                {"check", "lex refutation"}});
  return r;
}

inline SuiteReport verify_hooks(const VerifyOptions& o) {
  SuiteReport r{"hooks", o.n};
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < detail::samples_or(o, 20); ++s) {
    const WeightedGraph g = detail::varied_graph(o.n, rng, s);
    for (int k = 0; k < o.n; ++k) {
      const Partition h = hook(o.n, k);
      if (!detail::fits(h)) continue;
      const double d = multiset_distance(hook_spectrum(g, k), numeric_spectrum(h, g));
      r.check(d < 1e-6, {{"k", k}, {"graph", graph_to_json(g)}, {"distance", d}});
    }
  }
  return r;
}

inline SuiteReport verify_characters(const VerifyOptions& o) {
  SuiteReport r{"characters", o.n};
  const int n = o.n;
  for (const auto& c : verify_hook_wedge_iso(n).checks)
    r.check(c.ok, {{"k", c.k}, {"class", c.cycle_type.to_string()}, {"wedge", c.wedge_value}, {"hook", c.hook_value}});
  // chi_k + chi_{k-1} = chi of the k-th exterior power of the permutation module
  for (int k = 0; k <= n; ++k) {
    const auto target = wedge_character(n, k);
    for (const auto& [mu, v] : target.values) {
      long long sum = 0;
      if (k <= n - 1) sum += mn_hook_character(n, k)(mu);
      if (k >= 1) sum += mn_hook_character(n, k - 1)(mu);
      r.check(sum == v, {{"k", k}, {"class", mu.to_string()}, {"expected", v}, {"got", sum}});
    }
  }
  // traces of the orthogonal form agree with the hook rule and are orthonormal
  if (n <= 7) {
    const auto shapes = all_partitions(n);
    std::vector<ClassFunction> chis;
    for (const auto& p : shapes) chis.push_back(character_from_rep(p));
    for (int k = 0; k < n; ++k) {
      const auto at = std::find(shapes.begin(), shapes.end(), hook(n, k)) - shapes.begin();
      r.check(chis[static_cast<std::size_t>(at)] == mn_hook_character(n, k), {{"k", k}, {"check", "trace vs hook rule"}});
    }
    for (std::size_t i = 0; i < chis.size(); ++i)
      for (std::size_t j = i; j < chis.size(); ++j) {
        const Rational ip = inner_product(chis[i], chis[j]);
        r.check(ip == Rational(i == j ? 1 : 0), {{"i", i}, {"j", j}, {"inner_product", to_string(ip)}});
      }
  } else {
    r.skipped.push_back("trace comparison above n = 7");
  }
  return r;
}

inline SuiteReport verify_oracle(const VerifyOptions& o) {
  SuiteReport r{"oracle", o.n};
  std::mt19937_64 rng(o.seed);
  const auto shapes = all_partitions(o.n);
  const bool regular = o.n <= kRegularDefaultCap;
  if (!regular) r.skipped.push_back("regular representation above n = 5");
  for (int s = 0; s < detail::samples_or(o, 10); ++s) {
    const WeightedGraph g = detail::varied_graph(o.n, rng, s);
    if (regular) {
      std::vector<double> expected;
      for (const auto& p : shapes) {
        const auto sp = numeric_spectrum(p, g);
        for (std::uint64_t c = 0; c < tableau_count(p); ++c)
          expected.insert(expected.end(), sp.values().begin(), sp.values().end());
      }
      const double d = multiset_distance(spectrum(regular_delta(g)).values(), expected);
      r.check(d < 1e-7, {{"graph", graph_to_json(g)}, {"check", "regular"}, {"distance", d}});
    }
    // the irrep sits inside the permutation module of the same shape
    for (const auto& p : shapes) {
      const double m = coloring_count(p);
      if (m > 200) continue;
      const bool ok = multiset_contains(spectrum(l2q_delta(p, g)).values(), numeric_spectrum(p, g).values(), 1e-7);
      r.check(ok, {{"graph", graph_to_json(g)}, {"shape", p.to_string()}, {"check", "permutation module"}});
    }
  }
  return r;
}

// Random instances of each bound lemma.
inline SuiteReport verify_bounds(const VerifyOptions& o) {
  SuiteReport r{"bounds", o.n};
  const int n = o.n;
  const int trials = detail::samples_or(o, 200);
  std::mt19937_64 rng(o.seed);
  auto pick = [&](const std::vector<Partition>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto row_class = [&](int k) {
    std::vector<Partition> v;
    for (const auto& p : all_partitions(n))
      if (in_row_class(p, k) && detail::fits(p)) v.push_back(p);
    return v;
  };
  auto report = [&](const BoundReport& b, const Partition& s, int k) {
    r.check(b.holds, {{"lemma", b.name}, {"sigma", s.to_string()}, {"k", k}, {"value", b.value}, {"bound", b.bound}});
  };

  for (int t = 0; t < trials; ++t) {
    // matching: n >= 4k
    if (n >= 4) {
      const int k = std::uniform_int_distribution<int>(1, n / 4)(rng);
      const Partition s = pick(row_class(k));
      report(check_matching_bound(s, k, 1 + t % 3, rng()), s, k);
    }
    // one star
    {
      const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int l = std::uniform_int_distribution<int>(1, n - 1)(rng);
      const Partition s = pick(row_class(k));
      report(check_onestar_bound(s, k, l), s, k);
    }
    // weighted star with sorted weights
    {
      const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
      std::vector<double> a(static_cast<std::size_t>(n - 1));
      std::exponential_distribution<double> expo(1.0);
      for (auto& x : a) x = expo(rng);
      std::sort(a.rbegin(), a.rend());
      const Partition s = pick(row_class(k));
      report(check_weightedstar_bound(s, k, a), s, k);
    }
    // invariant vector with the k lightest vertices, or a random k-subset
    {
      const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const WeightedGraph g = detail::varied_graph(n, rng, t);
      std::vector<int> verts;
      if (t % 2 == 0) {
        const auto byw = vertices_by_weight(g);
        verts.assign(byw.begin(), byw.begin() + k);
      } else {
        auto perm = random_relabeling(n, rng);
        verts.assign(perm.begin(), perm.begin() + k);
      }
      const Partition s = pick(row_class(k));
      report(check_invariant_vector_bound(s, k, g, verts), s, k);
    }
  }
  return r;
}

inline SuiteReport verify_dual(const VerifyOptions& o) {
  SuiteReport r{"dual", o.n};
  std::mt19937_64 rng(o.seed);
  for (int s = 0; s < detail::samples_or(o, 50); ++s) {
    const WeightedGraph g = detail::varied_graph(o.n, rng, s);
    const double wt = g.total_weight();
    for (const auto& p : all_partitions(o.n)) {
      if (!detail::fits(p)) continue;
      const double lmax = numeric_spectrum(p, g).lambda_max();
      const double l1c = numeric_spectrum(conjugate(p), g).lambda1();
      const double d = std::abs(lmax - (2 * wt - l1c));
      r.check(d < 1e-8, {{"shape", p.to_string()}, {"check", "duality"}, {"distance", d}});
      r.check(lmax <= 2 * wt + 1e-9, {{"shape", p.to_string()}, {"check", "trivial bound"}, {"lambda_max", lmax}});
    }
  }
  return r;
}

// Seeded ledger against a scan, witness soundness, the spectral gap theorem,
// the two-row comparison on quasi-complete graphs and game consistency.
inline SuiteReport verify_consistency(const VerifyOptions& o) {
  SuiteReport r{"consistency", o.n};
  const int n = o.n;
  ScanOptions so;
  so.n = n;
  so.budget = detail::samples_or(o, 200);
  so.seed = o.seed;
  so.workers = o.workers;
  const auto res = scan(so);
  for (const auto& c : res.contradictions)
    r.check(false, {{"sigma", c.sigma.to_string()}, {"tau", c.tau.to_string()}, {"citation", c.citation},
                    {"margin", c.evidence.margin}});
  r.checks += 1;
  for (const auto& f : recheck_witnesses(res.ledger)) r.check(false, {{"witness", f}});
  r.checks += 1;

  std::mt19937_64 rng(o.seed + 1);
  const auto shapes = all_partitions(n);
  for (int s = 0; s < 100 && n >= 2; ++s) {
    const WeightedGraph g = detail::varied_graph(n, rng, s);
    const double gap = laplacian_gap(g);
    const double l1std = numeric_spectrum(hook(n, 1), g).lambda1();
    r.check(std::abs(gap - l1std) < 1e-9, {{"check", "laplacian gap"}, {"gap", gap}, {"lambda1", l1std}});
    for (const auto& p : shapes) {
      if (p == Partition{n} || p == hook(n, 1) || !detail::fits(p)) continue;
      const double l1 = numeric_spectrum(p, g).lambda1();
      r.check(l1std <= l1 + 1e-9, {{"check", "spectral gap theorem"}, {"shape", p.to_string()}});
    }
  }
  if (n % 2 == 0 && n >= 4) {
    const Partition a{n / 2 + 1, n / 2 - 1}, b{n / 2, n / 2};
    std::exponential_distribution<double> expo(1.0);
    for (int s = 0; s < 200; ++s) {
      std::vector<double> w(static_cast<std::size_t>(n - 1));
      for (auto& x : w) x = expo(rng);
      const double la = quasi_complete_spectrum(a, w, false).to_numeric().lambda1();
      const double lb = quasi_complete_spectrum(b, w, false).to_numeric().lambda1();
      r.check(la <= lb + 1e-9, {{"check", "two-row quasi-complete"}, {"weights", w}});
    }
  }
  if (n <= 6) {
    GameSpectraOptions go;
    go.samples = 200;
    go.seed = o.seed;
    for (const auto& s : shapes)
      for (const auto& t : shapes) {
        const auto g = game_vs_spectra(s, t, go);
        r.check(g.inconsistencies == 0, {{"check", "game"}, {"sigma", s.to_string()}, {"tau", t.to_string()}});
      }
  }
  return r;
}

inline SuiteReport run_suite(const std::string& name, const VerifyOptions& o) {
  if (o.n < 2) throw std::invalid_argument("verify needs n >= 2");
  static const std::map<std::string, std::function<SuiteReport(const VerifyOptions&)>> suites{
      {"lemma9", verify_lemma9}, {"qc", verify_qc},         {"hooks", verify_hooks},
      {"characters", verify_characters}, {"oracle", verify_oracle}, {"bounds", verify_bounds},
      {"dual", verify_dual},     {"consistency", verify_consistency}};
  auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(o);
}

}  // namespace aldous
