// Randomized and exhaustive invariants. Generators live in oracles.hpp;
// every case is seeded so failures replay.

#include <random>

#include "catch_amalgamated.hpp"

#include "aldous/aldous.hpp"
#include "oracles.hpp"

using namespace aldous;

TEST_CASE("partitions: conjugation is an involution, n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (const auto& p : all_partitions(n)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("partitions: dominance is a partial order refining reverse lex, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = all_partitions(n);
    for (const auto& p : ps) {
      REQUIRE(dominates(p, p));
      for (const auto& q : ps) {
        if (dominates(p, q)) {
          REQUIRE(lex_compare(p, q) != std::strong_ordering::less);
          if (p != q) {
            REQUIRE_FALSE(dominates(q, p));
            REQUIRE(content_sum(p) > content_sum(q));
          }
          for (const auto& r : ps)
            if (dominates(q, r)) REQUIRE(dominates(p, r));
        }
      }
    }
  }
}

TEST_CASE("partitions: sum of squared dimensions is n!, dims match the model") {
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t s = 0, fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    for (const auto& p : all_partitions(n)) {
      const auto d = tableau_count(p);
      s += d * d;
      REQUIRE(irrep_model(p)->dim() == d);
    }
    REQUIRE(s == fact);
  }
}

TEST_CASE("representations: braid relations and orthogonality, n <= 7") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& p : all_partitions(n)) {
      const auto model = irrep_model(p);
      const auto d = static_cast<Eigen::Index>(model->dim());
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
      for (int i = 1; i + 1 < n; ++i) {
        const Eigen::MatrixXd a = model->adjacent(i).dense(), b = model->adjacent(i + 1).dense();
        REQUIRE((a * b * a - b * a * b).norm() < 1e-10);
        REQUIRE((a * a.transpose() - id).norm() < 1e-10);
      }
    }
}

TEST_CASE("representations: traces are class functions") {
  oracle::Gen gen(101);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.integer(2, 6);
    const auto p = gen.partition(n);
    const auto g = Permutation::random(n, gen.rng), h = Permutation::random(n, gen.rng);
    const double a = rep_permutation(p, g).entries.trace();
    const double b = rep_permutation(p, h * g * h.inverse()).entries.trace();
    REQUIRE(std::abs(a - b) < 1e-9);
  }
}

TEST_CASE("representations: delta is positive semidefinite") {
  oracle::Gen gen(103);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 7);
    const auto p = gen.partition(n);
    const auto g = gen.graph(n);
    REQUIRE(numeric_spectrum(p, g).lambda1() >= -1e-9);
  }
}

TEST_CASE("representations: star operators are diagonal in the tableau basis") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : all_partitions(n)) {
      const auto tabs = standard_tableaux(p);
      for (int k = 2; k <= n; ++k) {
        const auto m = delta_matrix(p, family::star(n, k));
        for (Eigen::Index i = 0; i < m.rows(); ++i)
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            const double expected = i == j ? (k - 1) - tabs[static_cast<std::size_t>(i)].content_of(k) : 0.0;
            REQUIRE(std::abs(m(i, j) - expected) < 1e-10);
          }
      }
    }
}

TEST_CASE("spectra: duality and the trivial bound") {
  oracle::Gen gen(107);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 7);
    const auto p = gen.partition(n);
    const auto g = gen.graph(n);
    const double wt = g.total_weight();
    auto a = numeric_spectrum(p, g).values();
    const auto b = numeric_spectrum(conjugate(p), g).values();
    for (auto& x : a) x = 2 * wt - x;
    REQUIRE(multiset_distance(a, b) < 1e-8);
    REQUIRE(numeric_spectrum(p, g).lambda_max() <= 2 * wt + 1e-9);
  }
}

TEST_CASE("spectra: eigensolver certificate") {
  oracle::Gen gen(109);
  for (int t = 0; t < 30; ++t) {
    const int n = gen.integer(2, 6);
    const auto m = delta_matrix(gen.partition(n), gen.graph(n));
    const auto d = jacobi_eigen(m);
    REQUIRE(max_residual(m, d) <= 10 * 1e-12 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("spectra: quasi-complete formula, random weights") {
  oracle::Gen gen(113);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.integer(2, 7);
    const auto a = gen.weights(n - 1);
    const auto p = gen.partition(n);
    REQUIRE(multiset_distance(quasi_complete_spectrum(p, a, true).to_numeric(),
                              numeric_spectrum(p, family::quasi_complete(a))) < 1e-8);
  }
}

TEST_CASE("spectra: hook subset sums, random graphs") {
  oracle::Gen gen(127);
  for (int t = 0; t < 20; ++t) {
    const int n = gen.integer(2, 8);
    const int k = gen.integer(0, n - 1);
    const auto g = gen.graph(n);
    REQUIRE(multiset_distance(hook_spectrum(g, k), numeric_spectrum(hook(n, k), g)) < 1e-6);
  }
}

TEST_CASE("order: scan never contradicts the seeded entries, n <= 7") {
  for (int n = 3; n <= 7; ++n) {
    ScanOptions o;
    o.n = n;
    o.budget = n <= 5 ? 60 : 15;
    o.seed = 1000 + static_cast<std::uint64_t>(n);
    const auto r = scan(o);
    REQUIRE(r.contradictions.empty());
    REQUIRE(recheck_witnesses(r.ledger).empty());
  }
}

TEST_CASE("order: two-row shapes on quasi-complete graphs") {
  oracle::Gen gen(131);
  for (int half = 2; 2 * half <= 12; ++half) {
    const int n = 2 * half;
    for (int t = 0; t < 30; ++t) {
      const auto a = gen.weights(n - 1);
      const auto l = quasi_complete_spectrum(Partition{half + 1, half - 1}, a, true).lambda1();
      const auto r = quasi_complete_spectrum(Partition{half, half}, a, true).lambda1();
      REQUIRE(l <= r);
    }
  }
}

TEST_CASE("order: the standard representation has the smallest lambda_1") {
  oracle::Gen gen(137);
  for (int t = 0; t < 40; ++t) {
    const int n = gen.integer(2, 7);
    const auto g = gen.graph(n);
    const double l1 = numeric_spectrum(hook(n, 1), g).lambda1();
    for (const auto& p : all_partitions(n))
      if (p != Partition{n}) REQUIRE(l1 <= numeric_spectrum(p, g).lambda1() + 1e-9);
    REQUIRE(std::abs(l1 - laplacian_gap(g)) < 1e-9);
  }
}

TEST_CASE("order: star decomposition sums back exactly") {
  oracle::Gen gen(139);
  int tested = 0;
  while (tested < 50) {
    const int n = gen.integer(3, 9);
    const int k = gen.integer(1, 2);
    const auto g = gen.graph(n);
    if (!is_matching_irreducible(g, k)) continue;
    ++tested;
    const auto stars = star_decompose(g, k);
    REQUIRE(static_cast<int>(stars.size()) <= 4 * k - 2);
    WeightedGraph sum(n);
    for (const auto& s : stars) sum = sum + s.graph;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) REQUIRE(sum.weight(i, j) == g.weight(i, j));
  }
}

TEST_CASE("game: winners imply the spectral comparison on sampled graphs") {
  oracle::Gen gen(149);
  for (int t = 0; t < 60; ++t) {
    const int n = gen.integer(2, 6);
    const auto a = gen.partition(n), b = gen.partition(n);
    if (!game_winner(a, b)) continue;
    const auto w = gen.weights(n - 1);
    const auto la = quasi_complete_spectrum(a, w, true).lambda1();
    const auto lb = quasi_complete_spectrum(b, w, true).lambda1();
    REQUIRE(la <= lb);
  }
}

TEST_CASE("cli plumbing: configs round trip") {
  RunConfig c;
  c.n = 6;
  c.families = {"stars", "cycles"};
  c.seed = 77;
  const auto back = config_from_json(to_json(c));
  REQUIRE(to_json(back) == to_json(c));
}
