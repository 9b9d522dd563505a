#pragma once

// Two-player box removal game on a pair of Young diagrams of equal size.
// A holds sigma, B holds tau. Each round B removes a corner box and calls
// out its content (col - row); A must then remove a corner whose content is
// no less. A wins if she can always answer, ties going to A.
//
// A winning strategy for A means: for every quasi-complete graph,
// lambda_1(sigma) <= lambda_1(tau) (the maximum of sum a_k c_k over tableaux
// is at least as large for sigma). The converse is only sampled.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aldous/partition.hpp"
#include "aldous/rational.hpp"
#include "aldous/spectral.hpp"

namespace aldous {

struct GameState {
  Partition a_shape;
  Partition b_shape;
};

class GameSolver {
 public:
  bool a_wins(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("game needs diagrams of equal size");
    if (a.n() == 0) return true;
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool win = true;
    for (const Box& bb : corners(b)) {
      if (!reply(a, b, bb)) {
        win = false;
        break;
      }
    }
    memo_.emplace(key, win);
    return win;
  }

  // A's first winning reply to B removing bb, if any.
  std::optional<Box> reply(const Partition& a, const Partition& b, const Box& bb) {
    const Partition b_next = remove_box(b, bb);
    for (const Box& ab : corners(a))
      if (ab.content() >= bb.content() && a_wins(remove_box(a, ab), b_next)) return ab;
    return std::nullopt;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::map<std::pair<Partition, Partition>, bool> memo_;
};

inline bool game_winner(const Partition& sigma, const Partition& tau) {
  GameSolver solver;  // memo per call
  return solver.a_wins(sigma, tau);
}

struct GameMove {
  int round = 0;
  Box b_box;
  std::optional<Box> a_box;  // empty when A cannot answer
};

// One optimal line: B plays a refuting corner when one exists, otherwise its
// first corner; A answers with her first winning reply, or else her
// highest-content legal corner.
inline std::vector<GameMove> game_trace(const Partition& sigma, const Partition& tau) {
  if (sigma.n() != tau.n()) throw std::invalid_argument("game needs diagrams of equal size");
  GameSolver solver;
  std::vector<GameMove> line;
  Partition a = sigma, b = tau;
  for (int round = 1; a.n() > 0; ++round) {
    const auto bc = corners(b);
    Box pick = bc.front();
    for (const Box& c : bc)
      if (!solver.reply(a, b, c)) {
        pick = c;
        break;
      }
    GameMove mv{round, pick, solver.reply(a, b, pick)};
    if (!mv.a_box) {
      std::optional<Box> best;
      for (const Box& c : corners(a))
        if (c.content() >= pick.content() && (!best || c.content() > best->content())) best = c;
      mv.a_box = best;
    }
    line.push_back(mv);
    if (!mv.a_box) break;
    a = remove_box(a, *mv.a_box);
    b = remove_box(b, pick);
  }
  return line;
}

// ---------------------------------------------------------------------------
// Game vs. quasi-complete spectra

namespace detail {

// Contents c_2..c_n of every standard tableau of the shape.
inline std::vector<std::vector<int>> tableau_contents(const Partition& shape) {
  std::vector<std::vector<int>> out;
  for_each_standard_tableau(shape, [&](const StandardTableau& t) {
    std::vector<int> c;
    for (int k = 2; k <= shape.n(); ++k) c.push_back(t.content_of(k));
    out.push_back(std::move(c));
  });
  return out;
}

// max_T sum_k a_k c_k(T); lambda_1 = wt - this.
template <class Scalar>
Scalar max_content_pairing(const std::vector<std::vector<int>>& contents, std::span<const Scalar> a) {
  Scalar best{};
  bool first = true;
  for (const auto& c : contents) {
    Scalar s = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) s += a[k] * Scalar(c[k]);
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

}  // namespace detail

struct GameSpectraOptions {
  int samples = 1000;  // random nonnegative weight vectors
  int grid = 2;        // exhaustive over {0..grid}^{n-1}, skipped if larger than max_grid_points
  std::size_t max_grid_points = 200000;
  std::uint64_t seed = 7;
  double tol = 1e-9;
};

struct GameSpectraReport {
  bool winner = false;
  std::size_t checked = 0;
  std::size_t inconsistencies = 0;  // winner, yet lambda_1(sigma) > lambda_1(tau) + tol
  bool witness_found = false;       // some sample has lambda_1(sigma) > lambda_1(tau) + tol
  std::vector<double> witness;      // a_2..a_n of the first such sample
};

inline GameSpectraReport game_vs_spectra(const Partition& sigma, const Partition& tau,
                                         const GameSpectraOptions& opt = {}) {
  require_same_size(sigma, tau);
  const int n = sigma.n();
  GameSpectraReport r;
  r.winner = game_winner(sigma, tau);
  if (n < 2) {
    r.checked = 0;
    return r;
  }
  const auto cs = detail::tableau_contents(sigma);
  const auto ct = detail::tableau_contents(tau);
  const std::size_t m = static_cast<std::size_t>(n - 1);

  // lambda_1(sigma) - lambda_1(tau) = max_tau - max_sigma
  auto record = [&](double gap, const std::vector<double>& a) {
    ++r.checked;
    if (gap > opt.tol) {
      if (r.winner) ++r.inconsistencies;
      if (!r.witness_found) r.witness = a;
      r.witness_found = true;
    }
  };
  auto eval = [&](const std::vector<double>& a) {
    const std::span<const double> s(a);
    record(detail::max_content_pairing(ct, s) - detail::max_content_pairing(cs, s), a);
  };

  std::mt19937_64 rng(opt.seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < opt.samples; ++i) {
    std::vector<double> a(m);
    // alternate dense and sparse samples
    for (auto& x : a) x = (i % 2 == 0) ? expo(rng) : (unif(rng) < 0.5 ? 0.0 : unif(rng));
    eval(a);
  }

  std::size_t points = 1;
  bool grid_ok = opt.grid >= 0;
  for (std::size_t k = 0; k < m && grid_ok; ++k) {
    points *= static_cast<std::size_t>(opt.grid + 1);
    if (points > opt.max_grid_points) grid_ok = false;
  }
  if (grid_ok) {
    std::vector<double> a(m, 0.0);
    for (std::size_t p = 0; p < points; ++p) {
      std::size_t q = p;
      for (std::size_t k = 0; k < m; ++k) {
        a[k] = static_cast<double>(q % static_cast<std::size_t>(opt.grid + 1));
        q /= static_cast<std::size_t>(opt.grid + 1);
      }
      eval(a);
    }
  }

  // a_k = n^{-2k}, exact
  {
    const auto a = fast_decreasing_weights(n);
    const std::span<const Rational> s(a);
    const Rational gap = detail::max_content_pairing(ct, s) - detail::max_content_pairing(cs, s);
    std::vector<double> ad;
    for (const auto& x : a) ad.push_back(to_double(x));
    ++r.checked;
    if (gap > 0) {
      if (r.winner) ++r.inconsistencies;
      if (!r.witness_found) r.witness = ad;
      r.witness_found = true;
    }
  }
  return r;
}

}  // namespace aldous
