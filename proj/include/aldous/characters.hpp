#pragma once

// Class functions on S_n and the character formulas for hook shapes.
//
// Murnaghan-Nakayama sign: each removed border strip contributes
// (-1)^(rows - 1). Counting height(s) as the sum of (1 + rows) over the
// strips gives the same parity, since (-1)^(1 + rows) = (-1)^(rows - 1).

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aldous/partition.hpp"
#include "aldous/permutation.hpp"
#include "aldous/rational.hpp"
#include "aldous/symrep.hpp"

namespace aldous {

struct ClassFunction {
  int n = 0;
  std::map<Partition, long long> values;  // keyed by cycle type

  long long operator()(const Partition& cycle_type) const { return values.at(cycle_type); }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// n! / prod_i (i^{m_i} m_i!)
inline BigInt class_size(const Partition& mu) {
  std::map<int, int> mult;
  for (int c : mu.parts()) ++mult[c];
  BigInt denom = 1;
  for (auto [len, m] : mult) {
    for (int t = 0; t < m; ++t) denom *= len;
    denom *= factorial(m);
  }
  return factorial(mu.n()) / denom;
}

class CharacterRoundingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ClassFunction character_from_rep(const Partition& shape) {
  auto model = irrep_model(shape);
  ClassFunction chi{shape.n(), {}};
  for (const auto& mu : all_partitions(shape.n())) {
    const double tr = model->permutation(class_representative(mu)).trace();
    const double rounded = std::round(tr);
    if (std::abs(tr - rounded) >= 1e-6)
      throw CharacterRoundingError("trace " + std::to_string(tr) + " on class " + mu.label() +
                                   " of " + shape.label() + " is not an integer");
    chi.values.emplace(mu, static_cast<long long>(rounded));
  }
  return chi;
}

// (1/n!) sum_classes |C| chi(C) psi(C); characters are real.
inline Rational inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (chi.n != psi.n) throw std::invalid_argument("class functions on different groups");
  BigInt s = 0;
  for (const auto& [mu, v] : chi.values) s += class_size(mu) * BigInt(v) * BigInt(psi(mu));
  return Rational(s, factorial(chi.n));
}

// Character of the k-th exterior power of the n-dimensional permutation
// representation: sum over cycle subsets of total length k of
// (-1)^{sum (c_i - 1)}.
inline ClassFunction wedge_character(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("wedge degree must satisfy 0 <= k <= n");
  ClassFunction chi{n, {}};
  for (const auto& mu : all_partitions(n)) {
    const auto& c = mu.parts();
    // subset-sum count with signs
    std::vector<long long> ways(static_cast<std::size_t>(k) + 1, 0);
    ways[0] = 1;
    for (int len : c) {
      const long long sign = (len - 1) % 2 == 0 ? 1 : -1;
      for (int s = k; s >= len; --s)
        ways[static_cast<std::size_t>(s)] += sign * ways[static_cast<std::size_t>(s - len)];
    }
    chi.values.emplace(mu, ways[static_cast<std::size_t>(k)]);
  }
  return chi;
}

namespace detail {

// Hook state: corner plus `arm` boxes to its right and `leg` boxes below.
// empty == true once the corner itself is gone.
inline long long mn_hook(int arm, int leg, bool empty, const std::vector<int>& cycles, std::size_t next) {
  if (next == cycles.size()) return empty ? 1 : 0;
  if (empty) return 0;
  const int c = cycles[next];
  long long total = 0;
  if (c == arm + leg + 1)  // whole hook, occupies leg + 1 rows
    total += ((leg % 2) == 0 ? 1 : -1) * mn_hook(0, 0, true, cycles, next + 1);
  if (c <= arm)  // horizontal strip at the end of the arm, one row
    total += mn_hook(arm - c, leg, false, cycles, next + 1);
  if (c <= leg)  // vertical strip at the bottom of the leg, c rows
    total += (((c - 1) % 2) == 0 ? 1 : -1) * mn_hook(arm, leg - c, false, cycles, next + 1);
  return total;
}

}  // namespace detail

// Character of [n-k, 1^k] by Murnaghan-Nakayama restricted to hooks.
inline ClassFunction mn_hook_character(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("hook index must satisfy 0 <= k <= n-1");
  ClassFunction chi{n, {}};
  for (const auto& mu : all_partitions(n))
    chi.values.emplace(mu, detail::mn_hook(n - k - 1, k, false, mu.parts(), 0));
  return chi;
}

// chi of the k-th exterior power of [n-1,1] from the recursion
// chi_{wedge^k V} = chi^wedge_k + chi^wedge_{k-1}.
inline ClassFunction wedge_standard_character(int n, int k) {
  ClassFunction chi{n, {}};
  for (const auto& mu : all_partitions(n)) {
    long long v = 0;
    for (int j = 0; j <= k; ++j) v += ((k - j) % 2 == 0 ? 1 : -1) * wedge_character(n, j)(mu);
    chi.values.emplace(mu, v);
  }
  return chi;
}

struct HookWedgeCheck {
  int k;
  Partition cycle_type;
  long long wedge_value;
  long long hook_value;
  bool ok;
};

struct HookWedgeReport {
  int n = 0;
  std::vector<HookWedgeCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

inline HookWedgeReport verify_hook_wedge_iso(int n) {
  if (n < 2) throw std::invalid_argument("hook/wedge check needs n >= 2");
  HookWedgeReport report{n, {}};
  for (int k = 0; k <= n - 1; ++k) {
    const auto wedge = wedge_standard_character(n, k);
    const auto hookc = mn_hook_character(n, k);
    for (const auto& [mu, v] : wedge.values)
      report.checks.push_back({k, mu, v, hookc(mu), v == hookc(mu)});
  }
  return report;
}

}  // namespace aldous
