#pragma once

// Permutations of {1..n} in one-line notation. Composition is function
// composition: (g * h)(x) = g(h(x)).

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "aldous/partition.hpp"

namespace aldous {

class Permutation {
 public:
  Permutation() = default;

  // images[i-1] is the image of i.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size() + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  static Permutation transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("transposition indices out of range");
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  template <class Rng>
  static Permutation random(int n, Rng& rng) {
    auto p = identity(n);
    std::shuffle(p.images_.begin(), p.images_.end(), rng);
    return p;
  }

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& g, const Permutation& h) {
    if (g.n() != h.n()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> out(h.images_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = g(h.images_[i]);
    return Permutation(std::move(out));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  int inversions() const {
    int c = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++c;
    return c;
  }

  int sign() const { return inversions() % 2 == 0 ? 1 : -1; }

  // Indices i_1..i_m with g = s_{i_1} * ... * s_{i_m}, s_i = (i, i+1).
  // Length equals the number of inversions.
  std::vector<int> adjacent_word() const {
    std::vector<int> cur = images_;
    std::vector<int> reversed_word;
    // Right-multiplying by s_i swaps positions i, i+1 of the one-line word;
    // bubble-sort the word down to the identity.
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        if (cur[i] > cur[i + 1]) {
          std::swap(cur[i], cur[i + 1]);
          reversed_word.push_back(static_cast<int>(i) + 1);
          changed = true;
        }
      }
    }
    return {reversed_word.rbegin(), reversed_word.rend()};
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(images_[i]);
    }
    return s + ")";
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

inline Partition cycle_type(const Permutation& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<int> lengths;
  for (int i = 1; i <= g.n(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = g(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

// Cycles of the given lengths (nonincreasing) laid out on consecutive
// integers: [3,2,1] -> (1 2 3)(4 5)(6).
inline Permutation class_representative(const Partition& mu) {
  std::vector<int> images(static_cast<std::size_t>(mu.n()));
  int start = 1;
  for (int len : mu.parts()) {
    for (int t = 0; t < len; ++t) {
      int from = start + t;
      int to = start + (t + 1) % len;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    start += len;
  }
  return Permutation(std::move(images));
}

}  // namespace aldous
