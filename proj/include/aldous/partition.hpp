#pragma once

// Integer partitions / Young diagrams, their orders, and standard tableaux.
//
// Coordinates: a Box is (col, row), both 1-based, with the top row first.
// Its content is col - row.
//
// Domination: p dominates q when q is reachable from p by repeatedly
// dropping one box to a lower row so that a Young diagram remains. This is
// equivalent to the prefix-sum criterion
//     sum_{i<=m} p_i >= sum_{i<=m} q_i   for every m,
// which is what dominates() evaluates.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aldous {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be nonincreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // Length of 1-based row r; 0 past the last row.
  int row(int r) const {
    return (r >= 1 && r <= rows()) ? parts_[static_cast<std::size_t>(r - 1)] : 0;
  }
  int first_row() const { return row(1); }

  // Height of 1-based column c.
  int column(int c) const {
    int h = 0;
    for (int len : parts_)
      if (len >= c) ++h;
    return h;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  // "[2,1,1]" style label.
  std::string label() const { return "[" + to_string() + "]"; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.label();
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct Box {
  int col = 1;
  int row = 1;
  int content() const { return col - row; }
  friend bool operator==(const Box&, const Box&) = default;
};

// A standard Young tableau, stored as the box holding each label:
// label_box[k-1] is the box removed at step k of the removal path.
struct StandardTableau {
  Partition shape;
  std::vector<Box> label_box;

  const Box& box_of(int label) const {
    return label_box.at(static_cast<std::size_t>(label - 1));
  }
  int content_of(int label) const { return box_of(label).content(); }

  // Row of every label, 1-based; uniquely identifies the tableau.
  std::vector<int> row_word() const {
    std::vector<int> w;
    w.reserve(label_box.size());
    for (const auto& b : label_box) w.push_back(b.row);
    return w;
  }
};

// Accepts "5,1", "2,1^3", optional surrounding brackets and whitespace.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) s.erase(s.begin());
  if (!s.empty() && (s.back() == ']' || s.back() == ')')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty partition text");

  auto parse_int = [&](const std::string& tok) -> int {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c)) || c == '-';
        }))
      throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition text: '" + std::string(text) + "'");
    }
  };

  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto caret = tok.find('^');
    int value = parse_int(tok.substr(0, caret));
    int reps = 1;
    if (caret != std::string::npos) {
      reps = parse_int(tok.substr(caret + 1));
      if (reps <= 0) throw std::invalid_argument("exponent must be positive");
    }
    if (value <= 0) throw std::invalid_argument("partition parts must be positive");
    parts.insert(parts.end(), static_cast<std::size_t>(reps), value);
  }
  if (s.back() == ',') throw std::invalid_argument("malformed partition text (trailing comma)");
  return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> cols;
  for (int c = 1; c <= p.first_row(); ++c) cols.push_back(p.column(c));
  return Partition(std::move(cols));
}

inline void require_same_size(const Partition& p, const Partition& q) {
  if (p.n() != q.n())
    throw std::invalid_argument("partitions " + p.label() + " and " + q.label() +
                                " have different sizes");
}

inline bool dominates(const Partition& p, const Partition& q) {
  require_same_size(p, q);
  int sp = 0, sq = 0;
  const int m = std::max(p.rows(), q.rows());
  for (int i = 1; i <= m; ++i) {
    sp += p.row(i);
    sq += q.row(i);
    if (sp < sq) return false;
  }
  return true;
}

inline std::strong_ordering lex_compare(const Partition& p, const Partition& q) {
  require_same_size(p, q);
  return p.parts() <=> q.parts();
}

// Removable boxes, top row first.
inline std::vector<Box> corners(const Partition& p) {
  std::vector<Box> out;
  for (int r = 1; r <= p.rows(); ++r)
    if (p.row(r) > p.row(r + 1)) out.push_back(Box{p.row(r), r});
  return out;
}

inline Partition remove_box(const Partition& p, const Box& b) {
  std::vector<int> parts = p.parts();
  if (b.row < 1 || b.row > p.rows() || parts[static_cast<std::size_t>(b.row - 1)] != b.col ||
      p.row(b.row + 1) >= b.col)
    throw std::invalid_argument("box is not a corner of " + p.label());
  if (--parts[static_cast<std::size_t>(b.row - 1)] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

inline long long content_sum(const Partition& p) {
  long long s = 0;
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.row(r); ++c) s += c - r;
  return s;
}

// Membership in the class of diagrams whose first row has >= n-k boxes.
inline bool in_row_class(const Partition& p, int k) { return p.first_row() >= p.n() - k; }
inline bool in_column_class(const Partition& p, int k) {
  return in_row_class(conjugate(p), k);
}

inline bool is_hook(const Partition& p) { return p.rows() <= 1 || p.row(2) <= 1; }

// [n-k, 1^k]
inline Partition hook(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw std::invalid_argument("hook index out of range");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

// All partitions of n, reverse-lexicographic ([n] first, [1^n] last).
inline std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative n");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(remaining, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Number of standard tableaux by the hook length formula. Computed in long
// double and rounded; exact well beyond the dimension caps used here.
inline std::uint64_t tableau_count(const Partition& p) {
  long double v = 1.0L;
  int next = 1;
  std::vector<long double> hooks;
  for (int r = 1; r <= p.rows(); ++r)
    for (int c = 1; c <= p.row(r); ++c)
      hooks.push_back(static_cast<long double>((p.row(r) - c) + (p.column(c) - r) + 1));
  std::sort(hooks.begin(), hooks.end());
  // interleave multiplications and divisions to keep magnitudes moderate
  for (long double h : hooks) {
    v *= static_cast<long double>(next++);
    v /= h;
  }
  long double r = std::round(v);
  if (r > static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(r);
}

// Visits every standard tableau of p. Paths are produced by recursive corner
// removal starting from step n, corners tried top row first; this order is
// the canonical basis order used by the representation matrices.
template <class Visitor>
void for_each_standard_tableau(const Partition& p, Visitor&& visit) {
  StandardTableau t{p, std::vector<Box>(static_cast<std::size_t>(p.n()))};
  std::vector<int> rows = p.parts();
  std::function<void(int)> rec = [&](int step) {
    if (step == 0) {
      visit(static_cast<const StandardTableau&>(t));
      return;
    }
    const int m = static_cast<int>(rows.size());
    for (int r = 1; r <= m; ++r) {
      const int len = rows[static_cast<std::size_t>(r - 1)];
      if (len == 0) continue;
      const int below = r < m ? rows[static_cast<std::size_t>(r)] : 0;
      if (len <= below) continue;
      t.label_box[static_cast<std::size_t>(step - 1)] = Box{len, r};
      --rows[static_cast<std::size_t>(r - 1)];
      rec(step - 1);
      ++rows[static_cast<std::size_t>(r - 1)];
    }
  };
  rec(p.n());
}

class TableauCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultTableauCap = 10'000'000;

inline std::vector<StandardTableau> standard_tableaux(const Partition& p,
                                                      std::uint64_t cap = kDefaultTableauCap) {
  const std::uint64_t count = tableau_count(p);
  if (count > cap)
    throw TableauCapExceeded(p.label() + " has " + std::to_string(count) +
                             " standard tableaux, above the cap of " + std::to_string(cap));
  std::vector<StandardTableau> out;
  out.reserve(static_cast<std::size_t>(count));
  for_each_standard_tableau(p, [&](const StandardTableau& t) { out.push_back(t); });
  return out;
}

}  // namespace aldous
