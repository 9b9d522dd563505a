#include <set>

#include "catch_amalgamated.hpp"

#include "aldous/partition.hpp"
#include "oracles.hpp"

using namespace aldous;

TEST_CASE("parse accepts both syntaxes") {
  CHECK(parse_partition("5,1") == Partition{5, 1});
  CHECK(parse_partition("2,1^3") == Partition{2, 1, 1, 1});
  CHECK(parse_partition("[3, 2, 2]") == Partition{3, 2, 2});
  CHECK(parse_partition("1^4") == Partition{1, 1, 1, 1});
  CHECK(parse_partition("2^2,1") == Partition{2, 2, 1});
}

TEST_CASE("parse rejects malformed text") {
  CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("text round trip") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_partitions(n)) {
      CHECK(parse_partition(p.to_string()) == p);
      CHECK(parse_partition(p.label()) == p);
    }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition counts") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 1; n <= 10; ++n) CHECK(all_partitions(n).size() == static_cast<std::size_t>(expected[n]));
  const auto p4 = all_partitions(4);
  CHECK(p4.front() == Partition{4});
  CHECK(p4.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("dominance matches box-drop reachability") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_partitions(n))
      for (const auto& q : all_partitions(n)) CHECK(dominates(p, q) == oracle::dominates_by_box_drops(p, q));
  CHECK(dominates(Partition{3, 2}, Partition{3, 1, 1}));
  CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
}

TEST_CASE("content sums increase strictly up the dominance order") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& p : all_partitions(n))
      for (const auto& q : all_partitions(n))
        if (p != q && dominates(p, q)) CHECK(content_sum(p) > content_sum(q));
}

TEST_CASE("tableau count: hook length formula vs brute force filling") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : all_partitions(n)) {
      const auto brute = oracle::brute_force_tableaux(p);
      CHECK(tableau_count(p) == brute.size());
      CHECK(tableau_count(p) == oracle::hook_length_count(p));
    }
  CHECK(tableau_count(Partition{5, 4, 3, 2, 1}) == 292864);
}

TEST_CASE("enumerated tableaux are the brute-force tableaux") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : all_partitions(n)) {
      std::multiset<std::vector<int>> ours, theirs;
      for (const auto& t : standard_tableaux(p)) {
        std::vector<int> c;
        for (int k = 1; k <= n; ++k) c.push_back(t.content_of(k));
        ours.insert(c);
      }
      for (const auto& c : oracle::brute_force_tableaux(p)) theirs.insert(c);
      CHECK(ours == theirs);
    }
}

TEST_CASE("tableau enumeration order: top-row corner removed first") {
  // [2,1]: first tableau has 3 in row 1
  const auto ts = standard_tableaux(Partition{2, 1});
  REQUIRE(ts.size() == 2);
  CHECK(ts[0].box_of(3).row == 1);
  CHECK(ts[1].box_of(3).row == 2);
}

TEST_CASE("tableau cap") {
  CHECK_THROWS_AS(standard_tableaux(Partition{3, 2, 1}, 10), TableauCapExceeded);
}

TEST_CASE("corners and box removal") {
  const Partition p({3, 1});
  const auto c = corners(p);
  REQUIRE(c.size() == 2);
  CHECK(c[0].row == 1);
  CHECK(c[0].col == 3);
  CHECK(c[0].content() == 2);
  CHECK(c[1].content() == -1);
  CHECK(remove_box(p, c[0]) == Partition{2, 1});
  CHECK(remove_box(p, c[1]) == Partition{3});
}

TEST_CASE("row and column classes") {
  CHECK(in_row_class(Partition{6, 2}, 2));
  CHECK_FALSE(in_row_class(Partition{5, 3}, 2));
  CHECK(in_column_class(Partition{2, 1, 1, 1, 1, 1, 1}, 1));
  CHECK(is_hook(hook(6, 3)));
  CHECK_FALSE(is_hook(Partition{2, 2}));
  CHECK(hook(5, 0) == Partition{5});
  CHECK(hook(5, 4) == Partition{1, 1, 1, 1, 1});
}

TEST_CASE("lexicographic order") {
  CHECK(lex_compare(Partition{3, 1}, Partition{2, 2}) == std::strong_ordering::greater);
  CHECK(Partition{2, 1, 1} < Partition{2, 2});
}
