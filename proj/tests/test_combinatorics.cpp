#include "biis/combinatorics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

using namespace biis;

TEST_CASE("binomial coefficients", "[combinatorics]") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(7, -1) == 0);
  CHECK(binomial(52, 5) == BigInt("2598960"));
  for (long n = 1; n <= 20; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorials and falling factorials", "[combinatorics]") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 5) == 120);
  CHECK(falling_factorial(3, 4) == 0);
  for (long n = 0; n <= 12; ++n)
    CHECK(falling_factorial(n, n) == factorial(n));
}

TEST_CASE("integer and rational powers", "[combinatorics]") {
  CHECK(ipow(BigInt(3), 0) == 1);
  CHECK(ipow(BigInt(3), 7) == 2187);
  CHECK(ipow(BigInt(-2), 3) == -8);
  CHECK_THROWS_AS(ipow(BigInt(2), -1), std::invalid_argument);
  CHECK(rpow(BigRat(2), 10) == BigRat(1024));
  CHECK(rpow(BigRat(2), -3) == BigRat(1, 8));
  CHECK(rpow(BigRat(3, 2), 2) == BigRat(9, 4));
}

TEST_CASE("ordered Bell numbers", "[combinatorics]") {
  const long long known[] = {1,      1,       3,       13,       75,
                             541,    4683,    47293,   545835,   7087261,
                             102247563};
  for (int m = 0; m <= 10; ++m) CHECK(ordered_bell(m) == known[m]);

  // Independent route: sum over block counts of k! * S(m, k) with the
  // Stirling partition numbers from their own recurrence.
  const int top = 12;
  std::vector<std::vector<BigInt>> stirling(top + 1,
                                            std::vector<BigInt>(top + 1, 0));
  stirling[0][0] = 1;
  for (int m = 1; m <= top; ++m)
    for (int k = 1; k <= m; ++k)
      stirling[m][k] = stirling[m - 1][k - 1] + k * stirling[m - 1][k];
  for (int m = 0; m <= top; ++m) {
    BigInt total = 0;
    for (int k = 0; k <= m; ++k) total += factorial(k) * stirling[m][k];
    CHECK(ordered_bell(m) == total);
  }
}

TEST_CASE("ordered set partitions enumerate correctly", "[combinatorics]") {
  for (int m = 0; m <= 6; ++m) {
    std::vector<int> items;
    for (int i = 0; i < m; ++i) items.push_back(10 + i);
    const auto parts = ordered_set_partitions(items);
    CHECK(BigInt(parts.size()) == ordered_bell(m));

    std::set<std::vector<std::vector<int>>> distinct(parts.begin(),
                                                     parts.end());
    CHECK(distinct.size() == parts.size());
    for (const auto& p : parts) {
      std::vector<int> flat;
      for (const auto& block : p) {
        CHECK(!block.empty());
        flat.insert(flat.end(), block.begin(), block.end());
      }
      std::sort(flat.begin(), flat.end());
      CHECK(flat == items);
    }
  }
  // The empty input has exactly the empty partition.
  const auto none = ordered_set_partitions({});
  REQUIRE(none.size() == 1);
  CHECK(none[0].empty());
}

TEST_CASE("fixed-size subsets", "[combinatorics]") {
  const std::vector<int> items = {4, 7, 9, 12};
  for (int k = 0; k <= 5; ++k) {
    const auto subs = subsets_of_size(items, k);
    CHECK(BigInt(subs.size()) == binomial(4, k));
    for (const auto& s : subs) {
      CHECK(static_cast<int>(s.size()) == k);
      CHECK(std::is_sorted(s.begin(), s.end()));
    }
    std::set<std::vector<int>> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == subs.size());
  }
}
