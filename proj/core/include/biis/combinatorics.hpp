#pragma once

#include "biis/types.hpp"

#include <vector>

namespace biis {

/// Binomial coefficient C(n, k); 0 outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Factorial n!.
BigInt factorial(long n);

/// Falling factorial (n)_k = n (n-1) ... (n-k+1); (n)_0 = 1 and 0 for k > n.
BigInt falling_factorial(long n, long k);

/// Integer power b^e for e >= 0.
BigInt ipow(const BigInt& b, long e);

/// Rational power b^e for integer e of either sign (b != 0 when e < 0).
BigRat rpow(const BigRat& b, long e);

/// Ordered Bell (Fubini) number a(m): the number of ordered set partitions
/// of an m-element set, via the recurrence
///   a(m) = sum_{j=1..m} C(m, j) a(m - j),   a(0) = 1.
BigInt ordered_bell(int m);

/// All ordered set partitions of `items` as block sequences, deterministically
/// ordered. Blocks keep the relative order of `items`; the empty input yields
/// the single empty partition.
std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    const std::vector<int>& items);

/// All subsets of `items` of size `k`, in lexicographic position order, each
/// preserving the relative order of `items`. k = 0 yields the empty subset.
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& items,
                                              int k);

}  // namespace biis
