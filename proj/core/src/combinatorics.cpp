#include "biis/combinatorics.hpp"

#include <mutex>
#include <stdexcept>

namespace biis {

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);  // exact: product of j consecutive integers is divisible by j!
  }
  return result;
}

BigInt factorial(long n) {
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt falling_factorial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt result = 1;
  for (long i = 0; i < k; ++i) result *= (n - i);
  return result;
}

BigInt ipow(const BigInt& b, long e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt result = 1;
  BigInt base = b;
  long exp = e;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

BigRat rpow(const BigRat& b, long e) {
  if (e >= 0) {
    BigRat result = 1;
    for (long i = 0; i < e; ++i) result *= b;
    return result;
  }
  if (b == 0) throw std::invalid_argument("rpow: zero base with negative exponent");
  return 1 / rpow(b, -e);
}

BigInt ordered_bell(int m) {
  if (m < 0) throw std::invalid_argument("ordered_bell: negative argument");
  static std::vector<BigInt> cache{1};  // a(0) = 1
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  while (static_cast<int>(cache.size()) <= m) {
    const int t = static_cast<int>(cache.size());
    BigInt a = 0;
    for (int j = 1; j <= t; ++j) a += binomial(t, j) * cache[t - j];
    cache.push_back(a);
  }
  return cache[m];
}

namespace {

void partitions_rec(const std::vector<int>& remaining,
                    std::vector<std::vector<int>>& prefix,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (remaining.empty()) {
    out.push_back(prefix);
    return;
  }
  const int m = static_cast<int>(remaining.size());
  // First block: every non-empty subset of `remaining`, by ascending bitmask.
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> block;
    std::vector<int> rest;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i))
        block.push_back(remaining[i]);
      else
        rest.push_back(remaining[i]);
    }
    prefix.push_back(std::move(block));
    partitions_rec(rest, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(
    const std::vector<int>& items) {
  if (items.size() > 20)
    throw std::invalid_argument("ordered_set_partitions: too many items");
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> prefix;
  partitions_rec(items, prefix, out);
  return out;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& items,
                                              int k) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
    out.push_back(std::move(subset));
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace biis
