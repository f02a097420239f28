#pragma once

// Slow, direct-enumeration reference values for the unit tests. Nothing here
// shares code with the library.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "spm/numeric.hpp"

namespace ref {

using spm::BigInt;
using spm::BigRat;

// Calls fn(block) for every set partition of [n], block[i] in 0..blocks-1.
inline void for_each_set_partition(int n, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      fn(block, used);
      return;
    }
    for (int b = 0; b <= used && b < n; ++b) {
      block[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
}

inline BigInt stirling2(int n, int k) {
  BigInt count = 0;
  for_each_set_partition(n, [&](const std::vector<int>&, int used) {
    if (used == k) count += 1;
  });
  return count;
}

// Derangements of [n] with exactly k cycles.
inline BigInt derangements_with_cycles(int n, int k) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  BigInt count = 0;
  do {
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    bool has_fixed = false;
    for (int i = 0; i < n; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      has_fixed |= len == 1;
      ++cycles;
    }
    if (!has_fixed && cycles == k) count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// sum over compositions of m into k positive parts of prod 1/(j+1)
inline BigRat h_value(int m, int k) {
  if (k == 0) return m == 0 ? BigRat(1) : BigRat(0);
  BigRat total = 0;
  for (int first = 1; first <= m - (k - 1); ++first) total += BigRat(1, first + 1) * h_value(m - first, k - 1);
  return total;
}

// B_{n,k}(t) as a sum over set partitions of [n] into k blocks; t[j-1] = t_j.
inline BigRat bell_partial(int n, int k, const std::vector<BigRat>& t) {
  BigRat total = 0;
  for_each_set_partition(n, [&](const std::vector<int>& block, int used) {
    if (used != k) return;
    std::vector<int> sizes(static_cast<std::size_t>(used), 0);
    for (int b : block) ++sizes[static_cast<std::size_t>(b)];
    BigRat prod = 1;
    for (int s : sizes) prod *= t[static_cast<std::size_t>(s - 1)];
    total += prod;
  });
  return total;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace ref
