#pragma once

// Exact combinatorial numbers: factorials, binomials, Stirling numbers of the
// second kind, unsigned associated Stirling numbers of the first kind
// (derangements by cycle count), the H-numbers
//
//     H(m, k) = sum over compositions j_1 + ... + j_k = m, j_i >= 1,
//               of 1 / ((j_1 + 1) ... (j_k + 1)),
//
// and partial Bell polynomials.
//
// Index conventions: any index combination outside the natural domain of a
// number (negative, or column past the end of the row) yields 0, so that
// summation formulas can be transcribed without range guards. The only
// rejected inputs are the ones with no sensible zero (negative factorials,
// n!! for n < -1, malformed Bell arguments).

#include <cstddef>
#include <functional>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spm/numeric.hpp"

namespace spm::combinum {

/// Lazily filled triangular cache. Rows are produced in order by a row
/// builder that sees every earlier row; once stored a row never changes.
/// Safe to share between threads.
template <typename T>
class MemoTable2D {
 public:
  using Row = std::vector<T>;
  using RowBuilder = std::function<Row(std::size_t n, const std::vector<Row>& earlier)>;

  explicit MemoTable2D(RowBuilder builder) : build_(std::move(builder)) {}

  MemoTable2D(const MemoTable2D&) = delete;
  MemoTable2D& operator=(const MemoTable2D&) = delete;

  T at(long n, long k) const {
    if (n < 0 || k < 0) return T(0);
    std::lock_guard lock(mu_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      rows_.push_back(build_(rows_.size(), rows_));
    }
    const Row& row = rows_[static_cast<std::size_t>(n)];
    if (static_cast<std::size_t>(k) >= row.size()) return T(0);
    return row[static_cast<std::size_t>(k)];
  }

  std::size_t rows_filled() const {
    std::lock_guard lock(mu_);
    return rows_.size();
  }

 private:
  RowBuilder build_;
  mutable std::mutex mu_;
  mutable std::vector<Row> rows_;
};

BigInt factorial(long n);

/// n!! with 0!! = (-1)!! = 1. Throws std::domain_error for n < -1.
BigInt double_factorial(long n);

/// Binomial coefficient; 0 when k < 0, k > n or n < 0.
BigInt binomial(long n, long k);

/// Number of partitions of [n] into k nonempty blocks.
BigInt stirling2(long n, long k);

/// Number of derangements of [n] with exactly k cycles, built from
///   d(n, k) = (n-1) d(n-2, k-1) + (n-1) d(n-1, k),  d(0, 0) = 1.
/// Vanishes when n < 2k.
BigInt assoc_stirling1(long n, long k);

/// H(m, k), filled by dynamic programming over the recursion
///   (m+k) H(m, k) = k H(m-1, k-1) + (m+k-1) H(m-1, k).
BigRat h_value(long m, long k);

/// Partial Bell polynomial B_{n,k} evaluated at t, where t[0] holds t_1.
/// Evaluated through the composition sum
///   B_{n,k}(t) = n!/k! * sum over compositions j of n into k parts of
///                prod t_{j_i} / j_i!.
/// Throws std::invalid_argument unless 1 <= k <= n and t.size() >= n-k+1.
BigRat bell_partial(int n, int k, std::span<const BigRat> t);

/// Calls fn(parts) for every composition of `total` into `count` positive
/// parts, in lexicographic order. total = count = 0 yields the empty
/// composition once.
void for_each_composition(int total, int count,
                          const std::function<void(std::span<const int>)>& fn);

}  // namespace spm::combinum
