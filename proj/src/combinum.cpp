#include "spm/combinum.hpp"

#include <string>

namespace spm::combinum {

namespace {

const MemoTable2D<BigInt>& stirling2_table() {
  static const MemoTable2D<BigInt> table(
      [](std::size_t n, const std::vector<std::vector<BigInt>>& rows) {
        std::vector<BigInt> row(n + 1, 0);
        if (n == 0) {
          row[0] = 1;
          return row;
        }
        const auto& prev = rows[n - 1];
        for (std::size_t k = 1; k <= n; ++k) {
          BigInt same = k < prev.size() ? prev[k] : BigInt(0);
          row[k] = BigInt(static_cast<unsigned long>(k)) * same + prev[k - 1];
        }
        return row;
      });
  return table;
}

const MemoTable2D<BigInt>& assoc_stirling1_table() {
  static const MemoTable2D<BigInt> table(
      [](std::size_t n, const std::vector<std::vector<BigInt>>& rows) {
        std::vector<BigInt> row(n / 2 + 1, 0);
        if (n == 0) {
          row[0] = 1;
          return row;
        }
        const BigInt weight(static_cast<unsigned long>(n - 1));
        auto get = [&](std::size_t r, std::size_t k) -> BigInt {
          return k < rows[r].size() ? rows[r][k] : BigInt(0);
        };
        for (std::size_t k = 0; k < row.size(); ++k) {
          BigInt paired = (n >= 2 && k >= 1) ? get(n - 2, k - 1) : BigInt(0);
          row[k] = weight * (paired + get(n - 1, k));
        }
        return row;
      });
  return table;
}

// Row m holds H(m, 0..m).
const MemoTable2D<BigRat>& h_table() {
  static const MemoTable2D<BigRat> table(
      [](std::size_t m, const std::vector<std::vector<BigRat>>& rows) {
        std::vector<BigRat> row(m + 1, 0);
        if (m == 0) {
          row[0] = 1;
          return row;
        }
        const auto& prev = rows[m - 1];
        for (std::size_t k = 1; k <= m; ++k) {
          BigRat stay = k < prev.size() ? prev[k] : BigRat(0);
          BigRat num = BigRat(static_cast<unsigned long>(k)) * prev[k - 1] +
                       BigRat(static_cast<unsigned long>(m + k - 1)) * stay;
          row[k] = num / BigRat(static_cast<unsigned long>(m + k));
        }
        return row;
      });
  return table;
}

void compositions_rec(int remaining, int slots, std::vector<int>& acc,
                      const std::function<void(std::span<const int>)>& fn) {
  if (slots == 0) {
    if (remaining == 0) fn(acc);
    return;
  }
  for (int j = 1; j <= remaining - (slots - 1); ++j) {
    acc.push_back(j);
    compositions_rec(remaining - j, slots - 1, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative number " + std::to_string(n));
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial undefined for " + std::to_string(n));
  if (n <= 0) return 1;
  BigInt out;
  mpz_2fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt stirling2(long n, long k) { return stirling2_table().at(n, k); }

BigInt assoc_stirling1(long n, long k) { return assoc_stirling1_table().at(n, k); }

BigRat h_value(long m, long k) { return h_table().at(m, k); }

void for_each_composition(int total, int count,
                          const std::function<void(std::span<const int>)>& fn) {
  if (total < 0 || count < 0) return;
  std::vector<int> acc;
  acc.reserve(static_cast<std::size_t>(count));
  compositions_rec(total, count, acc, fn);
}

BigRat bell_partial(int n, int k, std::span<const BigRat> t) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("bell_partial: need 1 <= k <= n, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
  }
  if (t.size() < static_cast<std::size_t>(n - k + 1)) {
    throw std::invalid_argument("bell_partial: need " + std::to_string(n - k + 1) +
                                " arguments, got " + std::to_string(t.size()));
  }
  std::vector<BigRat> scaled(static_cast<std::size_t>(n - k + 1));
  for (std::size_t j = 0; j < scaled.size(); ++j) {
    scaled[j] = t[j] / BigRat(factorial(static_cast<long>(j) + 1));
  }
  BigRat sum = 0;
  for_each_composition(n, k, [&](std::span<const int> parts) {
    BigRat term = 1;
    for (int j : parts) term *= scaled[static_cast<std::size_t>(j - 1)];
    sum += term;
  });
  return sum * BigRat(factorial(n)) / BigRat(factorial(k));
}

}  // namespace spm::combinum
