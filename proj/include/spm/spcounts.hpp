#pragma once

// Counts of series-parallel matroids on [n] by rank k.
//
//   C(n,k)  series-parallel (connected) matroids
//   E(n,k)  simple series-parallel matroids
//   A(n,k)  quasi series-parallel matroids (direct sums of the above)
//   S(n,k)  simple quasi series-parallel matroids
//   G(n,l)  coefficients of the inverse series, C(n,l) = G(n-1,l-1) for n >= 2
//
// E and C come from closed forms, G from its closed form, and A, S from
// exponentiating the E and C generating functions.

#include <string>
#include <string_view>
#include <vector>

#include "spm/numeric.hpp"
#include "spm/powerseries.hpp"

namespace spm::counts {

enum class Family { E, C, A, S, G };

std::string_view family_name(Family family);
/// Accepts "E", "C", "A", "S", "G" (case-insensitive).
Family parse_family(std::string_view name);
/// A and S include the empty matroid at n = 0; the others start at n = 1.
int first_row(Family family);

struct TriangularCountTable {
  Family family = Family::C;
  int first_n = 1;
  int max_n = 0;
  /// rows[i] holds the counts for n = first_n + i, indexed by k in [0, n].
  std::vector<std::vector<BigInt>> rows;

  bool has_row(int n) const { return n >= first_n && n <= max_n; }
  /// Zero for any (n, k) outside the stored triangle.
  BigInt at(int n, int k) const;
  const std::vector<BigInt>& row(int n) const;

  friend bool operator==(const TriangularCountTable&, const TriangularCountTable&) = default;
};

/// E(n, k) from the double-sum closed form in r = 2k - n:
///   sum_{p=1}^{r} d(2k-p-1, k-p) sum_{i=0}^{r-p} (-1)^{i+p+1} (2k-p-i)^{k-p-1} / (i! (r-p-i)!)
/// Zero when k = 0, k > n, or n >= 2k.
BigInt e_closed(int n, int k);

/// C(n, l); n = 1 gives the loop/coloop convention C(1,0) = C(1,1) = 1.
BigInt c_closed(int n, int l);

/// G(n, l) = sum_{j=0}^{l} (-1)^{j+l} d(j+l, j) S2(n+j, j+l+1); zero unless 0 <= l <= n-1.
BigInt g_closed(int n, int l);

/// E rows 1..max_n recovered from the C closed form by forward substitution in
///   C(n, l) = sum_{m=l}^{n} S2(n, m) E(m, l),  n >= 2.
TriangularCountTable e_from_c(int max_n);

/// The printed special-case closed forms for E(2k - r, k), r in {1, 2, 3},
/// evaluated literally (the r = 2 form carries a sign error and disagrees with
/// e_closed from k = 3 on). Throws std::invalid_argument unless n = 2k - r,
/// r in {1, 2, 3} and k >= r.
BigRat e_special(int n, int k, int r);

/// Count table for `family` with rows up to max_n. A and S go through the
/// series route at truncation order `order`, which must be >= max_n.
/// Results are cached.
TriangularCountTable build_table(Family family, int max_n, int order);
inline TriangularCountTable build_table(Family family, int max_n) {
  return build_table(family, max_n, max_n);
}

/// Exponential generating function of a table, truncated at `order`.
series::BivariateSeries egf(const TriangularCountTable& table, int order);

/// Inverse of egf(): n! [y^k x^n] for n in [first_n, max_n].
TriangularCountTable table_from_series(Family family, const series::BivariateSeries& s, int max_n);

}  // namespace spm::counts
