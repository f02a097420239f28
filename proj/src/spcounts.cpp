#include "spm/spcounts.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "spm/combinum.hpp"

namespace spm::counts {

using combinum::assoc_stirling1;
using combinum::factorial;
using combinum::stirling2;

std::string_view family_name(Family family) {
  switch (family) {
    case Family::E: return "E";
    case Family::C: return "C";
    case Family::A: return "A";
    case Family::S: return "S";
    case Family::G: return "G";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(name[0]))) {
      case 'E': return Family::E;
      case 'C': return Family::C;
      case 'A': return Family::A;
      case 'S': return Family::S;
      case 'G': return Family::G;
    }
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected E, C, A, S or G)");
}

int first_row(Family family) {
  return (family == Family::A || family == Family::S) ? 0 : 1;
}

BigInt TriangularCountTable::at(int n, int k) const {
  if (!has_row(n) || k < 0) return 0;
  const auto& r = rows[static_cast<std::size_t>(n - first_n)];
  return static_cast<std::size_t>(k) < r.size() ? r[static_cast<std::size_t>(k)] : BigInt(0);
}

const std::vector<BigInt>& TriangularCountTable::row(int n) const {
  if (!has_row(n)) throw std::out_of_range("table has no row " + std::to_string(n));
  return rows[static_cast<std::size_t>(n - first_n)];
}

BigInt e_closed(int n, int k) {
  const int r = 2 * k - n;
  if (k <= 0 || k > n || r <= 0) return 0;
  BigRat total = 0;
  for (int p = 1; p <= r; ++p) {
    const BigInt d = assoc_stirling1(2 * k - p - 1, k - p);
    // d vanishes whenever k - p - 1 < 0 except at k = 1, where the base is 1.
    if (d == 0) continue;
    for (int i = 0; i <= r - p; ++i) {
      BigRat term = pow_rat(BigRat(2 * k - p - i), k - p - 1) /
                    BigRat(factorial(i) * factorial(r - p - i));
      if ((i + p + 1) % 2 != 0) term = -term;
      total += BigRat(d) * term;
    }
  }
  return to_integer(total, "e_closed(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

BigInt c_closed(int n, int l) {
  if (n < 1 || l < 0 || l > n) return 0;
  if (n == 1) return 1;
  BigInt total = 0;
  for (int k = 0; k <= l - 1; ++k) {
    BigInt term = assoc_stirling1(k + l - 1, k) * stirling2(n - 1 + k, k + l);
    if ((k + l - 1) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

BigInt g_closed(int n, int l) {
  if (n < 1 || l < 0 || l > n - 1) return 0;
  BigInt total = 0;
  for (int j = 0; j <= l; ++j) {
    BigInt term = assoc_stirling1(j + l, j) * stirling2(n + j, j + l + 1);
    if ((j + l) % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

TriangularCountTable e_from_c(int max_n) {
  if (max_n < 1) throw std::invalid_argument("e_from_c needs max_n >= 1");
  TriangularCountTable t{Family::E, 1, max_n, {}};
  t.rows.push_back({0, 1});
  for (int n = 2; n <= max_n; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 0; l <= n; ++l) {
      BigInt rest = c_closed(n, l);
      for (int m = std::max(l, 1); m < n; ++m) rest -= stirling2(n, m) * t.at(m, l);
      row[static_cast<std::size_t>(l)] = rest;  // S2(n, n) = 1
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

BigRat e_special(int n, int k, int r) {
  if (r < 1 || r > 3 || k < r || n != 2 * k - r) {
    throw std::invalid_argument("e_special needs r in {1,2,3}, k >= r and n = 2k - r");
  }
  const auto pw = [](int base, int exponent) { return pow_rat(BigRat(base), exponent); };
  switch (r) {
    case 1:
      return BigRat(combinum::double_factorial(2 * k - 1)) * pw(2 * k - 1, k - 3);
    case 2:
      return BigRat(combinum::double_factorial(2 * k - 3)) *
             (pw(2 * k - 1, k - 2) - pw(2 * k - 2, k - 2) +
              BigRat(2, 3) * BigRat(k - 2) * pw(2 * k - 2, k - 3));
    default: {
      BigRat bracket = BigRat(1, 2) * pw(2 * k - 1, k - 2) - pw(2 * k - 2, k - 2) +
                       BigRat(1, 2) * pw(2 * k - 3, k - 2) +
                       BigRat(2, 3) * BigRat(k - 2) * (pw(2 * k - 3, k - 3) - pw(2 * k - 2, k - 3));
      // The last term has the factor (k-3); at k = 3 its power would be 3^{-2}, still finite.
      bracket += BigRat(1, 9) * BigRat(4 * k - 7) * BigRat(k - 2) * BigRat(k - 3) * pw(2 * k - 3, k - 5);
      return BigRat(combinum::double_factorial(2 * k - 3)) * bracket;
    }
  }
}

series::BivariateSeries egf(const TriangularCountTable& table, int order) {
  std::vector<series::YPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int n = table.first_n; n <= std::min(order, table.max_n); ++n) {
    const BigRat inv_fact(BigInt(1), factorial(n));
    series::YPoly p;
    for (const BigInt& v : table.row(n)) p.push_back(BigRat(v) * inv_fact);
    rows[static_cast<std::size_t>(n)] = std::move(p);
  }
  return series::BivariateSeries(order, std::move(rows));
}

TriangularCountTable table_from_series(Family family, const series::BivariateSeries& s, int max_n) {
  if (max_n > s.order()) throw std::invalid_argument("table_from_series: max_n exceeds series order");
  TriangularCountTable t{family, first_row(family), max_n, {}};
  for (int n = t.first_n; n <= max_n; ++n) {
    std::vector<BigInt> row;
    for (int k = 0; k <= n; ++k) row.push_back(series::count_coefficient(s, n, k));
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

TriangularCountTable closed_form_table(Family family, int max_n) {
  TriangularCountTable t{family, 1, max_n, {}};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> row;
    for (int k = 0; k <= n; ++k) {
      switch (family) {
        case Family::E: row.push_back(e_closed(n, k)); break;
        case Family::C: row.push_back(c_closed(n, k)); break;
        default: row.push_back(g_closed(n, k)); break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

TriangularCountTable compute_table(Family family, int max_n) {
  switch (family) {
    case Family::E:
    case Family::C:
    case Family::G:
      return closed_form_table(family, max_n);
    case Family::A:
    case Family::S: {
      const Family base = family == Family::A ? Family::C : Family::E;
      const int order = std::max(max_n, 1);
      const auto exponentiated = series::exp(egf(closed_form_table(base, order), order));
      return table_from_series(family, exponentiated, max_n);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

TriangularCountTable build_table(Family family, int max_n, int order) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  if (max_n > order) {
    throw std::invalid_argument("max_n " + std::to_string(max_n) + " exceeds truncation order " +
                                std::to_string(order));
  }
  static std::mutex mu;
  static std::map<std::pair<Family, int>, TriangularCountTable> cache;
  const auto key = std::make_pair(family, max_n);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  TriangularCountTable t = compute_table(family, max_n);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace spm::counts
