#include "spm/powerseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spm/combinum.hpp"

namespace spm::series {

namespace {

const BigRat kZero = 0;

void check_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

bool is_zero(const YPoly& p) {
  return std::all_of(p.begin(), p.end(), [](const BigRat& c) { return c == 0; });
}

// Product truncated to y-degree `max_degree`.
YPoly poly_mul(const YPoly& a, const YPoly& b, std::size_t max_degree) {
  YPoly out(max_degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

void poly_axpy(YPoly& acc, const BigRat& factor, const YPoly& p) {
  if (factor == 0) return;
  if (acc.size() < p.size()) acc.resize(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) acc[i] += factor * p[i];
  }
}

std::vector<YPoly> zero_rows(int order) {
  std::vector<YPoly> rows(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
  return rows;
}

// Checks shared by both inversion routes; returns the linear coefficient.
BigRat check_invertible(const BivariateSeries& f) {
  if (f.order() < 1) throw std::invalid_argument("inversion needs order >= 1");
  if (!is_zero(f.row(0))) throw std::invalid_argument("inversion needs zero constant term");
  const BigRat& lin = f.coeff(1, 0);
  if (lin == 0 || f.coeff(1, 1) != 0) {
    throw std::invalid_argument("inversion needs a nonzero y-free linear coefficient");
  }
  for (int n = 2; n <= f.order(); ++n) {
    if (f.coeff(n, n) != 0) {
      throw std::invalid_argument("inversion needs y-degree below x-degree at x^" +
                                  std::to_string(n));
    }
  }
  return lin;
}

// Powers f^1..f^order of a series, index m holds f^m.
std::vector<BivariateSeries> powers(const BivariateSeries& f) {
  std::vector<BivariateSeries> out;
  out.reserve(static_cast<std::size_t>(f.order()) + 1);
  out.push_back(BivariateSeries::constant(f.order(), 1));
  for (int m = 1; m <= f.order(); ++m) out.push_back(mul(out.back(), f));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

UnivariateSeries::UnivariateSeries(int order) : UnivariateSeries(order, {}) {}

UnivariateSeries::UnivariateSeries(int order, std::vector<BigRat> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1, 0);
}

const BigRat& UnivariateSeries::operator[](int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("univariate coefficient index " + std::to_string(n));
  return coeffs_[static_cast<std::size_t>(n)];
}

bool operator==(const UnivariateSeries& a, const UnivariateSeries& b) {
  const int common = std::min(a.order_, b.order_);
  for (int n = 0; n <= common; ++n) {
    if (a[n] != b[n]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

BivariateSeries::BivariateSeries(int order) : order_(order) {
  check_order(order);
  rows_ = zero_rows(order);
}

BivariateSeries::BivariateSeries(int order, std::vector<YPoly> rows) : order_(order) {
  check_order(order);
  rows_ = zero_rows(order);
  for (std::size_t n = 0; n < rows.size() && n <= static_cast<std::size_t>(order); ++n) {
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      if (k > n) {
        if (rows[n][k] != 0) {
          throw std::invalid_argument("y-degree exceeds x-degree at x^" + std::to_string(n));
        }
        continue;
      }
      rows_[n][k] = rows[n][k];
    }
  }
}

BivariateSeries BivariateSeries::constant(int order, const BigRat& value) {
  return BivariateSeries(order, {YPoly{value}});
}

BivariateSeries BivariateSeries::x(int order) {
  return BivariateSeries(order, {YPoly{}, YPoly{1}});
}

BivariateSeries BivariateSeries::from_univariate(const UnivariateSeries& u) {
  std::vector<YPoly> rows;
  for (int n = 0; n <= u.order(); ++n) rows.push_back(YPoly{u[n]});
  return BivariateSeries(u.order(), std::move(rows));
}

const BigRat& BivariateSeries::coeff(int n, int k) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("x-degree " + std::to_string(n) + " outside order " + std::to_string(order_));
  }
  if (k < 0 || k > n) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

const YPoly& BivariateSeries::row(int n) const {
  if (n < 0 || n > order_) {
    throw std::out_of_range("x-degree " + std::to_string(n) + " outside order " + std::to_string(order_));
  }
  return rows_[static_cast<std::size_t>(n)];
}

BivariateSeries BivariateSeries::truncated(int order) const {
  return BivariateSeries(std::min(order, order_), rows_);
}

bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
  const int common = std::min(a.order_, b.order_);
  for (int n = 0; n <= common; ++n) {
    if (a.rows_[static_cast<std::size_t>(n)] != b.rows_[static_cast<std::size_t>(n)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<YPoly> rows = zero_rows(order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) rows[n][k] = a.coeff(n, k) + b.coeff(n, k);
  }
  return BivariateSeries(order, std::move(rows));
}

BivariateSeries scale(const BivariateSeries& a, const BigRat& factor) {
  std::vector<YPoly> rows = zero_rows(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    for (int k = 0; k <= n; ++k) rows[n][k] = factor * a.coeff(n, k);
  }
  return BivariateSeries(a.order(), std::move(rows));
}

BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
  return add(a, scale(b, -1));
}

BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<YPoly> rows = zero_rows(order);
  for (int n = 0; n <= order; ++n) {
    for (int i = 0; i <= n; ++i) {
      const YPoly& ai = a.row(i);
      if (is_zero(ai)) continue;
      const YPoly prod = poly_mul(ai, b.row(n - i), static_cast<std::size_t>(n));
      poly_axpy(rows[n], 1, prod);
    }
  }
  return BivariateSeries(order, std::move(rows));
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) { return add(a, b); }
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) { return sub(a, b); }
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) { return mul(a, b); }
BivariateSeries operator*(const BigRat& factor, const BivariateSeries& a) { return scale(a, factor); }

BivariateSeries exp(const BivariateSeries& f) {
  if (!is_zero(f.row(0))) throw std::invalid_argument("exp needs zero constant term");
  const int order = f.order();
  std::vector<YPoly> g = zero_rows(order);
  g[0][0] = 1;
  for (int n = 1; n <= order; ++n) {
    YPoly acc(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
      if (is_zero(f.row(i))) continue;
      poly_axpy(acc, BigRat(i), poly_mul(f.row(i), g[n - i], static_cast<std::size_t>(n)));
    }
    for (auto& c : acc) c /= n;
    g[n] = std::move(acc);
  }
  return BivariateSeries(order, std::move(g));
}

BivariateSeries log(const BivariateSeries& f) {
  const YPoly& c0 = f.row(0);
  if (c0[0] != 1) throw std::invalid_argument("log needs constant term 1");
  const int order = f.order();
  std::vector<YPoly> g = zero_rows(order);
  for (int n = 1; n <= order; ++n) {
    YPoly acc = f.row(n);
    for (auto& c : acc) c *= n;
    for (int i = 1; i < n; ++i) {
      poly_axpy(acc, BigRat(-i), poly_mul(g[i], f.row(n - i), static_cast<std::size_t>(n)));
    }
    for (auto& c : acc) c /= n;
    g[n] = std::move(acc);
  }
  return BivariateSeries(order, std::move(g));
}

BivariateSeries compose_x(const BivariateSeries& outer, const UnivariateSeries& inner) {
  if (inner[0] != 0) throw std::invalid_argument("compose_x needs inner series with zero constant term");
  const int order = std::min(outer.order(), inner.order());
  std::vector<YPoly> rows = zero_rows(order);
  // power[m] = [x^m] inner^n, updated in place for n = 0, 1, ...
  std::vector<BigRat> power(static_cast<std::size_t>(order) + 1, 0);
  power[0] = 1;
  for (int n = 0; n <= order; ++n) {
    const YPoly& on = outer.row(n);
    if (!is_zero(on)) {
      for (int m = n; m <= order; ++m) poly_axpy(rows[m], power[m], on);
    }
    std::vector<BigRat> next(power.size(), 0);
    for (int i = 0; i <= order; ++i) {
      if (power[i] == 0) continue;
      for (int j = 1; i + j <= order; ++j) next[i + j] += power[i] * inner[j];
    }
    power = std::move(next);
  }
  return BivariateSeries(order, std::move(rows));
}

UnivariateSeries compose(const UnivariateSeries& outer, const UnivariateSeries& inner) {
  const BivariateSeries lifted = compose_x(BivariateSeries::from_univariate(outer), inner);
  std::vector<BigRat> coeffs;
  for (int n = 0; n <= lifted.order(); ++n) coeffs.push_back(lifted.coeff(n, 0));
  return UnivariateSeries(lifted.order(), std::move(coeffs));
}

BivariateSeries substitute_x(const BivariateSeries& outer, const BivariateSeries& inner) {
  if (!is_zero(inner.row(0))) throw std::invalid_argument("substitute_x needs inner series with zero constant term");
  const int order = std::min(outer.order(), inner.order());
  std::vector<YPoly> rows(static_cast<std::size_t>(order) + 1);
  BivariateSeries power = BivariateSeries::constant(order, 1);
  const BivariateSeries base = inner.truncated(order);
  for (int m = 0; m <= order; ++m) {
    const YPoly& om = outer.row(m);
    if (!is_zero(om)) {
      for (int n = m; n <= order; ++n) {
        poly_axpy(rows[n], 1, poly_mul(om, power.row(n), om.size() + static_cast<std::size_t>(n)));
      }
    }
    if (m < order) power = mul(power, base);
  }
  return BivariateSeries(order, std::move(rows));
}

BivariateSeries integrate_x(const BivariateSeries& f) {
  const int order = f.order() + 1;
  std::vector<YPoly> rows = zero_rows(order);
  for (int n = 0; n < order; ++n) {
    for (int k = 0; k <= n; ++k) rows[n + 1][k] = f.coeff(n, k) / (n + 1);
  }
  return BivariateSeries(order, std::move(rows));
}

BivariateSeries divide_by_y(const BivariateSeries& f) {
  std::vector<YPoly> rows = zero_rows(f.order());
  for (int n = 0; n <= f.order(); ++n) {
    if (f.coeff(n, 0) != 0) throw std::invalid_argument("divide_by_y: nonzero y^0 term at x^" + std::to_string(n));
    for (int k = 1; k <= n; ++k) rows[n][k - 1] = f.coeff(n, k);
  }
  return BivariateSeries(f.order(), std::move(rows));
}

BivariateSeries reverse_x(const BivariateSeries& f) {
  const BigRat lin = check_invertible(f);
  const int order = f.order();
  const std::vector<BivariateSeries> fp = powers(f);
  std::vector<YPoly> g = zero_rows(order);
  g[1][0] = 1 / lin;
  // [x^n] sum_m g_m f^m = 0 for n >= 2; the m = n term is g_n lin^n.
  for (int n = 2; n <= order; ++n) {
    YPoly acc(static_cast<std::size_t>(n) + 1, 0);
    for (int m = 1; m < n; ++m) {
      poly_axpy(acc, 1, poly_mul(g[m], fp[m].row(n), static_cast<std::size_t>(n)));
    }
    const BigRat denom = -pow_rat(lin, n);
    for (auto& c : acc) c /= denom;
    g[n] = std::move(acc);
  }
  return BivariateSeries(order, std::move(g));
}

BivariateSeries lagrange_invert(const BivariateSeries& f, InversionSign sign) {
  using combinum::factorial;
  const BigRat lin = check_invertible(f);
  const int order = f.order();

  // scaled[j] = hatF_j / j!, where F_n = n! f_n and hatF_j = F_{j+1} / ((j+1) F_1).
  std::vector<YPoly> scaled(static_cast<std::size_t>(order) + 1);
  const BigRat big_f1 = lin;  // F_1 = 1! f_1
  for (int j = 1; j + 1 <= order; ++j) {
    const BigRat fact_next(factorial(j + 1));
    const BigRat weight = fact_next / (BigRat(j + 1) * big_f1) / BigRat(factorial(j));
    YPoly p = f.row(j + 1);
    for (auto& c : p) c *= weight;
    scaled[j] = std::move(p);
  }

  std::vector<YPoly> g = zero_rows(order);
  g[1][0] = 1 / lin;
  for (int n = 2; n <= order; ++n) {
    YPoly total(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n - 1; ++k) {
      YPoly inner(static_cast<std::size_t>(n) + 1, 0);
      combinum::for_each_composition(n - 1, k, [&](std::span<const int> parts) {
        YPoly prod{1};
        for (int j : parts) prod = poly_mul(prod, scaled[j], static_cast<std::size_t>(n));
        poly_axpy(inner, 1, prod);
      });
      BigRat weight = BigRat(factorial(n + k - 1)) / BigRat(factorial(k));
      if (sign == InversionSign::kAlternating && k % 2 == 1) weight = -weight;
      poly_axpy(total, weight, inner);
    }
    // G_n -> raw coefficient g_n = G_n / n!
    const BigRat norm = pow_rat(lin, n) * BigRat(factorial(n));
    for (auto& c : total) c /= norm;
    g[n] = std::move(total);
  }
  return BivariateSeries(order, std::move(g));
}

BivariateSeries build_F(int order) {
  if (order < 1) throw std::invalid_argument("build_F needs order >= 1");
  std::vector<YPoly> rows = zero_rows(order);
  rows[1][0] = 1;
  for (int n = 2; n <= order; ++n) {
    const BigRat c = BigRat(n % 2 == 0 ? -1 : 1, n);
    rows[n][0] += c;
    rows[n][n - 1] += c;
  }
  return BivariateSeries(order, std::move(rows));
}

BigInt count_coefficient(const BivariateSeries& f, int n, int k) {
  const BigRat scaled = f.coeff(n, k) * BigRat(combinum::factorial(n));
  return to_integer(scaled, "count_coefficient(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

UnivariateSeries exp_x(int order) {
  std::vector<BigRat> c;
  for (int n = 0; n <= order; ++n) c.emplace_back(BigInt(1), combinum::factorial(n));
  return UnivariateSeries(order, std::move(c));
}

UnivariateSeries expm1_x(int order) {
  std::vector<BigRat> c = exp_x(order).coeffs();
  c[0] = 0;
  return UnivariateSeries(order, std::move(c));
}

UnivariateSeries identity_x(int order) {
  std::vector<BigRat> c(static_cast<std::size_t>(order) + 1, 0);
  if (order >= 1) c[1] = 1;
  return UnivariateSeries(order, std::move(c));
}

}  // namespace spm::series
