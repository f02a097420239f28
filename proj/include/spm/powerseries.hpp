#pragma once

// Truncated bivariate power series over exact rationals.
//
// A BivariateSeries of order N stores sum_{n<=N} sum_{k<=n} c[n][k] y^k x^n.
// Coefficients are raw (not divided by n!); counts are recovered with
// count_coefficient(), which multiplies by n!. The y-degree of the x^n
// coefficient never exceeds n, and every operation below preserves that.
//
// The compositional inverse G of
//     F(x, y) = log(1 + xy)/y + log(1 + x) - x
// is read as the unique series with G(F(x, y), y) = x; y is a parameter
// throughout, never substituted.

#include <cstddef>
#include <vector>

#include "spm/numeric.hpp"

namespace spm::series {

/// Polynomial in y; entry k is the coefficient of y^k.
using YPoly = std::vector<BigRat>;

class UnivariateSeries {
 public:
  explicit UnivariateSeries(int order);
  UnivariateSeries(int order, std::vector<BigRat> coeffs);

  int order() const { return order_; }
  const BigRat& operator[](int n) const;
  const std::vector<BigRat>& coeffs() const { return coeffs_; }

  friend bool operator==(const UnivariateSeries& a, const UnivariateSeries& b);

 private:
  int order_;
  std::vector<BigRat> coeffs_;
};

class BivariateSeries {
 public:
  /// The zero series.
  explicit BivariateSeries(int order);

  /// Row n is the y-polynomial multiplying x^n. Missing rows are zero and
  /// short rows are padded; rows past `order` are dropped. Throws
  /// std::invalid_argument if some row has y-degree above its x-degree.
  BivariateSeries(int order, std::vector<YPoly> rows);

  static BivariateSeries constant(int order, const BigRat& value);
  static BivariateSeries x(int order);
  static BivariateSeries from_univariate(const UnivariateSeries& u);

  int order() const { return order_; }

  /// Coefficient of y^k x^n. Zero for k < 0 or k > n. Throws
  /// std::out_of_range when n is negative or beyond the stored order.
  const BigRat& coeff(int n, int k) const;
  const YPoly& row(int n) const;

  BivariateSeries truncated(int order) const;

  /// Equality up to the common order of the two operands.
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  int order_;
  std::vector<YPoly> rows_;
};

// Binary operations truncate to the smaller of the two orders.
BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries scale(const BivariateSeries& a, const BigRat& factor);

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries operator*(const BigRat& factor, const BivariateSeries& a);

/// exp(f) via n g_n = sum_i i f_i g_{n-i}. Requires f(0, y) = 0.
BivariateSeries exp(const BivariateSeries& f);

/// log(f). Requires f(0, y) = 1.
BivariateSeries log(const BivariateSeries& f);

/// outer(inner(x), y). Requires inner(0) = 0.
BivariateSeries compose_x(const BivariateSeries& outer, const UnivariateSeries& inner);
UnivariateSeries compose(const UnivariateSeries& outer, const UnivariateSeries& inner);

/// outer(inner(x, y), y) for a bivariate inner series with inner(0, y) = 0.
/// Throws std::invalid_argument if the result leaves the triangular range,
/// which cannot happen when both operands have y-degree below x-degree.
BivariateSeries substitute_x(const BivariateSeries& outer, const BivariateSeries& inner);

/// Termwise antiderivative in x with no constant term. The result has
/// order f.order() + 1, so no input term is lost.
BivariateSeries integrate_x(const BivariateSeries& f);

/// f / y. Requires every y^0 coefficient to vanish.
BivariateSeries divide_by_y(const BivariateSeries& f);

/// Compositional inverse in x by order-by-order solving of g(f) = x.
///
/// Preconditions: f(0, y) = 0, the x coefficient is a nonzero constant, and
/// the x^n coefficient has y-degree below n (which keeps the inverse inside
/// the triangular storage). Violations throw std::invalid_argument.
BivariateSeries reverse_x(const BivariateSeries& f);

enum class InversionSign {
  kAlternating,   ///< (-1)^k weight on the k-block terms; the correct form
  kUnsignedBell,  ///< no sign, as in the rising-factorial display; wrong, kept for evidence
};

/// Compositional inverse through the explicit Lagrange formula
///   G_n = F_1^{-n} sum_{k=1}^{n-1} (-1)^k (n+k-1)!/k!
///         * sum over compositions j of n-1 into k parts of prod hatF_{j_i}/j_i!
/// with hatF_j = F_{j+1} / ((j+1) F_1), in EGF normalisation. Exponential in
/// the order; intended for order <= 12. Same preconditions as reverse_x.
BivariateSeries lagrange_invert(const BivariateSeries& f,
                                InversionSign sign = InversionSign::kAlternating);

/// F(x, y) = log(1 + xy)/y + log(1 + x) - x from its closed coefficients:
/// F_1 = 1 and F_n = (-1)^{n-1} (n-1)! (1 + y^{n-1}) in EGF normalisation.
BivariateSeries build_F(int order);

/// n! times the coefficient of y^k x^n, as an integer. Throws
/// IntegralityError if that is not an integer.
BigInt count_coefficient(const BivariateSeries& f, int n, int k);

UnivariateSeries exp_x(int order);    ///< e^x
UnivariateSeries expm1_x(int order);  ///< e^x - 1
UnivariateSeries identity_x(int order);

}  // namespace spm::series
