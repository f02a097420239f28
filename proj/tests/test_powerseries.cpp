#include <random>

#include "doctest.h"
#include "spm/combinum.hpp"
#include "spm/powerseries.hpp"

using namespace spm;
using namespace spm::series;

namespace {

BivariateSeries linear(int order, YPoly coeff) { return BivariateSeries(order, {YPoly{}, std::move(coeff)}); }

UnivariateSeries poly(int order, std::vector<BigRat> c) {
  c.resize(static_cast<std::size_t>(order) + 1, 0);
  return UnivariateSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("construction keeps the triangular shape") {
  CHECK_THROWS_AS(BivariateSeries(2, {YPoly{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BivariateSeries(-1), std::invalid_argument);
  const BivariateSeries s(3, {YPoly{1}, YPoly{2, 3}});
  CHECK(s.coeff(1, 1) == 3);
  CHECK(s.coeff(1, 5) == 0);
  CHECK(s.coeff(3, 0) == 0);
  CHECK_THROWS_AS(s.coeff(4, 0), std::out_of_range);
  CHECK(s.truncated(1).order() == 1);
}

TEST_CASE("ring operations") {
  const int N = 4;
  const auto x = BivariateSeries::x(N);
  const auto x2 = x * x;
  CHECK(x2.coeff(2, 0) == 1);
  CHECK(x2.coeff(3, 0) == 0);

  const auto f = linear(N, {1, 1});
  const auto sq = f * f;
  CHECK(sq.row(2) == YPoly{1, 2, 1});
  CHECK(f + BivariateSeries(N) == f);
  CHECK(f - f == BivariateSeries(N));
  CHECK(BigRat(2) * f == f + f);

  // operands of different order truncate to the smaller
  CHECK((BivariateSeries::x(2) + BivariateSeries::x(5)).order() == 2);
}

TEST_CASE("exp and log") {
  const int N = 8;
  const auto e = exp(BivariateSeries::x(N));
  for (int n = 0; n <= N; ++n) CHECK(e.coeff(n, 0) == BigRat(BigInt(1), combinum::factorial(n)));
  CHECK(exp(BivariateSeries(N)) == BivariateSeries::constant(N, 1));

  const auto l = log(BivariateSeries::constant(N, 1) + BivariateSeries::x(N));
  for (int n = 1; n <= N; ++n) CHECK(l.coeff(n, 0) == BigRat(n % 2 ? 1 : -1, n));
  CHECK(log(e) == BivariateSeries::x(N));

  // C truncated at order 2 is (1+y)x + y x^2/2; exp gives A_2 = 1 + 3y + y^2.
  const BivariateSeries c2(2, {YPoly{}, YPoly{1, 1}, YPoly{0, BigRat(1, 2)}});
  CHECK(count_coefficient(exp(c2), 2, 0) == 1);
  CHECK(count_coefficient(exp(c2), 2, 1) == 3);
  CHECK(count_coefficient(exp(c2), 2, 2) == 1);

  CHECK_THROWS_AS(exp(BivariateSeries::constant(N, 1)), std::invalid_argument);
  CHECK_THROWS_AS(log(BivariateSeries::x(N)), std::invalid_argument);
}

TEST_CASE("composition") {
  const int N = 6;
  const auto em1 = expm1_x(N);
  const auto sq = compose(poly(N, {0, 0, 1}), em1);
  CHECK(sq[2] == 1);
  CHECK(sq[3] == 1);
  CHECK(sq[4] == BigRat(7, 12));

  const BivariateSeries f(N, {YPoly{}, YPoly{2}, YPoly{1, 1}, YPoly{0, 3}});
  CHECK(compose_x(f, identity_x(N)) == f);

  // E truncated at order 3: y x + y^2 x^3 / 6. Composed with e^x - 1 plus x gives C_3 = y + y^2.
  const BivariateSeries e3(3, {YPoly{}, YPoly{0, 1}, YPoly{}, YPoly{0, 0, BigRat(1, 6)}});
  const auto c3 = compose_x(e3, expm1_x(3)) + BivariateSeries::x(3);
  CHECK(count_coefficient(c3, 3, 1) == 1);
  CHECK(count_coefficient(c3, 3, 2) == 1);
  CHECK(count_coefficient(c3, 3, 0) == 0);

  CHECK_THROWS_AS(compose_x(f, exp_x(N)), std::invalid_argument);
}

TEST_CASE("integration and division by y") {
  const auto one = BivariateSeries::constant(3, 1);
  const auto i = integrate_x(one);
  CHECK(i.order() == 4);
  CHECK(i.coeff(1, 0) == 1);
  const auto ix3 = integrate_x(BivariateSeries(3, {YPoly{}, YPoly{}, YPoly{}, YPoly{1}}));
  CHECK(ix3.coeff(4, 0) == BigRat(1, 4));

  const BivariateSeries f(2, {YPoly{}, YPoly{0, 4}, YPoly{0, 1, 2}});
  const auto d = divide_by_y(f);
  CHECK(d.coeff(1, 0) == 4);
  CHECK(d.coeff(2, 1) == 2);
  CHECK_THROWS_AS(divide_by_y(BivariateSeries::x(2)), std::invalid_argument);
}

TEST_CASE("reversion") {
  const int N = 7;
  // reverse(x + x^2) has signed Catalan coefficients
  const auto r = reverse_x(BivariateSeries(N, {YPoly{}, YPoly{1}, YPoly{1}}));
  const std::vector<long> catalan{1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= N; ++n) CHECK(r.coeff(n, 0) == BigRat((n % 2 ? 1 : -1) * catalan[static_cast<std::size_t>(n - 1)]));

  CHECK(reverse_x(BivariateSeries::x(N)) == BivariateSeries::x(N));
  CHECK(lagrange_invert(BivariateSeries::x(N)) == BivariateSeries::x(N));

  CHECK_THROWS_AS(reverse_x(BivariateSeries::constant(N, 1)), std::invalid_argument);
  CHECK_THROWS_AS(reverse_x(BivariateSeries(N, {YPoly{}, YPoly{0}})), std::invalid_argument);
  CHECK_THROWS_AS(reverse_x(BivariateSeries(N, {YPoly{}, YPoly{1}, YPoly{0, 0, 1}})), std::invalid_argument);
}

TEST_CASE("F and its inverse") {
  const auto F = build_F(4);
  CHECK(F.coeff(1, 0) == 1);
  CHECK(F.coeff(2, 0) == BigRat(-1, 2));
  CHECK(F.coeff(2, 1) == BigRat(-1, 2));
  CHECK(F.coeff(3, 0) == BigRat(1, 3));
  CHECK(F.coeff(3, 1) == 0);
  CHECK(F.coeff(3, 2) == BigRat(1, 3));

  const auto G = reverse_x(build_F(2));
  CHECK(count_coefficient(G, 2, 0) == 1);
  CHECK(count_coefficient(G, 2, 1) == 1);

  const auto L = lagrange_invert(build_F(3));
  CHECK(count_coefficient(L, 2, 0) == 1);
  CHECK(count_coefficient(L, 2, 1) == 1);
  CHECK(count_coefficient(L, 3, 1) == 6);

  const auto U = lagrange_invert(build_F(2), InversionSign::kUnsignedBell);
  CHECK(count_coefficient(U, 2, 0) == -1);

  const int N = 9;
  const auto F9 = build_F(N);
  const auto G9 = reverse_x(F9);
  CHECK(lagrange_invert(F9) == G9);
  CHECK(substitute_x(G9, F9) == BivariateSeries::x(N));
  CHECK(substitute_x(F9, G9) == BivariateSeries::x(N));
}

TEST_CASE("the two inversion routes agree on random series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int N = 8;
    std::vector<YPoly> rows(N + 1);
    rows[1] = {BigRat(trial % 3 + 1)};
    for (int n = 2; n <= N; ++n) {
      for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(n)].push_back(BigRat(coef(rng), n));
    }
    for (auto& row : rows) {
      for (auto& c : row) c.canonicalize();
    }
    const BivariateSeries f(N, rows);
    const auto g = reverse_x(f);
    CHECK(lagrange_invert(f) == g);
    CHECK(substitute_x(g, f) == BivariateSeries::x(N));
  }
}

TEST_CASE("count_coefficient rejects non-integers") {
  const BivariateSeries f(2, {YPoly{}, YPoly{BigRat(1, 2)}});
  CHECK_THROWS_AS(count_coefficient(f, 1, 0), IntegralityError);
  CHECK(count_coefficient(BivariateSeries::constant(2, 1), 0, 0) == 1);
}
