#include "doctest.h"
#include "reference.hpp"
#include "spm/combinum.hpp"
#include "spm/spcounts.hpp"

using namespace spm;
using namespace spm::counts;

namespace {

using Row = std::vector<BigInt>;

Row row(std::initializer_list<long> v) {
  Row out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("c") == Family::C);
  CHECK(parse_family("G") == Family::G);
  CHECK(family_name(Family::S) == "S");
  CHECK_THROWS_AS(parse_family("Q"), std::invalid_argument);
  CHECK(first_row(Family::A) == 0);
  CHECK(first_row(Family::E) == 1);
}

TEST_CASE("E closed form") {
  CHECK(e_closed(5, 3) == 15);
  CHECK(e_closed(7, 4) == 735);
  CHECK(e_closed(4, 3) == 1);
  CHECK(e_closed(1, 1) == 1);
  CHECK(e_closed(3, 2) == 1);
  CHECK(e_closed(2, 1) == 0);
  CHECK(e_closed(6, 6) == 0);
  for (int k = 3; k <= 12; ++k) {
    CHECK(e_closed(2 * k - 1, k) ==
          combinum::double_factorial(2 * k - 1) * pow_int(BigInt(2 * k - 1), static_cast<unsigned long>(k - 3)));
  }
}

TEST_CASE("C and G closed forms") {
  CHECK(c_closed(4, 2) == 6);
  CHECK(c_closed(3, 1) == 1);
  CHECK(c_closed(5, 2) == 25);
  CHECK(c_closed(1, 0) == 1);
  CHECK(c_closed(1, 1) == 1);
  for (int n = 2; n <= 12; ++n) CHECK(c_closed(n, n) == 0);
  CHECK(g_closed(2, 0) == 1);
  CHECK(g_closed(2, 1) == 1);
  CHECK(g_closed(3, 1) == 6);
  CHECK(g_closed(3, 3) == 0);
  for (int n = 2; n <= 20; ++n) {
    for (int l = 0; l <= n; ++l) CHECK(c_closed(n, l) == g_closed(n - 1, l - 1));
  }
}

TEST_CASE("E from C") {
  const auto t = e_from_c(7);
  CHECK(t.row(1) == row({0, 1}));
  CHECK(t.row(3) == row({0, 0, 1, 0}));
  CHECK(t.row(4) == row({0, 0, 0, 1, 0}));
  CHECK(t.row(5) == row({0, 0, 0, 15, 1, 0}));
  CHECK(t.row(7) == row({0, 0, 0, 0, 735, 280, 1, 0}));
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(t.at(n, k) == e_closed(n, k));
  }
  // independent check of the convolution with brute-force Stirling numbers
  for (int n = 2; n <= 7; ++n) {
    for (int l = 0; l <= n; ++l) {
      BigInt s = 0;
      for (int m = 1; m <= n; ++m) s += ref::stirling2(n, m) * t.at(m, l);
      CHECK(s == c_closed(n, l));
    }
  }
}

TEST_CASE("printed special cases") {
  CHECK(e_special(7, 4, 1) == 735);
  CHECK(e_special(3, 3, 3) == 0);
  CHECK(e_special(4, 3, 2) == 5);
  CHECK(e_closed(4, 3) == 1);
  CHECK_THROWS_AS(e_special(5, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(e_special(6, 3, 1), std::invalid_argument);
}

TEST_CASE("tables") {
  const auto c = build_table(Family::C, 4);
  CHECK(c.first_n == 1);
  CHECK(c.row(4) == row({0, 1, 6, 1, 0}));
  CHECK(c.at(4, 9) == 0);
  CHECK(c.at(0, 0) == 0);
  CHECK_THROWS_AS(c.row(5), std::out_of_range);

  const auto a = build_table(Family::A, 2);
  CHECK(a.first_n == 0);
  CHECK(a.row(0) == row({1}));
  CHECK(a.row(1) == row({1, 1}));
  CHECK(a.row(2) == row({1, 3, 1}));

  const auto s = build_table(Family::S, 4);
  CHECK(s.row(3) == row({0, 0, 1, 1}));
  CHECK(s.row(4) == row({0, 0, 0, 5, 1}));

  CHECK(build_table(Family::E, 5).at(5, 3) == 15);
  CHECK(build_table(Family::G, 3).row(2) == row({1, 1, 0}));

  CHECK_THROWS_AS(build_table(Family::C, 13, 12), std::invalid_argument);
  CHECK_THROWS_AS(build_table(Family::C, -1, 12), std::invalid_argument);
  CHECK(build_table(Family::A, 6, 12) == build_table(Family::A, 6, 6));
}

TEST_CASE("egf round trip") {
  for (Family f : {Family::E, Family::C, Family::A, Family::S}) {
    const auto t = build_table(f, 8);
    CHECK(table_from_series(f, egf(t, 8), 8) == t);
  }
}
