#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "spm/oracle.hpp"
#include "spm/spcounts.hpp"

using namespace spm;
using namespace spm::oracle;

namespace {

Mask bits(std::initializer_list<int> labels) {
  Mask m = 0;
  for (int l : labels) m |= label_bit(l);
  return m;
}

std::vector<BigInt> row(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

LabeledMultigraph doubled_edge_triangle() { return {3, {{0, 1, 1}, {0, 1, 2}, {1, 2, 3}, {2, 0, 4}}}; }

}  // namespace

TEST_CASE("signatures of small graphs") {
  const auto u12 = signature(LabeledMultigraph::two_cycle(1, 2));
  CHECK(u12.rank == 1);
  CHECK(u12.bases == std::vector<Mask>{bits({1}), bits({2})});

  const LabeledMultigraph triangle{3, {{0, 1, 1}, {1, 2, 2}, {2, 0, 3}}};
  const auto u23 = signature(triangle);
  CHECK(u23 == uniform(2, 3));

  // every labelling of the 4-cycle gives U_{3,4}
  std::vector<int> labels{1, 2, 3, 4};
  do {
    const LabeledMultigraph c4{4, {{0, 1, labels[0]}, {1, 2, labels[1]}, {2, 3, labels[2]}, {3, 0, labels[3]}}};
    CHECK(signature(c4) == uniform(3, 4));
  } while (std::next_permutation(labels.begin(), labels.end()));

  CHECK(signature(LabeledMultigraph::single_loop(1)).rank == 0);
  CHECK(signature(LabeledMultigraph::single_edge(1)).rank == 1);
}

TEST_CASE("extensions") {
  const auto ext = extend(LabeledMultigraph::two_cycle(1, 2), 3);
  CHECK(ext.size() == 6);
  int parallel = 0, series = 0;
  for (const auto& g : ext) {
    const auto m = signature(g);
    if (m == uniform(1, 3)) ++parallel;
    if (m == uniform(2, 3)) ++series;
  }
  CHECK(parallel == 2);
  CHECK(series == 4);

  const LabeledMultigraph triple{2, {{0, 1, 1}, {0, 1, 2}, {0, 1, 3}}};
  const std::vector<Mask> expected{bits({1, 3}), bits({1, 4}), bits({2, 3}), bits({2, 4}), bits({3, 4})};
  bool found = false;
  for (const auto& g : extend(triple, 4)) {
    auto m = signature(g);
    std::sort(m.bases.begin(), m.bases.end());
    auto e = expected;
    std::sort(e.begin(), e.end());
    found |= m.bases == e;
  }
  CHECK(found);

  CHECK(extend(LabeledMultigraph::single_edge(1), 2).empty());
  CHECK_THROWS_AS(extend(LabeledMultigraph::two_cycle(1, 2), 2), std::invalid_argument);
  CHECK_THROWS_AS(extend(LabeledMultigraph::two_cycle(1, 2), 0), std::invalid_argument);
}

TEST_CASE("simplicity and rank") {
  CHECK(is_simple(uniform(2, 3)));
  CHECK_FALSE(is_simple(uniform(1, 2)));
  const auto det = signature(doubled_edge_triangle());
  CHECK_FALSE(is_simple(det));
  CHECK(rank_of_subset(det, bits({1, 2})) == 1);
  CHECK(rank_of_subset(uniform(2, 3), bits({1, 2})) == 2);
  CHECK(rank_of_subset(det, 0) == 0);
}

TEST_CASE("minors, duals and excluded minors") {
  CHECK_FALSE(minor_check(uniform(2, 4)));
  CHECK_FALSE(minor_check(complete_graph_k4()));
  CHECK(minor_check(uniform(2, 3)));
  CHECK(dual(uniform(2, 5)) == uniform(3, 5));
  CHECK(dual(dual(complete_graph_k4())) == complete_graph_k4());
  CHECK(isomorphic(dual(complete_graph_k4()), complete_graph_k4()));
  CHECK_FALSE(isomorphic(uniform(2, 4), uniform(1, 4)));

  // U_{2,5} has U_{2,4} as a deletion minor
  CHECK_FALSE(minor_check(uniform(2, 5)));
  CHECK(minor(uniform(2, 5), 0, bits({5})) == uniform(2, 4));
  CHECK(minor(uniform(2, 3), bits({3}), 0).rank == 1);
  CHECK_THROWS_AS(minor_check(uniform(2, 9)), CapExceeded);
}

TEST_CASE("catalog rows") {
  const auto cat = build_catalog(4);
  CHECK(connected_counts(cat, 1, false) == row({1, 1}));
  CHECK(connected_counts(cat, 2, false) == row({0, 1, 0}));
  CHECK(connected_counts(cat, 3, false) == row({0, 1, 1, 0}));
  CHECK(connected_counts(cat, 4, false) == row({0, 1, 6, 1, 0}));
  CHECK(cat.on_first(4).size() == 8);
  CHECK(connected_counts(cat, 4, true)[3] == 1);

  const auto q2 = quasi_counts(cat, 2);
  CHECK(q2.all == row({1, 3, 1}));
  const auto q0 = quasi_counts(cat, 0);
  CHECK(q0.all == row({1}));
  CHECK(q0.simple == row({1}));
  CHECK(quasi_counts(cat, 3).simple == row({0, 0, 1, 1}));
  CHECK_THROWS_AS(connected_counts(cat, 5, false), std::out_of_range);
}

TEST_CASE("oracle agrees with formulas for n <= 6") {
  const auto cat = build_catalog(6);
  const auto C = counts::build_table(counts::Family::C, 6);
  const auto E = counts::build_table(counts::Family::E, 6);
  const auto A = counts::build_table(counts::Family::A, 6);
  const auto S = counts::build_table(counts::Family::S, 6);
  for (int n = 1; n <= 6; ++n) {
    INFO("n=", n);
    CHECK(connected_counts(cat, n, false) == C.row(n));
    CHECK(connected_counts(cat, n, true) == E.row(n));
    const auto q = quasi_counts(cat, n);
    CHECK(q.all == A.row(n));
    CHECK(q.simple == S.row(n));
  }
}

TEST_CASE("per-level deduplication is lossless") {
  for (int n = 1; n <= 5; ++n) {
    const auto a = build_catalog(n, {kDefaultMaxN, true});
    const auto b = build_catalog(n, {kDefaultMaxN, false});
    CHECK(connected_counts(a, n, false) == connected_counts(b, n, false));
    CHECK(a.by_subset.size() == b.by_subset.size());
    for (const auto& [subset, entries] : a.by_subset) {
      std::set<MatroidSignature> sa, sb;
      for (const auto& e : entries) sa.insert(e.matroid);
      for (const auto& e : b.on(subset)) sb.insert(e.matroid);
      CHECK(sa == sb);
    }
  }
}

TEST_CASE("catalog invariants") {
  const auto cat = build_catalog(6);
  std::mt19937 rng(11);
  for (int n = 1; n <= 6; ++n) {
    const auto& entries = cat.on_first(n);
    std::set<MatroidSignature> all;
    for (const auto& e : entries) all.insert(e.matroid);
    std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : entries) {
      CHECK(basis_exchange_holds(e.matroid, rng, 20));
      CHECK(minor_check(e.matroid));
      CHECK(e.simple == is_simple(e.matroid));
      ++ranks[static_cast<std::size_t>(e.matroid.rank)];
      if (n >= 2) CHECK(all.count(dual(e.matroid)) == 1);
    }
    for (int k = 0; k <= n; ++k) CHECK(ranks[static_cast<std::size_t>(k)] == ranks[static_cast<std::size_t>(n - k)]);
  }
  // quasi direct sums stay free of the excluded minors
  const auto sum = direct_sum(uniform(2, 3), minor(cat.on(bits({4, 5, 6}))[0].matroid, 0, 0));
  CHECK(minor_check(sum));
  CHECK_THROWS_AS(direct_sum(uniform(1, 2), uniform(1, 2)), std::invalid_argument);
}

TEST_CASE("caps") {
  CHECK_THROWS_AS(build_catalog(7), CapExceeded);
  CHECK_NOTHROW(build_catalog(7, {8, true}));
  CHECK_THROWS_AS(build_catalog(9, {9, true}), CapExceeded);
  CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
}

TEST_CASE("dump format") {
  const auto cat = build_catalog(2);
  std::ostringstream out;
  dump(cat, out);
  CHECK(out.str() == "1 0 0 {}\n1 1 1 1\n2 1 0 1,2\n");
  CHECK(format_entry({uniform(2, 3), true}) == "3 2 1 12,13,23");
}

TEST_CASE("concurrent queries on a finished catalog") {
  const auto cat = build_catalog(6);
  const auto expected = quasi_counts(cat, 6).all;
  std::vector<std::vector<BigInt>> got(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { got[static_cast<std::size_t>(i)] = quasi_counts(cat, 6).all; });
  for (auto& t : threads) t.join();
  for (const auto& g : got) CHECK(g == expected);
}
