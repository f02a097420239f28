#include "spm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <ostream>
#include <set>

namespace spm::oracle {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

void normalize(std::vector<Mask>& bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

// Relabels the ground onto bits 0..size-1 preserving order.
MatroidSignature compact(const MatroidSignature& m) {
  std::vector<int> position(32, -1);
  int next = 0;
  for (int b = 0; b < 32; ++b) {
    if (m.ground & (Mask{1} << b)) position[b] = next++;
  }
  auto remap = [&](Mask s) {
    Mask out = 0;
    for (int b = 0; b < 32; ++b) {
      if (s & (Mask{1} << b)) out |= Mask{1} << position[b];
    }
    return out;
  };
  MatroidSignature c{full_mask(next), m.rank, {}};
  for (Mask b : m.bases) c.bases.push_back(remap(b));
  normalize(c.bases);
  return c;
}

using Level = std::map<Mask, std::vector<LabeledMultigraph>>;

void dedup_by_matroid(std::vector<LabeledMultigraph>& graphs) {
  std::map<MatroidSignature, LabeledMultigraph> seen;
  for (auto& g : graphs) seen.try_emplace(signature(g), std::move(g));
  graphs.clear();
  for (auto& [sig, g] : seen) graphs.push_back(std::move(g));
}

std::vector<CatalogEntry> entries_of(const std::vector<LabeledMultigraph>& graphs) {
  std::set<MatroidSignature> distinct;
  for (const auto& g : graphs) distinct.insert(signature(g));
  std::vector<CatalogEntry> out;
  for (const auto& m : distinct) out.push_back({m, is_simple(m)});
  return out;
}

void check_cap(int n, const EnumerationOptions& options) {
  const int cap = std::min(options.configured_max, kHardMaxN);
  if (n > cap) {
    throw CapExceeded("oracle enumeration on " + std::to_string(n) + " elements exceeds cap " +
                      std::to_string(cap) + " (hard cap " + std::to_string(kHardMaxN) + ")");
  }
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<BigInt> rank_poly(const std::vector<CatalogEntry>& entries, int size, bool simple_only) {
  std::vector<BigInt> p(static_cast<std::size_t>(size) + 1, 0);
  for (const auto& e : entries) {
    if (simple_only && !e.simple) continue;
    p[static_cast<std::size_t>(e.matroid.rank)] += 1;
  }
  return p;
}

}  // namespace

int popcount(Mask m) { return std::popcount(m); }

Mask LabeledMultigraph::labels() const {
  Mask m = 0;
  for (const auto& e : edges) m |= label_bit(e.label);
  return m;
}

LabeledMultigraph LabeledMultigraph::single_edge(int label) { return {2, {{0, 1, label}}}; }
LabeledMultigraph LabeledMultigraph::single_loop(int label) { return {1, {{0, 0, label}}}; }
LabeledMultigraph LabeledMultigraph::two_cycle(int label_a, int label_b) {
  return {2, {{0, 1, label_a}, {0, 1, label_b}}};
}

std::vector<LabeledMultigraph> extend(const LabeledMultigraph& g, int new_label) {
  if (new_label < 1 || new_label > 32) {
    throw std::invalid_argument("label " + std::to_string(new_label) + " outside [1, 32]");
  }
  if (g.labels() & label_bit(new_label)) {
    throw std::invalid_argument("label " + std::to_string(new_label) + " already used");
  }
  std::vector<LabeledMultigraph> out;
  if (g.edges.size() < 2) return out;
  for (const Edge& e : g.edges) {
    LabeledMultigraph p = g;
    p.edges.push_back({e.u, e.v, new_label});
    out.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge e = g.edges[i];
    const int w = g.vertex_count;
    for (bool swapped : {false, true}) {
      LabeledMultigraph s = g;
      s.vertex_count += 1;
      const int first = swapped ? new_label : e.label;
      const int second = swapped ? e.label : new_label;
      s.edges[i] = {e.u, w, first};
      s.edges.push_back({w, e.v, second});
      out.push_back(std::move(s));
    }
  }
  return out;
}

MatroidSignature signature(const LabeledMultigraph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 24) throw std::invalid_argument("signature: too many edges");
  UnionFind all(g.vertex_count);
  int components = g.vertex_count;
  for (const auto& e : g.edges) {
    if (all.unite(e.u, e.v)) --components;
  }
  MatroidSignature sig{g.labels(), g.vertex_count - components, {}};
  for (Mask subset = 0; subset < (Mask{1} << m); ++subset) {
    if (popcount(subset) != sig.rank) continue;
    UnionFind uf(g.vertex_count);
    bool forest = true;
    Mask labels = 0;
    for (int i = 0; i < m && forest; ++i) {
      if (!(subset & (Mask{1} << i))) continue;
      forest = uf.unite(g.edges[i].u, g.edges[i].v);
      labels |= label_bit(g.edges[i].label);
    }
    if (forest) sig.bases.push_back(labels);
  }
  normalize(sig.bases);
  return sig;
}

int rank_of_subset(const MatroidSignature& m, Mask subset) {
  int best = 0;
  for (Mask b : m.bases) best = std::max(best, popcount(b & subset));
  return best;
}

bool is_simple(const MatroidSignature& m) {
  std::vector<Mask> elements;
  for (int b = 0; b < 32; ++b) {
    if (m.ground & (Mask{1} << b)) elements.push_back(Mask{1} << b);
  }
  for (Mask e : elements) {
    if (rank_of_subset(m, e) == 0) return false;
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (rank_of_subset(m, elements[i] | elements[j]) == 1) return false;
    }
  }
  return true;
}

MatroidSignature minor(const MatroidSignature& m, Mask contract, Mask remove) {
  contract &= m.ground;
  remove &= m.ground & ~contract;
  // Deletion keeps the largest traces B \ remove.
  const Mask kept = m.ground & ~remove;
  const int r_kept = rank_of_subset(m, kept);
  std::vector<Mask> restricted;
  for (Mask b : m.bases) {
    if (popcount(b & kept) == r_kept) restricted.push_back(b & kept);
  }
  normalize(restricted);
  // Contraction keeps B \ contract over bases meeting contract maximally.
  int r_c = 0;
  for (Mask b : restricted) r_c = std::max(r_c, popcount(b & contract));
  MatroidSignature out{kept & ~contract, r_kept - r_c, {}};
  for (Mask b : restricted) {
    if (popcount(b & contract) == r_c) out.bases.push_back(b & ~contract);
  }
  normalize(out.bases);
  return out;
}

MatroidSignature dual(const MatroidSignature& m) {
  MatroidSignature d{m.ground, m.ground_size() - m.rank, {}};
  for (Mask b : m.bases) d.bases.push_back(m.ground & ~b);
  normalize(d.bases);
  return d;
}

MatroidSignature direct_sum(const MatroidSignature& a, const MatroidSignature& b) {
  if (a.ground & b.ground) throw std::invalid_argument("direct_sum needs disjoint grounds");
  MatroidSignature s{a.ground | b.ground, a.rank + b.rank, {}};
  for (Mask x : a.bases) {
    for (Mask y : b.bases) s.bases.push_back(x | y);
  }
  normalize(s.bases);
  return s;
}

MatroidSignature uniform(int rank, int size) {
  MatroidSignature u{full_mask(size), rank, {}};
  for (Mask s = 0; s <= full_mask(size); ++s) {
    if (popcount(s) == rank) u.bases.push_back(s);
    if (s == full_mask(size)) break;
  }
  return u;
}

MatroidSignature complete_graph_k4() {
  LabeledMultigraph k4{4, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {1, 2, 4}, {1, 3, 5}, {2, 3, 6}}};
  return signature(k4);
}

bool isomorphic(const MatroidSignature& a, const MatroidSignature& b) {
  if (a.ground_size() != b.ground_size() || a.rank != b.rank || a.bases.size() != b.bases.size()) {
    return false;
  }
  const MatroidSignature ca = compact(a);
  const MatroidSignature cb = compact(b);
  const int n = ca.ground_size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Mask> mapped(ca.bases.size());
  do {
    for (std::size_t i = 0; i < ca.bases.size(); ++i) {
      Mask out = 0;
      for (int e = 0; e < n; ++e) {
        if (ca.bases[i] & (Mask{1} << e)) out |= Mask{1} << perm[e];
      }
      mapped[i] = out;
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == cb.bases) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool minor_check(const MatroidSignature& m) {
  if (m.ground_size() > kHardMaxN) throw CapExceeded("minor_check supports at most 8 elements");
  static const MatroidSignature u24 = uniform(2, 4);
  static const MatroidSignature k4 = complete_graph_k4();
  for (const MatroidSignature* target : {&u24, &k4}) {
    const int keep = target->ground_size();
    if (m.ground_size() < keep) continue;
    for (Mask rest = 0;; rest = (rest - m.ground) & m.ground) {
      // rest walks every subset of the ground
      if (popcount(rest) == keep) {
        const Mask others = m.ground & ~rest;
        for (Mask c = 0;; c = (c - others) & others) {
          const MatroidSignature sub = minor(m, c, others & ~c);
          if (sub.rank == target->rank && sub.bases.size() == target->bases.size() &&
              isomorphic(sub, *target)) {
            return false;
          }
          if (c == others) break;
        }
      }
      if (rest == m.ground) break;
    }
  }
  return true;
}

bool basis_exchange_holds(const MatroidSignature& m, std::mt19937& rng, int trials) {
  if (m.bases.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, m.bases.size() - 1);
  for (int t = 0; t < trials; ++t) {
    const Mask b1 = m.bases[pick(rng)];
    const Mask b2 = m.bases[pick(rng)];
    for (Mask x = b1 & ~b2; x; x &= x - 1) {
      const Mask xbit = x & (~x + 1);
      bool found = false;
      for (Mask y = b2 & ~b1; y && !found; y &= y - 1) {
        const Mask ybit = y & (~y + 1);
        found = std::binary_search(m.bases.begin(), m.bases.end(), (b1 & ~xbit) | ybit);
      }
      if (!found) return false;
    }
  }
  return true;
}

const std::vector<CatalogEntry>& Catalog::on(Mask subset) const {
  static const std::vector<CatalogEntry> empty;
  auto it = by_subset.find(subset);
  return it == by_subset.end() ? empty : it->second;
}

Catalog build_catalog(int max_n, const EnumerationOptions& options) {
  if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
  check_cap(max_n, options);
  Catalog catalog{max_n, {}};
  for (int label = 1; label <= max_n; ++label) {
    catalog.by_subset[label_bit(label)] = entries_of(
        {LabeledMultigraph::single_loop(label), LabeledMultigraph::single_edge(label)});
  }
  Level level;
  for (int a = 1; a <= max_n; ++a) {
    for (int b = a + 1; b <= max_n; ++b) {
      level[label_bit(a) | label_bit(b)] = {LabeledMultigraph::two_cycle(a, b)};
    }
  }
  for (int size = 2; size <= max_n; ++size) {
    for (auto& [subset, graphs] : level) {
      if (options.dedup_every_level) dedup_by_matroid(graphs);
      catalog.by_subset[subset] = entries_of(graphs);
    }
    if (size == max_n) break;
    Level next;
    for (const auto& [subset, graphs] : level) {
      for (int label = 1; label <= max_n; ++label) {
        if (subset & label_bit(label)) continue;
        auto& bucket = next[subset | label_bit(label)];
        for (const auto& g : graphs) {
          for (auto& h : extend(g, label)) bucket.push_back(std::move(h));
        }
      }
    }
    level = std::move(next);
  }
  return catalog;
}

std::vector<CatalogEntry> enumerate_connected(int n, const EnumerationOptions& options) {
  if (n < 1) throw std::invalid_argument("enumerate_connected needs n >= 1");
  return build_catalog(n, options).on_first(n);
}

std::vector<BigInt> connected_counts(const Catalog& catalog, int n, bool simple_only) {
  if (n < 1 || n > catalog.max_n) throw std::out_of_range("catalog has no level " + std::to_string(n));
  return rank_poly(catalog.on_first(n), n, simple_only);
}

QuasiRows quasi_counts(const Catalog& catalog, int n) {
  if (n < 0 || n > catalog.max_n) throw std::out_of_range("catalog has no level " + std::to_string(n));
  QuasiRows rows{std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0),
                 std::vector<BigInt>(static_cast<std::size_t>(n) + 1, 0)};
  if (n == 0) {
    rows.all[0] = rows.simple[0] = 1;
    return rows;
  }
  // Set partitions of [n] as restricted growth strings.
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  while (true) {
    const int blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<Mask> masks(static_cast<std::size_t>(blocks), 0);
    for (int i = 0; i < n; ++i) masks[block[i]] |= label_bit(i + 1);
    std::vector<BigInt> all{1}, simple{1};
    for (Mask b : masks) {
      all = poly_mul(all, rank_poly(catalog.on(b), popcount(b), false));
      simple = poly_mul(simple, rank_poly(catalog.on(b), popcount(b), true));
    }
    for (int k = 0; k <= n; ++k) {
      rows.all[k] += all[k];
      rows.simple[k] += simple[k];
    }
    // advance
    int i = n - 1;
    while (i > 0) {
      const int prefix_max = *std::max_element(block.begin(), block.begin() + i);
      if (block[i] <= prefix_max) break;
      block[i] = 0;
      --i;
    }
    if (i == 0) break;
    ++block[i];
    std::fill(block.begin() + i + 1, block.end(), 0);
  }
  return rows;
}

std::string format_entry(const CatalogEntry& entry) {
  const auto& m = entry.matroid;
  std::string line = std::to_string(m.ground_size()) + " " + std::to_string(m.rank) + " " +
                     (entry.simple ? "1" : "0") + " ";
  // Bases sorted as label lists, lexicographically.
  std::vector<std::string> bases;
  for (Mask b : m.bases) {
    std::string s;
    for (int label = 1; label <= 32; ++label) {
      if (b & label_bit(label)) s += std::to_string(label);
    }
    bases.push_back(s.empty() ? "{}" : s);
  }
  std::sort(bases.begin(), bases.end());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (i) line += ',';
    line += bases[i];
  }
  return line;
}

void dump(const Catalog& catalog, std::ostream& out) {
  for (int n = 1; n <= catalog.max_n; ++n) {
    for (const auto& entry : catalog.on_first(n)) out << format_entry(entry) << '\n';
  }
}

}  // namespace spm::oracle
