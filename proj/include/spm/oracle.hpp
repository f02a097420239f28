#pragma once

// Brute-force ground truth for the count tables.
//
// Series-parallel graphs are grown from 2-cycles by series extensions
// (subdividing an edge) and parallel extensions (doubling an edge), over
// every label subset of [n]. Each graph is reduced to its cycle matroid,
// represented by its sorted list of bases as bitmasks (bit i <-> label i+1),
// and deduplicated on that representation. The single edge and single loop
// are the only one-element members and are never extended.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spm/numeric.hpp"

namespace spm::oracle {

using Mask = std::uint32_t;

inline constexpr int kDefaultMaxN = 6;
inline constexpr int kHardMaxN = 8;

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Mask label_bit(int label) { return Mask{1} << (label - 1); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
int popcount(Mask m);

struct Edge {
  int u = 0;
  int v = 0;
  int label = 0;
};

struct LabeledMultigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  Mask labels() const;

  static LabeledMultigraph single_edge(int label);
  static LabeledMultigraph single_loop(int label);
  static LabeledMultigraph two_cycle(int label_a, int label_b);
};

struct MatroidSignature {
  Mask ground = 0;
  int rank = 0;
  std::vector<Mask> bases;  // sorted, distinct

  int ground_size() const { return popcount(ground); }

  auto operator<=>(const MatroidSignature&) const = default;
};

/// Every parallel and series extension of g by new_label. Subdividing edge e
/// yields both label orders along the new path. Graphs with fewer than two
/// edges are terminal and give no extensions. Throws std::invalid_argument if
/// new_label is already used or is outside [1, 32].
std::vector<LabeledMultigraph> extend(const LabeledMultigraph& g, int new_label);

/// Cycle matroid of g: bases are the edge sets of spanning forests.
MatroidSignature signature(const LabeledMultigraph& g);

int rank_of_subset(const MatroidSignature& m, Mask subset);

/// No loops and no parallel pairs.
bool is_simple(const MatroidSignature& m);

/// m / contract \ remove, on ground minus both sets.
MatroidSignature minor(const MatroidSignature& m, Mask contract, Mask remove);
MatroidSignature dual(const MatroidSignature& m);
/// Grounds must be disjoint.
MatroidSignature direct_sum(const MatroidSignature& a, const MatroidSignature& b);
MatroidSignature uniform(int rank, int size);
/// M(K_4) on labels 1..6.
MatroidSignature complete_graph_k4();

/// Isomorphism by trying every bijection between the grounds.
bool isomorphic(const MatroidSignature& a, const MatroidSignature& b);

/// True iff m has no minor isomorphic to U_{2,4} or M(K_4). Grounds above
/// kHardMaxN elements are rejected.
bool minor_check(const MatroidSignature& m);

/// Randomised spot check of the basis exchange axiom.
bool basis_exchange_holds(const MatroidSignature& m, std::mt19937& rng, int trials);

struct CatalogEntry {
  MatroidSignature matroid;
  bool simple = false;
};

/// Connected series-parallel matroids on every nonempty subset of [max_n].
struct Catalog {
  int max_n = 0;
  std::map<Mask, std::vector<CatalogEntry>> by_subset;

  const std::vector<CatalogEntry>& on(Mask subset) const;
  const std::vector<CatalogEntry>& on_first(int n) const { return on(full_mask(n)); }
};

struct EnumerationOptions {
  int configured_max = kDefaultMaxN;  ///< must not exceed kHardMaxN
  bool dedup_every_level = true;      ///< false keeps every graph until the end
};

/// Throws CapExceeded if max_n exceeds the configured or hard cap.
Catalog build_catalog(int max_n, const EnumerationOptions& options = {});

/// Entries on [n] (the top level of build_catalog(n)).
std::vector<CatalogEntry> enumerate_connected(int n, const EnumerationOptions& options = {});

/// Per-rank counts on [n]; with simple_only these are the E row, else the C row.
std::vector<BigInt> connected_counts(const Catalog& catalog, int n, bool simple_only);

struct QuasiRows {
  std::vector<BigInt> all;     ///< A row
  std::vector<BigInt> simple;  ///< S row
};

/// Quasi series-parallel counts on [n] assembled over set partitions of [n],
/// one catalog matroid per block. n = 0 gives (1) / (1).
QuasiRows quasi_counts(const Catalog& catalog, int n);

/// "n rank simple_flag basis1,basis2,..." with each basis written as its
/// labels in increasing order ("{}" for the empty basis).
std::string format_entry(const CatalogEntry& entry);
void dump(const Catalog& catalog, std::ostream& out);

}  // namespace spm::oracle
