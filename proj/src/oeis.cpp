#include "spm/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "spm/oracle.hpp"

#ifndef SPM_DEFAULT_FIXTURES_DIR
#define SPM_DEFAULT_FIXTURES_DIR "fixtures/oeis"
#endif

namespace spm::oeis {

using counts::Family;

namespace {

std::map<long, const io::BFileEntry*> index_entries(const std::vector<io::BFileEntry>& entries) {
  std::map<long, const io::BFileEntry*> out;
  for (const auto& e : entries) out[e.index] = &e;
  return out;
}

// Compares the mapped cells of rows up to max_n with `table`.
// Returns an empty string on success, else a description of the problem.
std::string check_rows(const io::Flattening& layout, const std::map<long, const io::BFileEntry*>& by_index,
                       const counts::TriangularCountTable& table, int max_n) {
  const auto cells = io::flatten_cells(layout, max_n);
  if (cells.empty()) return "mapping selects no cells in rows n <= " + std::to_string(max_n);
  for (const auto& c : cells) {
    auto it = by_index.find(c.index);
    if (it == by_index.end()) return "b-file lacks index " + std::to_string(c.index);
    const BigInt expected = table.at(c.n, c.k);
    if (it->second->value != expected) {
      return "index " + std::to_string(c.index) + " -> (n=" + std::to_string(c.n) + ",k=" + std::to_string(c.k) +
             "): b-file " + it->second->value.get_str() + ", oracle " + expected.get_str();
    }
  }
  return {};
}

}  // namespace

SequenceMap default_sequence_map() {
  // Unverified guesses: rows from n = 1 (n = 0 for A, S), all columns, index from 1.
  SequenceMap map;
  map["A140945"] = {"A140945", Family::C, {1, 1, 0, 0}};
  map["A361355"] = {"A361355", Family::E, {1, 1, 0, 0}};
  map["A359985"] = {"A359985", Family::A, {1, 0, 0, 0}};
  map["A361353"] = {"A361353", Family::S, {1, 0, 0, 0}};
  return map;
}

SequenceMap parse_sequence_map(const std::string& json_text) {
  SequenceMap map = default_sequence_map();
  const auto doc = nlohmann::json::parse(json_text);
  if (!doc.is_array()) throw std::runtime_error("sequence map: expected a JSON array");
  for (const auto& item : doc) {
    SequenceMapping m;
    m.id = item.at("id").get<std::string>();
    m.family = counts::parse_family(item.at("family").get<std::string>());
    m.layout.first_index = item.value("first_index", 1L);
    m.layout.first_n = item.value("first_n", 1);
    m.layout.k_start = item.value("k_start", 0);
    m.layout.k_end_trim = item.value("k_end_trim", 0);
    map[m.id] = m;
  }
  return map;
}

std::string render_sequence_map(const SequenceMap& map) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& [id, m] : map) {
    doc.push_back({{"id", id},
                   {"family", std::string(counts::family_name(m.family))},
                   {"first_index", m.layout.first_index},
                   {"first_n", m.layout.first_n},
                   {"k_start", m.layout.k_start},
                   {"k_end_trim", m.layout.k_end_trim}});
  }
  return doc.dump(2) + "\n";
}

SequenceMap load_sequence_map(const std::filesystem::path& dir) {
  const auto path = dir / "sequence_map.json";
  std::ifstream in(path);
  if (!in) return default_sequence_map();
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_sequence_map(buf.str());
}

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv("SPM_FIXTURES"); env && *env) return env;
  return SPM_DEFAULT_FIXTURES_DIR;
}

std::string bfile_name(const std::string& id) {
  bool ok = id.size() == 7 && id[0] == 'A';
  for (std::size_t i = 1; ok && i < id.size(); ++i) ok = std::isdigit(static_cast<unsigned char>(id[i]));
  if (!ok) throw std::invalid_argument("malformed OEIS id '" + id + "' (expected A followed by 6 digits)");
  return "b" + id.substr(1) + ".txt";
}

counts::TriangularCountTable oracle_table(Family family, int max_n) {
  // G(n, l) = C(n+1, l+1), so G needs one more level.
  const int levels = family == Family::G ? max_n + 1 : max_n;
  const oracle::Catalog catalog = oracle::build_catalog(levels, {oracle::kHardMaxN, true});
  counts::TriangularCountTable t{family, counts::first_row(family), max_n, {}};
  for (int n = t.first_n; n <= max_n; ++n) {
    switch (family) {
      case Family::C: t.rows.push_back(oracle::connected_counts(catalog, n, false)); break;
      case Family::E: t.rows.push_back(oracle::connected_counts(catalog, n, true)); break;
      case Family::A: t.rows.push_back(oracle::quasi_counts(catalog, n).all); break;
      case Family::S: t.rows.push_back(oracle::quasi_counts(catalog, n).simple); break;
      case Family::G: {
        const auto c = oracle::connected_counts(catalog, n + 1, false);
        t.rows.emplace_back(c.begin() + 1, c.end());
        break;
      }
    }
  }
  return t;
}

MappingCheck validate_mapping(const SequenceMapping& mapping, const std::vector<io::BFileEntry>& entries) {
  MappingCheck check;
  const auto by_index = index_entries(entries);
  const auto reference = oracle_table(mapping.family, kValidationMaxN);
  const std::string problem = check_rows(mapping.layout, by_index, reference, kValidationMaxN);
  check.valid = problem.empty();
  if (check.valid) {
    check.detail = "mapping reproduces oracle rows n <= " + std::to_string(kValidationMaxN);
    return check;
  }
  check.detail = "mapping does not reproduce oracle rows n <= " + std::to_string(kValidationMaxN) + ": " + problem;
  for (long first_index : {0L, 1L}) {
    for (int first_n = 0; first_n <= 2; ++first_n) {
      for (int k_start = 0; k_start <= 2; ++k_start) {
        for (int trim = 0; trim <= 2; ++trim) {
          const io::Flattening alt{first_index, first_n, k_start, trim};
          if (alt == mapping.layout) continue;
          if (check_rows(alt, by_index, reference, kValidationMaxN).empty()) check.alternatives.push_back(alt);
        }
      }
    }
  }
  return check;
}

CompareResult compare_bfile(const SequenceMapping& mapping, const std::vector<io::BFileEntry>& entries,
                            int max_table_n) {
  CompareResult result;
  result.id = mapping.id;
  result.mapping = validate_mapping(mapping, entries);
  if (!result.mapping.valid) return result;

  const auto by_index = index_entries(entries);
  // Rows fully or partly covered by the b-file, capped.
  int needed = mapping.layout.first_n;
  for (const auto& c : io::flatten_cells(mapping.layout, max_table_n)) {
    if (by_index.count(c.index)) needed = std::max(needed, c.n);
  }
  result.table_max_n = needed;
  const auto table = counts::build_table(mapping.family, needed, needed);
  for (const auto& c : io::flatten_cells(mapping.layout, needed)) {
    auto it = by_index.find(c.index);
    if (it == by_index.end()) continue;
    ++result.compared;
    const BigInt expected = table.at(c.n, c.k);
    if (it->second->value == expected) {
      ++result.matched;
    } else if (!result.first_mismatch) {
      result.first_mismatch = Mismatch{c.index, c.n, c.k, expected, it->second->value};
    }
  }
  return result;
}

std::string CompareResult::summary() const {
  std::ostringstream out;
  out << id << ": ";
  if (!mapping.valid) {
    out << "mapping not validated (" << mapping.detail << ")";
    if (!mapping.alternatives.empty()) {
      out << "; mappings that validate:";
      for (const auto& a : mapping.alternatives) {
        out << " {first_index " << a.first_index << ", first_n " << a.first_n << ", k_start " << a.k_start
            << ", k_end_trim " << a.k_end_trim << "}";
      }
    }
    return out.str();
  }
  out << matched << "/" << compared << " entries match over rows n <= " << table_max_n;
  if (first_mismatch) {
    const auto& m = *first_mismatch;
    out << "; first mismatch at index " << m.index << " (n=" << m.n << ", k=" << m.k << "): expected "
        << m.expected << ", b-file " << m.found;
  }
  return out.str();
}

}  // namespace spm::oeis
