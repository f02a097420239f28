#pragma once

// Cross-checking count tables against OEIS b-files.
//
// The index conventions of the four sequences are configuration, not code:
// each id maps to a family and a Flattening. A mapping is only trusted after
// it reproduces the brute-force counts for rows n <= 4; until then no PASS is
// reported, and the alternatives that would validate are listed instead.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spm/table_io.hpp"

namespace spm::oeis {

struct SequenceMapping {
  std::string id;  ///< e.g. "A140945"
  counts::Family family = counts::Family::C;
  io::Flattening layout;
};

using SequenceMap = std::map<std::string, SequenceMapping>;

/// Built-in mapping for A140945 (C), A361355 (E), A359985 (A), A361353 (S).
SequenceMap default_sequence_map();

/// JSON array of {"id", "family", "first_index", "first_n", "k_start",
/// "k_end_trim"}; ids not listed fall back to the defaults.
SequenceMap parse_sequence_map(const std::string& json_text);
std::string render_sequence_map(const SequenceMap& map);

/// `sequence_map.json` in `dir` when present, else the defaults.
SequenceMap load_sequence_map(const std::filesystem::path& dir);

/// $SPM_FIXTURES when set, else the fixtures directory of the source tree.
std::filesystem::path fixtures_dir();

/// "A140945" -> "b140945.txt". Throws std::invalid_argument on malformed ids.
std::string bfile_name(const std::string& id);

/// Rows n <= validation_max_n of the brute-force counts for a family.
counts::TriangularCountTable oracle_table(counts::Family family, int max_n);

inline constexpr int kValidationMaxN = 4;

struct MappingCheck {
  bool valid = false;
  std::string detail;
  std::vector<io::Flattening> alternatives;  ///< filled when invalid
};

/// Checks the mapping against oracle rows n <= kValidationMaxN.
MappingCheck validate_mapping(const SequenceMapping& mapping, const std::vector<io::BFileEntry>& entries);

struct Mismatch {
  long index = 0;
  int n = 0;
  int k = 0;
  BigInt expected;
  BigInt found;
};

struct CompareResult {
  std::string id;
  MappingCheck mapping;
  int table_max_n = 0;
  std::size_t compared = 0;
  std::size_t matched = 0;
  std::optional<Mismatch> first_mismatch;

  bool pass() const { return mapping.valid && compared > 0 && matched == compared; }
  std::string summary() const;
};

/// Compares every b-file entry whose cell lies in rows n <= max_table_n
/// against the formula tables.
CompareResult compare_bfile(const SequenceMapping& mapping, const std::vector<io::BFileEntry>& entries,
                            int max_table_n = 30);

}  // namespace spm::oeis
