#pragma once

// Rendering and re-parsing of count tables.
//
//   csv    header "n,k,value", one line per (n, k) cell
//   json   {"family": "C", "max_n": 4, "rows": [[...], ...]}; integers are
//          written as bare JSON numbers of any length
//   bfile  "index value" per line, cells flattened row by row through a
//          Flattening; lines starting with '#' are comments

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spm/spcounts.hpp"

namespace spm::io {

enum class Format { Csv, Json, BFile };

Format parse_format(std::string_view name);
std::string_view format_name(Format format);

/// Row-major flattening of a triangle: rows n >= first_n, and within row n the
/// columns k_start .. n - k_end_trim. The first cell gets index first_index.
struct Flattening {
  long first_index = 1;
  int first_n = 1;
  int k_start = 0;
  int k_end_trim = 0;

  friend bool operator==(const Flattening&, const Flattening&) = default;
};

struct Cell {
  long index = 0;
  int n = 0;
  int k = 0;
};

/// Cells of rows first_n .. max_n in flattening order.
std::vector<Cell> flatten_cells(const Flattening& layout, int max_n);

/// Layout used for "table --format bfile" when no sequence mapping applies.
Flattening default_flattening(counts::Family family);

std::string render_csv(const counts::TriangularCountTable& table);
std::string render_json(const counts::TriangularCountTable& table);
std::string render_bfile(const counts::TriangularCountTable& table, const Flattening& layout);
std::string render(const counts::TriangularCountTable& table, Format format, const Flattening& layout);

struct BFileEntry {
  long index = 0;
  BigInt value;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// "index value" lines; blank lines and '#' comments are skipped. Indices
/// must be strictly increasing. Throws ParseError.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// Parsers throw std::runtime_error (ParseError where a line is known).
counts::TriangularCountTable parse_csv(std::string_view text, counts::Family family);
counts::TriangularCountTable parse_json(std::string_view text);
/// Cells outside the flattening's columns are zero.
counts::TriangularCountTable parse_bfile_table(std::string_view text, counts::Family family,
                                               const Flattening& layout);

}  // namespace spm::io
