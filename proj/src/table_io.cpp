#include "spm/table_io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace spm::io {

using counts::Family;
using counts::TriangularCountTable;

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? end : end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_bigint(std::string_view token, BigInt& out) {
  if (token.empty()) return false;
  std::size_t digits_from = (token[0] == '-' || token[0] == '+') ? 1 : 0;
  if (digits_from == token.size()) return false;
  for (std::size_t i = digits_from; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
  }
  if (token[0] == '+') token.remove_prefix(1);
  return out.set_str(std::string(token), 10) == 0;
}

TriangularCountTable empty_table(Family family, int max_n) {
  TriangularCountTable t{family, counts::first_row(family), max_n, {}};
  for (int n = t.first_n; n <= max_n; ++n) t.rows.emplace_back(static_cast<std::size_t>(n) + 1, 0);
  return t;
}

// Collects the integers of the "rows" array as raw decimal strings.
class RowsCollector : public nlohmann::json_sax<nlohmann::json> {
 public:
  std::string family;
  long max_n = -1;
  std::vector<std::vector<std::string>> rows;

  bool null() override { return fail("null"); }
  bool boolean(bool) override { return fail("boolean"); }
  bool number_integer(number_integer_t v) override { return number(std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return number(std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override {
    if (raw.find_first_of(".eE") != std::string::npos) return fail("non-integer " + raw);
    return number(raw);
  }
  bool string(string_t& s) override {
    if (depth_ == 1 && key_ == "family") {
      family = s;
      return true;
    }
    return fail("string");
  }
  bool binary(binary_t&) override { return fail("binary"); }
  bool start_object(std::size_t) override {
    if (depth_ != 0) return fail("nested object");
    ++depth_;
    return true;
  }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override {
    --depth_;
    return true;
  }
  bool start_array(std::size_t) override {
    ++depth_;
    if (depth_ == 2 && key_ != "rows") return fail("array under " + key_);
    if (depth_ == 3) rows.emplace_back();
    if (depth_ > 3) return fail("nested array");
    return true;
  }
  bool end_array() override {
    --depth_;
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
    error = "byte " + std::to_string(pos) + ": " + ex.what();
    return false;
  }

  std::string error;

 private:
  bool number(const std::string& raw) {
    if (depth_ == 1 && key_ == "max_n") {
      max_n = std::stol(raw);
      return true;
    }
    if (depth_ == 3) {
      rows.back().push_back(raw);
      return true;
    }
    return fail("unexpected number " + raw);
  }
  bool fail(const std::string& what) {
    if (error.empty()) error = what;
    return false;
  }

  int depth_ = 0;
  std::string key_;
};

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "bfile") return Format::BFile;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected csv, json or bfile)");
}

std::string_view format_name(Format format) {
  switch (format) {
    case Format::Csv: return "csv";
    case Format::Json: return "json";
    case Format::BFile: return "bfile";
  }
  return "?";
}

std::vector<Cell> flatten_cells(const Flattening& layout, int max_n) {
  std::vector<Cell> cells;
  long index = layout.first_index;
  for (int n = layout.first_n; n <= max_n; ++n) {
    for (int k = layout.k_start; k <= n - layout.k_end_trim; ++k) cells.push_back({index++, n, k});
  }
  return cells;
}

Flattening default_flattening(Family family) { return {0, counts::first_row(family), 0, 0}; }

std::string render_csv(const TriangularCountTable& table) {
  std::ostringstream out;
  out << "n,k,value\n";
  for (int n = table.first_n; n <= table.max_n; ++n) {
    const auto& row = table.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) out << n << ',' << k << ',' << row[k] << '\n';
  }
  return out.str();
}

std::string render_json(const TriangularCountTable& table) {
  std::ostringstream out;
  out << "{\"family\": \"" << counts::family_name(table.family) << "\", \"max_n\": " << table.max_n
      << ", \"rows\": [";
  for (int n = table.first_n; n <= table.max_n; ++n) {
    if (n != table.first_n) out << ", ";
    out << '[';
    const auto& row = table.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? ", " : "") << row[k];
    out << ']';
  }
  out << "]}\n";
  return out.str();
}

std::string render_bfile(const TriangularCountTable& table, const Flattening& layout) {
  std::ostringstream out;
  out << "# family " << counts::family_name(table.family) << ", rows " << layout.first_n << ".."
      << table.max_n << ", columns " << layout.k_start << "..n";
  if (layout.k_end_trim > 0) out << '-' << layout.k_end_trim;
  out << '\n';
  for (const Cell& c : flatten_cells(layout, table.max_n)) out << c.index << ' ' << table.at(c.n, c.k) << '\n';
  return out.str();
}

std::string render(const TriangularCountTable& table, Format format, const Flattening& layout) {
  switch (format) {
    case Format::Csv: return render_csv(table);
    case Format::Json: return render_json(table);
    case Format::BFile: return render_bfile(table, layout);
  }
  return {};
}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
  std::vector<BFileEntry> entries;
  int line_no = 0;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw ParseError(line_no, "expected 'index value'");
    const std::string_view index_tok = line.substr(0, gap);
    const std::string_view value_tok = trim(line.substr(gap));
    BigInt index;
    BFileEntry entry;
    if (!parse_bigint(index_tok, index) || !index.fits_slong_p()) {
      throw ParseError(line_no, "bad index '" + std::string(index_tok) + "'");
    }
    if (!parse_bigint(value_tok, entry.value)) {
      throw ParseError(line_no, "bad value '" + std::string(value_tok) + "'");
    }
    entry.index = index.get_si();
    if (!entries.empty() && entry.index <= entries.back().index) {
      throw ParseError(line_no, "index " + std::to_string(entry.index) + " not increasing");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

TriangularCountTable parse_csv(std::string_view text, Family family) {
  std::map<std::pair<int, int>, BigInt> cells;
  int line_no = 0;
  int max_n = counts::first_row(family) - 1;
  for (std::string_view raw : split_lines(text)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "n,k,value") throw ParseError(line_no, "expected header n,k,value");
      continue;
    }
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos) throw ParseError(line_no, "expected three fields");
    BigInt n, k, v;
    if (!parse_bigint(line.substr(0, c1), n) || !parse_bigint(line.substr(c1 + 1, c2 - c1 - 1), k) ||
        !parse_bigint(line.substr(c2 + 1), v) || !n.fits_sint_p() || !k.fits_sint_p()) {
      throw ParseError(line_no, "malformed fields");
    }
    const int ni = static_cast<int>(n.get_si());
    const int ki = static_cast<int>(k.get_si());
    if (ki < 0 || ki > ni || ni < counts::first_row(family)) throw ParseError(line_no, "cell outside triangle");
    cells[{ni, ki}] = v;
    max_n = std::max(max_n, ni);
  }
  TriangularCountTable t = empty_table(family, max_n);
  for (const auto& [nk, v] : cells) t.rows[static_cast<std::size_t>(nk.first - t.first_n)][nk.second] = v;
  return t;
}

TriangularCountTable parse_json(std::string_view text) {
  RowsCollector collector;
  const bool ok = nlohmann::json::sax_parse(text.begin(), text.end(), &collector);
  if (!ok) throw std::runtime_error("json: " + collector.error);
  const Family family = counts::parse_family(collector.family);
  TriangularCountTable t = empty_table(family, static_cast<int>(collector.max_n));
  if (collector.rows.size() != t.rows.size()) throw std::runtime_error("json: row count does not match max_n");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (collector.rows[i].size() != t.rows[i].size()) {
      throw std::runtime_error("json: row " + std::to_string(i + static_cast<std::size_t>(t.first_n)) +
                               " has wrong length");
    }
    for (std::size_t k = 0; k < t.rows[i].size(); ++k) {
      if (!parse_bigint(collector.rows[i][k], t.rows[i][k])) throw std::runtime_error("json: bad integer");
    }
  }
  return t;
}

TriangularCountTable parse_bfile_table(std::string_view text, Family family, const Flattening& layout) {
  const std::vector<BFileEntry> entries = parse_bfile(text);
  std::map<long, const BigInt*> by_index;
  for (const auto& e : entries) by_index[e.index] = &e.value;
  // Keep only complete rows.
  int max_n = counts::first_row(family) - 1;
  for (int n = layout.first_n;; ++n) {
    bool complete = true;
    for (const Cell& c : flatten_cells(layout, n)) {
      if (c.n == n && !by_index.count(c.index)) complete = false;
    }
    if (!complete || n > 4096) break;
    max_n = n;
  }
  TriangularCountTable t = empty_table(family, max_n);
  for (const Cell& c : flatten_cells(layout, max_n)) {
    if (!t.has_row(c.n)) continue;
    t.rows[static_cast<std::size_t>(c.n - t.first_n)][static_cast<std::size_t>(c.k)] = *by_index.at(c.index);
  }
  return t;
}

}  // namespace spm::io
