// spm: count tables, identity verification, oracle runs and OEIS checks.
//
// Exit status: 0 all checks pass, 1 a verification failed, 2 usage or
// configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "oeis_fetch.hpp"
#include "spm/combinum.hpp"
#include "spm/oeis.hpp"
#include "spm/oracle.hpp"
#include "spm/spcounts.hpp"
#include "spm/table_io.hpp"
#include "spm/verify.hpp"

namespace {

using namespace spm;
using counts::Family;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

io::Flattening layout_for(Family family, const std::filesystem::path& fixtures) {
  for (const auto& [id, m] : oeis::load_sequence_map(fixtures)) {
    if (m.family == family) return m.layout;
  }
  return io::default_flattening(family);
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  std::string family;
  int max_n = 0;
  std::string format = "csv";
  std::string out;
  int order = 12;
};

int run_table(const TableArgs& a, const std::filesystem::path& fixtures) {
  const Family family = counts::parse_family(a.family);
  const io::Format format = io::parse_format(a.format);
  if (a.max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (a.max_n > a.order) {
    throw UsageError("--max-n " + std::to_string(a.max_n) + " exceeds truncation order " + std::to_string(a.order) +
                     " (raise --order)");
  }
  const auto table = counts::build_table(family, a.max_n, a.order);
  write_output(io::render(table, format, layout_for(family, fixtures)), a.out);
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  int order = 12;
  std::string format = "text";
  std::string inject_fault;
};

std::function<BigInt(long, long)> parse_fault(const std::string& fault) {
  // stirling2:N,K  ->  S2(N,K) is off by one
  long n = 0;
  long k = 0;
  char tail = 0;
  if (std::sscanf(fault.c_str(), "stirling2:%ld,%ld%c", &n, &k, &tail) != 2) {
    throw UsageError("--inject-fault expects stirling2:N,K");
  }
  return [n, k](long a, long b) {
    BigInt v = combinum::stirling2(a, b);
    if (a == n && b == k) v += 1;
    return v;
  };
}

int run_verify_cmd(const VerifyArgs& a) {
  if (a.order < 1) throw UsageError("--order must be at least 1");
  verify::Config config;
  config.order = a.order;
  if (!a.inject_fault.empty()) config.stirling2_override = parse_fault(a.inject_fault);
  const auto report = verify::run_verify(config);
  std::cout << (a.format == "json" ? report.render_json() : report.render_text());
  return report.ok() ? 0 : kExitFail;
}

// --- oracle ----------------------------------------------------------------

struct OracleArgs {
  int max_n = oracle::kDefaultMaxN;
  bool compare = false;
  std::string dump;
};

std::string row_str(const std::vector<BigInt>& row) {
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? " " : "") + row[i].get_str();
  return s;
}

int run_oracle_cmd(const OracleArgs& a) {
  if (a.max_n < 1) throw UsageError("--max-n must be at least 1");
  const auto catalog = oracle::build_catalog(a.max_n, {oracle::kHardMaxN, true});

  struct Rows {
    Family family;
    std::vector<std::vector<BigInt>> rows;  // index n - 1
  };
  std::vector<Rows> found{{Family::C, {}}, {Family::E, {}}, {Family::A, {}}, {Family::S, {}}};
  for (int n = 1; n <= a.max_n; ++n) {
    found[0].rows.push_back(oracle::connected_counts(catalog, n, false));
    found[1].rows.push_back(oracle::connected_counts(catalog, n, true));
    const auto q = oracle::quasi_counts(catalog, n);
    found[2].rows.push_back(q.all);
    found[3].rows.push_back(q.simple);
  }

  std::size_t diffs = 0;
  std::ostringstream out;
  for (const auto& f : found) {
    const auto formula = a.compare ? counts::build_table(f.family, a.max_n, a.max_n) : counts::TriangularCountTable{};
    for (int n = 1; n <= a.max_n; ++n) {
      const auto& row = f.rows[static_cast<std::size_t>(n - 1)];
      out << counts::family_name(f.family) << " n=" << n << ": " << row_str(row) << '\n';
      if (!a.compare) continue;
      for (int k = 0; k <= n; ++k) {
        if (row[static_cast<std::size_t>(k)] != formula.at(n, k)) {
          ++diffs;
          out << "  DIFF " << counts::family_name(f.family) << " (n=" << n << ", k=" << k << "): oracle "
              << row[static_cast<std::size_t>(k)] << ", formula " << formula.at(n, k) << '\n';
        }
      }
    }
  }
  if (a.compare) out << "compare: " << diffs << " diffs over n <= " << a.max_n << '\n';
  std::cout << out.str();

  if (!a.dump.empty()) {
    std::ostringstream d;
    oracle::dump(catalog, d);
    write_output(d.str(), a.dump);
  }
  return diffs == 0 ? 0 : kExitFail;
}

// --- oeis ------------------------------------------------------------------

struct OeisArgs {
  std::string id;
  std::string bfile;
  bool fetch = false;
};

int run_oeis_cmd(const OeisArgs& a, const std::filesystem::path& fixtures) {
  const auto map = oeis::load_sequence_map(fixtures);
  const auto it = map.find(a.id);
  if (it == map.end()) throw UsageError("no sequence map entry for " + a.id);

  std::filesystem::path path;
  if (!a.bfile.empty()) {
    path = a.bfile;
  } else if (a.fetch) {
    path = tools::fetch_bfile(a.id, fixtures);
    std::cerr << "fetched " << path.string() << '\n';
  } else {
    path = fixtures / oeis::bfile_name(a.id);
    if (!std::filesystem::exists(path)) {
      throw UsageError("no fixture " + path.string() + " (use --bfile PATH or --fetch)");
    }
  }

  const auto entries = io::parse_bfile(read_file(path));
  const auto result = oeis::compare_bfile(it->second, entries);
  std::cout << (result.pass() ? "PASS " : "FAIL ") << result.summary() << '\n';
  return result.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series-parallel matroid counts: tables, identity checks, brute-force oracle, OEIS comparison"};
  app.require_subcommand(1);
  std::string fixtures_opt;
  app.add_option("--fixtures", fixtures_opt, "b-file fixtures directory (default: $SPM_FIXTURES or built-in)");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a count triangle");
  table_cmd->add_option("--family", table.family, "E, C, A, S or G")->required();
  table_cmd->add_option("--max-n", table.max_n, "Last row")->required();
  table_cmd->add_option("--format", table.format, "csv, json or bfile")->capture_default_str();
  table_cmd->add_option("--out", table.out, "Output file (default stdout)");
  table_cmd->add_option("--order", table.order, "Truncation order")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suites");
  verify_cmd->add_option("--order", verify_args.order, "Truncation order for series identities")->capture_default_str();
  verify_cmd->add_option("--format", verify_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("--inject-fault", verify_args.inject_fault)->group("");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate matroids and count them");
  oracle_cmd->add_option("--max-n", oracle_args.max_n, "Largest ground set")->capture_default_str();
  oracle_cmd->add_flag("--compare", oracle_args.compare, "Diff against the formula tables");
  oracle_cmd->add_option("--dump", oracle_args.dump, "Write the catalog to this file");

  OeisArgs oeis_args;
  auto* oeis_cmd = app.add_subcommand("oeis", "Compare an OEIS b-file with the formula table");
  oeis_cmd->add_option("--id", oeis_args.id, "Sequence id, e.g. A140945")->required();
  auto* bfile_opt = oeis_cmd->add_option("--bfile", oeis_args.bfile, "Local b-file");
  oeis_cmd->add_flag("--fetch", oeis_args.fetch, "Download the b-file into the fixtures directory")->excludes(bfile_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::filesystem::path fixtures = fixtures_opt.empty() ? oeis::fixtures_dir() : std::filesystem::path(fixtures_opt);
  try {
    if (*table_cmd) return run_table(table, fixtures);
    if (*verify_cmd) return run_verify_cmd(verify_args);
    if (*oracle_cmd) return run_oracle_cmd(oracle_args);
    if (*oeis_cmd) return run_oeis_cmd(oeis_args, fixtures);
  } catch (const UsageError& e) {
    std::cerr << "spm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const oracle::CapExceeded& e) {
    std::cerr << "spm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "spm: " << e.what() << '\n';
    return kExitUsage;
  } catch (const io::ParseError& e) {
    std::cerr << "spm: b-file " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "spm: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
