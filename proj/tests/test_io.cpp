#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "spm/oeis.hpp"
#include "spm/table_io.hpp"

using namespace spm;
using namespace spm::io;
using counts::Family;

TEST_CASE("csv") {
  const auto t = counts::build_table(Family::C, 4);
  const auto csv = render_csv(t);
  CHECK(csv.rfind("n,k,value\n1,0,1\n", 0) == 0);
  CHECK(csv.find("\n4,2,6\n") != std::string::npos);
  CHECK(parse_csv(csv, Family::C) == t);
  CHECK_THROWS_AS(parse_csv("n,k\n", Family::C), ParseError);
  CHECK_THROWS_AS(parse_csv("n,k,value\n2,3,1\n", Family::C), ParseError);
}

TEST_CASE("json") {
  const auto a = counts::build_table(Family::A, 2);
  CHECK(render_json(a) == "{\"family\": \"A\", \"max_n\": 2, \"rows\": [[1], [1, 1], [1, 3, 1]]}\n");
  CHECK(parse_json(render_json(a)) == a);
  // values beyond 64 bits survive
  const auto c = counts::build_table(Family::C, 30);
  CHECK(parse_json(render_json(c)) == c);
  CHECK_THROWS(parse_json("{\"family\": \"A\", \"max_n\": 1, \"rows\": [[1], [1, 1.5]]}"));
  CHECK_THROWS(parse_json("{\"family\": \"A\", \"max_n\": 2, \"rows\": [[1]]}"));
}

TEST_CASE("b-files") {
  const auto entries = parse_bfile("# comment\n\n1 5\n2   -7\r\n3 123456789012345678901234567890\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].index == 1);
  CHECK(entries[1].value == -7);
  CHECK(entries[2].value == BigInt("123456789012345678901234567890"));

  try {
    parse_bfile("1 5\n2 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_bfile("2 5\n1 6\n"), ParseError);
  CHECK_THROWS_AS(parse_bfile("17\n"), ParseError);

  const Flattening layout{1, 1, 0, 0};
  const auto t = counts::build_table(Family::E, 9);
  const auto text = render_bfile(t, layout);
  CHECK(text.rfind("# ", 0) == 0);
  CHECK(parse_bfile_table(text, Family::E, layout) == t);

  const auto cells = flatten_cells({0, 2, 1, 1}, 4);
  REQUIRE(cells.size() == 6);
  CHECK(cells.front().index == 0);
  CHECK(cells.front().n == 2);
  CHECK(cells.front().k == 1);
  CHECK(cells.back().n == 4);
  CHECK(cells.back().k == 3);
}

TEST_CASE("renderings agree after re-parsing") {
  for (Family f : {Family::E, Family::C, Family::A, Family::S, Family::G}) {
    const auto t = counts::build_table(f, 10);
    const auto layout = default_flattening(f);
    CHECK(parse_csv(render(t, Format::Csv, layout), f) == t);
    CHECK(parse_json(render(t, Format::Json, layout)) == t);
    CHECK(parse_bfile_table(render(t, Format::BFile, layout), f, layout) == t);
    CHECK(render(t, Format::Csv, layout) == render(counts::build_table(f, 10), Format::Csv, layout));
  }
  CHECK(parse_format("bfile") == Format::BFile);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("sequence map") {
  const auto defaults = oeis::default_sequence_map();
  CHECK(defaults.size() == 4);
  CHECK(defaults.at("A140945").family == Family::C);
  const auto round = oeis::parse_sequence_map(oeis::render_sequence_map(defaults));
  for (const auto& [id, m] : defaults) {
    CHECK(round.at(id).family == m.family);
    CHECK(round.at(id).layout == m.layout);
  }
  const auto custom = oeis::parse_sequence_map(R"([{"id": "A140945", "family": "C", "first_index": 0}])");
  CHECK(custom.at("A140945").layout.first_index == 0);
  CHECK_THROWS(oeis::parse_sequence_map("{}"));
  CHECK(oeis::bfile_name("A140945") == "b140945.txt");
  CHECK_THROWS_AS(oeis::bfile_name("140945"), std::invalid_argument);
}

TEST_CASE("fixtures directory honours SPM_FIXTURES") {
  ::setenv("SPM_FIXTURES", "/tmp/spm-fixtures-test", 1);
  CHECK(oeis::fixtures_dir() == std::filesystem::path("/tmp/spm-fixtures-test"));
  ::unsetenv("SPM_FIXTURES");
  CHECK_FALSE(oeis::fixtures_dir().empty());

  const auto dir = std::filesystem::temp_directory_path() / "spm-map-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "sequence_map.json") << R"([{"id": "A361355", "family": "E", "first_n": 2}])";
  CHECK(oeis::load_sequence_map(dir).at("A361355").layout.first_n == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("b-file comparison validates the mapping first") {
  const oeis::SequenceMapping mapping{"A140945", Family::C, {1, 1, 0, 0}};
  const auto table = counts::build_table(Family::C, 12);
  const auto entries = parse_bfile(render_bfile(table, mapping.layout));

  const auto good = oeis::compare_bfile(mapping, entries);
  CHECK(good.mapping.valid);
  CHECK(good.pass());
  CHECK(good.table_max_n == 12);
  CHECK(good.compared == 90);

  oeis::SequenceMapping shifted = mapping;
  shifted.layout.first_index = 0;
  const auto bad = oeis::compare_bfile(shifted, entries);
  CHECK_FALSE(bad.mapping.valid);
  CHECK_FALSE(bad.pass());
  CHECK(bad.compared == 0);
  CHECK(std::find(bad.mapping.alternatives.begin(), bad.mapping.alternatives.end(), mapping.layout) !=
        bad.mapping.alternatives.end());
  CHECK(bad.summary().find("not validated") != std::string::npos);

  auto corrupted = entries;
  corrupted[60].value += 1;
  const auto off = oeis::compare_bfile(mapping, corrupted);
  CHECK(off.mapping.valid);
  CHECK_FALSE(off.pass());
  REQUIRE(off.first_mismatch);
  CHECK(off.first_mismatch->index == 61);
  CHECK(off.matched + 1 == off.compared);
}

TEST_CASE("oracle tables for mapping validation") {
  CHECK(oeis::oracle_table(Family::C, 4) == counts::build_table(Family::C, 4));
  CHECK(oeis::oracle_table(Family::S, 4) == counts::build_table(Family::S, 4));
  CHECK(oeis::oracle_table(Family::G, 4) == counts::build_table(Family::G, 4));
}
