#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "cy3/catalog.hpp"

using namespace cy3;

namespace {

std::string catalog_path() {
  return std::string(CY3LAB_TEST_DATA_DIR) + "/catalog.txt";
}

std::vector<CatalogEntry> shipped() { return load_catalog_file(catalog_path()); }

}  // namespace

TEST_CASE("parse a rank-0 line") {
  auto e = parse_case_notation("0-1 | (0+,0-,0-) (0-,0+,0-) | - | 51 3 | 0");
  CHECK(e.label == Label{0, 1});
  CHECK(e.shift_gens.empty());
  CHECK(e.expected_h11 == 51);
  CHECK(e.expected_h21 == 3);
  CHECK(e.expected_pi1 == Pi1::Zero);
  // twists: (+,-,-) and (-,+,-) with no translation parts
  CHECK(e.twist_gens[0][0].sign == +1);
  CHECK(e.twist_gens[0][1].sign == -1);
  CHECK(e.twist_gens[0][2].sign == -1);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 3; ++i) CHECK(e.twist_gens[k][i].base == 0);
}

TEST_CASE("parse a line with one shift generator") {
  auto e = parse_case_notation("1-6 | (0+,0-,0-) (0-,0+,0-) | (t,t,0) | 31 7 | 0");
  REQUIRE(e.shift_gens.size() == 1);
  CHECK(e.shift_gens[0][0].base == 2);  // tau/2
  CHECK(e.shift_gens[0][1].base == 2);
  CHECK(e.shift_gens[0][2].base == 0);
  CHECK_FALSE(e.shift_gens[0][0].has_sign);
}

TEST_CASE("malformed lines are rejected") {
  // bad base token and wrong twist count
  CHECK_THROWS_AS(parse_case_notation("9-9 | (2+,0-,0-) | - | 0 0 | 0"),
                  ParseError);
  // odd number of minus signs
  CHECK_THROWS_AS(
      parse_case_notation("0-1 | (0-,0-,0-) (0-,0+,0-) | - | 51 3 | 0"),
      ParseError);
  // sign on a shift
  CHECK_THROWS_AS(
      parse_case_notation("1-1 | (0+,0-,0-) (0-,0+,0-) | (t+,t,t) | 27 3 | C"),
      ParseError);
  // shift count does not match the declared rank
  CHECK_THROWS_AS(
      parse_case_notation("2-1 | (0+,0-,0-) (0-,0+,0-) | (1,1,1) | 15 3 | D"),
      ParseError);
}

TEST_CASE("shipped catalog loads with 35 validated entries") {
  auto cat = shipped();
  REQUIRE(cat.size() == 35);
  CHECK(cat.front().label == Label{0, 1});
  CHECK(cat.back().label == Label{4, 1});
  std::set<std::string> labels;
  for (const auto& e : cat) labels.insert(e.label.str());
  CHECK(labels.size() == 35);
  CHECK(labels.count("3-2") == 0);
}

TEST_CASE("degenerate catalog documents are rejected") {
  {
    std::istringstream in("");
    CHECK_THROWS_WITH_AS(load_catalog(in), "entry count 0 != 35", ParseError);
  }
  {
    std::istringstream in("3-2 | (0+,0-,0-) (0-,0+,0-) | (0,t,1);(t,1,0);(1,0,t) | 12 6 | 0\n");
    CHECK_THROWS_AS(load_catalog(in), ParseError);
  }
  {
    // duplicate label
    std::ifstream f(catalog_path());
    std::stringstream all;
    all << f.rdbuf();
    std::string text = all.str();
    text += "0-1 | (0+,0-,0-) (0-,0+,0-) | - | 51 3 | 0\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(load_catalog(in), ParseError);
  }
}

TEST_CASE("round trip: render(parse(line)) equals the shipped line") {
  std::ifstream f(catalog_path());
  REQUIRE(f.good());
  std::string line;
  int checked = 0;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto e = parse_case_notation(line);
    CHECK(render_case(e) == line);
    // idempotence of the canonical form
    CHECK(render_case(parse_case_notation(render_case(e))) == render_case(e));
    ++checked;
  }
  CHECK(checked == 35);
}

TEST_CASE("the four (3,3) rows and the ten h21=3 rows are the known ones") {
  auto cat = shipped();
  std::set<std::string> free_rows, ten;
  for (const auto& e : cat) {
    if (e.expected_h11 == 3 && e.expected_h21 == 3) {
      free_rows.insert(e.label.str());
      CHECK(e.expected_pi1 == Pi1::B);
    }
    if (e.expected_h21 == 3) ten.insert(e.label.str());
  }
  CHECK(free_rows == std::set<std::string>{"0-4", "1-5", "1-11", "2-12"});
  CHECK(ten == std::set<std::string>{"0-1", "0-4", "1-1", "1-5", "1-11", "2-1",
                                     "2-9", "2-12", "3-5", "4-1"});
}
